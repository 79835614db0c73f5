#include "liftlab/json_io.hpp"

namespace liftlab {

json factorization_json(const Factorization& f) {
  json a = json::array();
  for (Int c : f.v) a.push_back(c);
  return a;
}

json binomial_json(const Binomial& B) {
  return json{{"lhs", factorization_json(B.lhs)},
              {"rhs", factorization_json(B.rhs)},
              {"text", B.text()}};
}

json semigroup_json(const NumericalSemigroup& S) {
  json a = json::array();
  for (Int g : S.generators()) a.push_back(g);
  json ap = json::array();
  for (Int w : S.apery()) ap.push_back(w);
  return json{{"gens", a}, {"apery", ap}, {"frobenius", S.frobenius()}};
}

json cm_json(const CmReport& rep) {
  json ws = json::array();
  for (const CmWitness& w : rep.witnesses) {
    ws.push_back(json{{"M", factorization_json(w.M)},
                      {"bestN", factorization_json(w.best_N)},
                      {"deficit", w.deficit},
                      {"kThreshold", w.k_threshold}});
  }
  return json{{"cm", rep.cm}, {"k0", rep.k0}, {"witnesses", ws}};
}

json betti_json(const BettiTable& T) {
  json out = json::object();
  for (const auto& [i, row] : T.rows) {
    json r = json::object();
    for (const auto& [b, mult] : row) r[std::to_string(b)] = mult;
    out[std::to_string(i)] = r;
  }
  return out;
}

json bigraded_json(const KoszulBettiResult& K) {
  json out = json::object();
  for (std::size_t i = 0; i < K.graded.size(); ++i) {
    if (K.graded[i].empty()) continue;
    json row = json::array();
    for (const BigradedEntry& e : K.graded[i])
      row.push_back(json{{"sdeg", e.s_degree}, {"tdeg", e.total_degree}, {"mult", e.mult}});
    out[std::to_string(i)] = row;
  }
  return out;
}

json strong_json(const StrongIndispensability& si) {
  json out{{"strong", si.value}};
  if (si.violation) {
    out["violation"] = json{{"i", (*si.violation)[0]},
                            {"b", (*si.violation)[1]},
                            {"bPrime", (*si.violation)[2]}};
  }
  json warns = json::array();
  for (const auto& [i, b] : si.repeated_degrees)
    warns.push_back(json{{"i", i}, {"b", b}});
  out["repeatedDegrees"] = warns;
  return out;
}

std::string betti_csv(const BettiTable& T) {
  std::string s = "i,b,multiplicity\n";
  for (const auto& [i, row] : T.rows)
    for (const auto& [b, mult] : row)
      s += std::to_string(i) + "," + std::to_string(b) + "," + std::to_string(mult) + "\n";
  return s;
}

}  // namespace liftlab
