#pragma once

#include <json.hpp>

#include "liftlab/betti.hpp"
#include "liftlab/cm.hpp"
#include "liftlab/semigroup.hpp"
#include "liftlab/tangent_cone.hpp"
#include "liftlab/toric.hpp"

namespace liftlab {

// Order-preserving objects: emitted keys keep insertion order, so numeric
// keys print in numeric order and every serialization is deterministic.
using json = nlohmann::ordered_json;

json factorization_json(const Factorization& f);
json binomial_json(const Binomial& B);
json semigroup_json(const NumericalSemigroup& S);
json cm_json(const CmReport& rep);

/// {"i": {"b": multiplicity, ...}, ...} with string keys, e.g.
/// {"1":{"8":1,"9":1,"10":1},"2":{"13":1,"14":1}}.
json betti_json(const BettiTable& T);

/// {"i": [{"sdeg":b,"tdeg":d,"mult":m}, ...], ...} for nonzero rows.
json bigraded_json(const KoszulBettiResult& K);

json strong_json(const StrongIndispensability& si);

/// "i,b,multiplicity" header plus one row per nonzero entry, i then b asc.
std::string betti_csv(const BettiTable& T);

}  // namespace liftlab
