#pragma once

#include "json.hpp"

#include "polyspace/partition.hpp"
#include "polyspace/poincare.hpp"
#include "polyspace/positivity.hpp"
#include "polyspace/rational.hpp"
#include "polyspace/ring.hpp"
#include "polyspace/weights.hpp"

// JSON encoding. All exact numbers are decimal strings ("a" or "a/b") so no
// consumer ever rounds them. Indices are 1-based.

namespace polyspace {

nlohmann::json weights_json(const WeightVector& m);
std::vector<Rat> weights_from_json(const nlohmann::json& j);

nlohmann::json polynomial_json(const IntPolynomial& P);
IntPolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json ring_element_json(const RingElement& e);
RingElement ring_element_from_json(const nlohmann::json& j);

nlohmann::json subset_json(Subset I);
nlohmann::json partition_json(const Partition& P);
nlohmann::json quadrangle_json(const Quadrangle& Q);
nlohmann::json maximal_degeneration_json(const MaximalDegeneration& d);
nlohmann::json fano_json(const FanoReport& r);

}  // namespace polyspace
