#pragma once

#include <string>
#include <vector>

#include "polyspace/partition.hpp"
#include "polyspace/poincare.hpp"
#include "polyspace/positivity.hpp"
#include "polyspace/rational.hpp"
#include "polyspace/ring.hpp"
#include "polyspace/subset.hpp"
#include "polyspace/weights.hpp"

// Textual formats. Indices are 1-based everywhere here; subsets render as
// "{1 2 3}", partitions as "{1 2|3|4 5}", monomials as "l1*l2*p^2",
// elements as "l1*l2 + p", weight vectors as "1,1,1,3/2".

namespace polyspace {

std::string format_rat(const Rat& r);
Rat parse_rat(const std::string& text);  // a, -a, a/b with b > 0

// Strict weight-vector grammar: comma-separated `a` or `a/b`, a and b
// positive decimal integers.
std::vector<Rat> parse_weights(const std::string& text);
std::string format_weights(const WeightVector& m);

// Signed rationals, for divisor coefficients.
std::vector<Rat> parse_rat_list(const std::string& text);

// Comma-separated 1-based indices, validated against n; empty string = {}.
Subset parse_index_set(const std::string& text, int n);

std::string format_subset(Subset I);
std::string format_polynomial(const IntPolynomial& P);
std::string format_monomial(const Monomial& M);
std::string format_ring_element(const RingElement& e);
std::string format_partition(const Partition& P);
std::string format_quadrangle(const Quadrangle& Q);

// `l1*l2*p^2` grammar; rejects repeated l-indices (write p) and indices
// outside 1..n; `1` is the unit monomial.
Monomial parse_monomial(const std::string& text, int n);

// Sums of monomials with optional rational coefficients: `l1*l2 - 2*p`.
RingElement parse_ring_element(const std::string& text, int n);

}  // namespace polyspace
