#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "polyspace/partition.hpp"
#include "polyspace/rational.hpp"
#include "polyspace/ring.hpp"
#include "polyspace/subset.hpp"
#include "polyspace/weights.hpp"

namespace polyspace {

// ---- Route B: cycle reduction ----

// False iff the cycle is zero: some part is Long, or fewer than 3 parts.
bool stability_of_partition(const WeightVector& m, const Partition& P);

// For a 3-part partition: 1 iff the part masses satisfy the strict triangle
// inequality (equivalently all parts Short), else 0.
int point_count(const WeightVector& m, const Partition& P);

// Given the part index holding the multiplied generator, picks the two
// partner part indices. Default rule: the two other parts with smallest
// minima. Tests swap in other deterministic rules.
using PartnerRule =
    std::function<std::pair<int, int>(const Partition&, int part_with_i)>;

struct CycleEvalOptions {
  int p_index = 0;            // p is evaluated as l_gamma^2 with this gamma
  PartnerRule partner_rule;   // empty = default smallest-minima rule
};

// One step l_i . D_{I,J,K,...} = D_{(IJ),K,...} + D_{(IK),J,...} - D_{I,(JK),...}
// applied to every term; unstable partitions are dropped eagerly.
CycleSum multiply_l_into_cycle(const WeightVector& m, int i, const CycleSum& C,
                               const CycleEvalOptions& opts = {});

// Reduce l_J p^k against the all-singleton fundamental class and count the
// surviving 3-part points. Requires |J| + 2k = n-3.
Int evaluate_monomial_by_cycles(const WeightVector& m, const Monomial& M,
                                const CycleEvalOptions& opts = {});

// ---- Route A: sign-sum formula ----

struct SignSumChoice {
  std::optional<Subset> I;    // must satisfy J ⊆ I, |I| = n-2
  std::optional<int> gamma;   // must lie in I
};

// Sum of sgn(eps_I . m_I) * eps_{I\J} over sign vectors on I with
// eps_gamma = +1 and |m_alpha - m_beta| < |(eps_I, m_I)| < m_alpha + m_beta,
// where {alpha, beta} = complement of I. Default I drops the two largest
// indices outside J; default gamma = min(I).
Int top_intersection(const WeightVector& m, Subset J, int k,
                     const SignSumChoice& choice = {}, int threads = 1);

// Linear extension of top_intersection to a homogeneous top-degree element.
Rat evaluate(const WeightVector& m, const RingElement& e, int threads = 1);

// ---- Divisor dictionary ----

RingElement divisor_class(int i, int j);       // (l_i + l_j)/2
RingElement antidivisor_class(int i, int j);   // (l_i - l_j)/2

struct SignVector {
  Subset support;   // I
  Subset minus;     // positions with eps = -1 (subset of support)
};

// 2^{1-|I|} * prod over i in I\{i0} of (l_{i0} + eps_i l_i), expanded
// through the l^2 -> p rewrite. Requires i0 in I with eps_{i0} = +1.
RingElement expand_d_epsilon(Subset I, const SignVector& eps, int i0);

}  // namespace polyspace
