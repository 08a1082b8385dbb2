#include "polyspace/intersection.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

#include "polyspace/errors.hpp"
#include "polyspace/kernels.hpp"

namespace polyspace {

bool stability_of_partition(const WeightVector& m, const Partition& P) {
  if (P.size() < 3) return false;
  for (Subset part : P.parts())
    if (m.classify(part) == SubsetClass::Long) return false;
  return true;
}

int point_count(const WeightVector& m, const Partition& P) {
  if (P.size() != 3)
    throw Error(errc::bad_argument, "point count needs exactly 3 parts");
  // strict triangle inequality on the three masses == every part Short
  for (Subset part : P.parts())
    if (m.classify(part) != SubsetClass::Short) return 0;
  return 1;
}

namespace {

std::pair<int, int> default_partners(const Partition& P, int part_with_i) {
  // parts are sorted by minimum, so the first two indices != part_with_i
  // are the two parts with smallest minima
  int first = -1;
  for (int a = 0; a < P.size(); ++a) {
    if (a == part_with_i) continue;
    if (first < 0) {
      first = a;
    } else {
      return {first, a};
    }
  }
  throw Error(errc::too_few_parts, "need two partner parts");
}

}  // namespace

CycleSum multiply_l_into_cycle(const WeightVector& m, int i, const CycleSum& C,
                               const CycleEvalOptions& opts) {
  CycleSum out;
  for (const auto& [P, coeff] : C.terms) {
    if (P.size() < 4)
      throw Error(errc::too_few_parts,
                  "cycle multiplication needs at least 4 parts");
    const int A = P.part_containing(i);
    auto [J, K] = opts.partner_rule ? opts.partner_rule(P, A)
                                    : default_partners(P, A);
    auto emit = [&](Partition next, const Int& c) {
      if (stability_of_partition(m, next)) out.add(next, c);
    };
    emit(P.merge(A, J), coeff);
    emit(P.merge(A, K), coeff);
    emit(P.merge(J, K), -coeff);
  }
  return out;
}

Int evaluate_monomial_by_cycles(const WeightVector& m, const Monomial& M,
                                const CycleEvalOptions& opts) {
  require_smooth(m);
  const int n = m.n();
  if (M.degree() != n - 3)
    throw Error(errc::wrong_degree, "monomial degree must be n-3");

  CycleSum C;
  C.add(Partition::singletons(n), 1);
  for (int i : bit_indices(M.lSet)) C = multiply_l_into_cycle(m, i, C, opts);
  for (int k = 0; k < M.pPow; ++k) {
    C = multiply_l_into_cycle(m, opts.p_index, C, opts);
    C = multiply_l_into_cycle(m, opts.p_index, C, opts);
  }

  Int total = 0;
  for (const auto& [P, coeff] : C.terms) total += coeff * point_count(m, P);
  return total;
}

Int top_intersection(const WeightVector& m, Subset J, int k,
                     const SignSumChoice& choice, int threads) {
  require_smooth(m, threads);
  const int n = m.n();
  if (J.bits >= (1ull << n))
    throw Error(errc::bad_argument, "monomial index out of range");
  if (J.count() + 2 * k != n - 3 || k < 0)
    throw Error(errc::wrong_degree, "monomial degree must be n-3");

  Subset I(0);
  if (choice.I) {
    I = *choice.I;
    if (!J.subset_of(I) || I.count() != n - 2 || I.bits >= (1ull << n))
      throw Error(errc::bad_argument,
                  "support must contain the l-set and have n-2 elements");
  } else {
    // drop the two largest indices outside J
    I = Subset::full(n);
    for (int i = n - 1, dropped = 0; i >= 0 && dropped < 2; --i) {
      if (!J.contains(i)) {
        I = I.without(i);
        ++dropped;
      }
    }
  }
  const Subset outside = I.complement_in(n);
  const int alpha = outside.min_index();
  const int beta = (outside.without(alpha)).min_index();

  int gamma = choice.gamma.value_or(I.min_index());
  if (!I.contains(gamma))
    throw Error(errc::bad_argument, "designated index must lie in the support");

  // positions that flip: I minus gamma; product positions: I \ J
  std::vector<int> pos;
  pos.reserve(I.count() - 1);
  for (int i : bit_indices(I.without(gamma))) pos.push_back(i);
  std::uint64_t prod_mask = 0;
  for (std::size_t b = 0; b < pos.size(); ++b)
    if (!J.contains(pos[b])) prod_mask |= 1ull << b;

  kernels::SignSumResult res;
  if (m.has_fast64()) {
    const auto& w = m.scaled64();
    std::vector<std::int64_t> flip;
    flip.reserve(pos.size());
    for (int i : pos) flip.push_back(w[i]);
    std::int64_t base = w[gamma];
    for (std::int64_t wi : flip) base += wi;
    std::int64_t lo = w[alpha] - w[beta];
    if (lo < 0) lo = -lo;
    std::int64_t hi = w[alpha] + w[beta];
    res = kernels::sign_window_sum_parallel<std::int64_t>(flip, prod_mask, lo,
                                                          hi, base, threads);
  } else {
    const auto& w = m.scaled();
    std::vector<Int> flip;
    flip.reserve(pos.size());
    for (int i : pos) flip.push_back(w[i]);
    Int base = w[gamma];
    for (const Int& wi : flip) base += wi;
    Int lo = abs(Int(w[alpha] - w[beta]));
    Int hi = w[alpha] + w[beta];
    res = kernels::sign_window_sum_parallel<Int>(
        std::span<const Int>(flip), prod_mask, lo, hi, base, threads);
  }
  if (res.wall_hit)
    throw Error(errc::wall_hit,
                "signed sum hit a window boundary on smooth input");
  return Int(res.sum);
}

Rat evaluate(const WeightVector& m, const RingElement& e, int threads) {
  if (e.is_zero()) return 0;
  int degree = -1;
  if (!e.is_homogeneous(&degree) || degree != m.n() - 3)
    throw Error(errc::not_homogeneous_top,
                "element must be homogeneous of degree n-3");
  bool integral = true;
  Rat total = 0;
  for (const auto& [mono, coeff] : e.terms()) {
    if (!is_integer(coeff)) integral = false;
    total += coeff *
             Rat(top_intersection(m, mono.lSet, mono.pPow, {}, threads));
  }
  assert(!integral || is_integer(total));
  return total;
}

RingElement divisor_class(int i, int j) {
  if (i == j) throw Error(errc::equal_indices, "divisor needs two indices");
  return Rat(1, 2) * (RingElement::generator_l(i) + RingElement::generator_l(j));
}

RingElement antidivisor_class(int i, int j) {
  if (i == j) throw Error(errc::equal_indices, "divisor needs two indices");
  return Rat(1, 2) * (RingElement::generator_l(i) - RingElement::generator_l(j));
}

RingElement expand_d_epsilon(Subset I, const SignVector& eps, int i0) {
  if (!I.contains(i0) || eps.support != I || !eps.minus.subset_of(I) ||
      eps.minus.contains(i0))
    throw Error(errc::bad_center,
                "center must lie in the support with positive sign");
  RingElement prod = RingElement::one();
  for (int i : bit_indices(I.without(i0))) {
    Rat sign = eps.minus.contains(i) ? -1 : 1;
    prod = multiply(prod, RingElement::generator_l(i0) +
                              sign * RingElement::generator_l(i));
  }
  Rat scale = Rat(1) / Rat(Int(1) << (I.count() - 1));
  return scale * prod;
}

}  // namespace polyspace
