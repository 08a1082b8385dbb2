#include "polyspace/positivity.hpp"

#include <bit>
#include <cassert>

#include "polyspace/errors.hpp"
#include "polyspace/intersection.hpp"
#include "polyspace/kernels.hpp"

namespace polyspace {

namespace {

// The three splittings of four parts into complementary pairs.
constexpr int kPairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};

Quadrangle classify_quadrangle(const WeightVector& m, const Partition& P) {
  // count, per part, the Long pair-sums it participates in; exactly one
  // side of each complementary pair is Long for smooth m
  int counts[4] = {0, 0, 0, 0};
  for (const auto& [a, b, c, d] : kPairings) {
    SubsetClass cls = m.classify(P.part(a) | P.part(b));
    assert(cls != SubsetClass::Wall);
    if (cls == SubsetClass::Long) {
      ++counts[a];
      ++counts[b];
    } else {
      ++counts[c];
      ++counts[d];
    }
  }
  for (int p = 0; p < 4; ++p) {
    if (counts[p] == 3) return Quadrangle{P, QuadrangleKind::Star, p};
    if (counts[p] == 0) return Quadrangle{P, QuadrangleKind::Triangle, p};
  }
  throw Error(errc::wall_hit, "quadrangle pair-sum pattern is inconsistent");
}

}  // namespace

std::vector<Quadrangle> quadrangles(const WeightVector& m, int threads) {
  require_smooth(m, threads);
  std::vector<Quadrangle> out;
  for (const Partition& P : partitions_into(m.n(), 4)) {
    if (!stability_of_partition(m, P)) continue;
    out.push_back(classify_quadrangle(m, P));
  }
  return out;
}

RingElement first_chern_class(int n) {
  RingElement c1;
  for (int i = 0; i < n; ++i) c1 += RingElement::generator_l(i);
  return c1;
}

RingElement first_chern_class_divisor_form(int n) {
  RingElement c1;
  for (int i = 0; i < n; ++i) c1 += divisor_class(i, (i + 1) % n);
  return c1;
}

AmpleResult is_ample(const WeightVector& m, const DivisorCoefficients& a,
                     int threads) {
  if (static_cast<int>(a.a.size()) != m.n())
    throw Error(errc::bad_argument, "need one coefficient per side");
  auto part_sum = [&](Subset part) {
    Rat sum = 0;
    for (int i : bit_indices(part)) sum += a.a[i];
    return sum;
  };
  for (const Quadrangle& Q : quadrangles(m, threads)) {
    const Rat special = part_sum(Q.parts.part(Q.special));
    bool ok;
    if (Q.kind == QuadrangleKind::Triangle) {
      ok = special > 0;
    } else {
      Rat others = 0;
      for (int p = 0; p < 4; ++p)
        if (p != Q.special) others += part_sum(Q.parts.part(p));
      ok = special < others;
    }
    if (!ok) return AmpleResult{false, Q};
  }
  return AmpleResult{true, std::nullopt};
}

bool is_fano_quadrangle(const WeightVector& m, int threads) {
  DivisorCoefficients ones{std::vector<Rat>(m.n(), 1)};
  return is_ample(m, ones, threads).ample;
}

std::vector<MaximalDegeneration> maximal_degenerations(const WeightVector& m,
                                                       int threads) {
  require_smooth(m, threads);
  const int n = m.n();
  std::vector<MaximalDegeneration> out;
  auto consider = [&](std::uint64_t mask, auto mass, const auto& w,
                      const auto& total) {
    if (!(2 * mass < total)) return;  // not Short
    for (int s = 0; s < n; ++s) {
      if ((mask >> s) & 1) continue;
      if (!(2 * (mass + w[s]) > total)) return;  // stays Short: not maximal
    }
    out.push_back(
        MaximalDegeneration{Subset(mask), n - std::popcount(mask) - 2});
  };
  if (m.has_fast64()) {
    kernels::ordered_scan<std::int64_t>(
        m.scaled64(), [&](std::uint64_t mask, std::int64_t mass) {
          consider(mask, mass, m.scaled64(), m.scaled_total64());
        });
  } else {
    kernels::ordered_scan<Int>(std::span<const Int>(m.scaled()),
                               [&](std::uint64_t mask, const Int& mass) {
                                 consider(mask, mass, m.scaled(),
                                          m.scaled_total());
                               });
  }
  return out;
}

bool is_fano_maximal(const WeightVector& m, int threads) {
  const int n = m.n();
  for (const MaximalDegeneration& d : maximal_degenerations(m, threads)) {
    if (d.dimension == 0) continue;
    if (2 * d.dimension <= n - 4) return false;
  }
  return true;
}

FanoReport fano_report(const WeightVector& m, int threads) {
  FanoReport report;
  DivisorCoefficients ones{std::vector<Rat>(m.n(), 1)};
  AmpleResult amp = is_ample(m, ones, threads);
  report.method_quadrangle = amp.ample;
  if (!amp.ample) report.star_witness = amp.violation;

  report.method_maximal = true;
  const int n = m.n();
  for (const MaximalDegeneration& d : maximal_degenerations(m, threads)) {
    if (d.dimension == 0 || 2 * d.dimension > n - 4) continue;
    report.method_maximal = false;
    report.maximal_witness = d;
    break;
  }
  report.fano = report.method_quadrangle;
  return report;
}

}  // namespace polyspace
