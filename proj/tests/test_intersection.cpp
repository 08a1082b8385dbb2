#include <algorithm>
#include <initializer_list>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "doctest.h"
#include "polyspace/errors.hpp"
#include "polyspace/intersection.hpp"
#include "polyspace/partition.hpp"
#include "polyspace/ring.hpp"
#include "polyspace/weights.hpp"
#include "testsupport.hpp"

using namespace polyspace;
using testsupport::expect_error;
using testsupport::wv;

namespace {

Partition parts_of(std::initializer_list<std::initializer_list<int>> groups,
                   int n) {
  std::vector<Subset> parts;
  for (auto g : groups) {
    Subset s;
    for (int i : g) s = s.with(i);
    parts.push_back(s);
  }
  return Partition::from_parts(parts, n);
}

RingElement sum_l(int n) {
  RingElement e = RingElement::zero();
  for (int i = 0; i < n; ++i) e = e + RingElement::generator_l(i);
  return e;
}

// all top-degree monomials l_J p^k with |J| + 2k = n-3
std::vector<Monomial> top_monomials(int n) { return monomial_basis(n, n - 3); }

}  // namespace

TEST_CASE("partition container") {
  Partition s = Partition::singletons(4);
  CHECK(s.size() == 4);
  CHECK(s.part_containing(2) == 2);

  Partition p = parts_of({{2, 3}, {0, 1}, {4}}, 5);  // re-sorted by minima
  CHECK(p.part(0).bits == 0b00011);
  CHECK(p.part(1).bits == 0b01100);
  CHECK(p.part(2).bits == 0b10000);
  CHECK(p.part_containing(3) == 1);
  CHECK(p.merge(1, 2) == parts_of({{0, 1}, {2, 3, 4}}, 5));

  CHECK(expect_error([] {
          Partition::from_parts({Subset(0b011), Subset(0b110)}, 3);
        }).code() == errc::bad_argument);
  CHECK(expect_error([] {
          Partition::from_parts({Subset(0b001)}, 2);
        }).code() == errc::bad_argument);
  CHECK(expect_error([] {
          Partition::from_parts({Subset(0b01), Subset(0)}, 1);
        }).code() == errc::bad_argument);

  std::vector<Partition> p42 = partitions_into(4, 2);
  CHECK(p42.size() == 7);
  CHECK(p42.front() == parts_of({{0, 1, 2}, {3}}, 4));
  for (const Partition& q : p42) CHECK(q.size() == 2);
  CHECK(partitions_into(5, 3).size() == 25);
}

TEST_CASE("stability and point counts") {
  WeightVector pent = wv({1, 1, 1, 1, 1});
  Partition good = parts_of({{0, 1}, {2, 3}, {4}}, 5);
  CHECK(stability_of_partition(pent, good));
  CHECK(point_count(pent, good) == 1);

  Partition bad = parts_of({{0, 1, 2}, {3}, {4}}, 5);
  CHECK_FALSE(stability_of_partition(pent, bad));
  CHECK(point_count(pent, bad) == 0);

  CHECK_FALSE(stability_of_partition(pent, parts_of({{0, 1, 2, 3, 4}}, 5)));
  CHECK(expect_error([&] {
          point_count(pent, Partition::singletons(5));
        }).code() == errc::bad_argument);
}

TEST_CASE("one multiplication step") {
  WeightVector pent = wv({1, 1, 1, 1, 1});
  CycleSum start;
  start.add(parts_of({{0, 1}, {2}, {3}, {4}}, 5), 1);
  CycleSum step = multiply_l_into_cycle(pent, 1, start);
  REQUIRE(step.terms.size() == 1);  // both merges with the i-part went Long
  CHECK(step.terms.at(parts_of({{0, 1}, {2, 3}, {4}}, 5)) == -1);

  WeightVector m = wv({1, 1, 1, 2});
  CycleSum sing;
  sing.add(Partition::singletons(4), 1);
  CycleSum r = multiply_l_into_cycle(m, 0, sing);
  REQUIRE(r.terms.size() == 3);
  CHECK(r.terms.at(parts_of({{0, 1}, {2}, {3}}, 4)) == 1);
  CHECK(r.terms.at(parts_of({{0, 2}, {1}, {3}}, 4)) == 1);
  CHECK(r.terms.at(parts_of({{0}, {1, 2}, {3}}, 4)) == -1);
  Int direct = 0;
  for (const auto& [part, coeff] : r.terms)
    direct += coeff * point_count(m, part);
  CHECK(direct == 1);

  CHECK(expect_error([&] { multiply_l_into_cycle(m, 0, r); }).code() ==
        errc::too_few_parts);
}

TEST_CASE("cycle reduction on known chambers") {
  WeightVector pent = wv({1, 1, 1, 1, 1});
  CHECK(evaluate_monomial_by_cycles(pent, Monomial{Subset(0b00011), 0}) == 1);
  CHECK(evaluate_monomial_by_cycles(pent, Monomial{Subset(0b10100), 0}) == 1);
  CHECK(evaluate_monomial_by_cycles(pent, Monomial{Subset(0), 1}) == -3);

  WeightVector m = wv({1, 1, 1, 2});
  CHECK(evaluate_monomial_by_cycles(m, Monomial{Subset(0b1000), 0}) == -1);
  CHECK(evaluate_monomial_by_cycles(m, Monomial{Subset(0b0001), 0}) == 1);

  CHECK(expect_error([&] {
          evaluate_monomial_by_cycles(m, Monomial{Subset(0b0011), 0});
        }).code() == errc::wrong_degree);
}

TEST_CASE("sign sums on known chambers") {
  WeightVector pent = wv({1, 1, 1, 1, 1});
  CHECK(top_intersection(pent, Subset(0b00011), 0) == 1);
  CHECK(top_intersection(pent, Subset(0b10100), 0) == 1);
  CHECK(top_intersection(pent, Subset(0), 1) == -3);

  WeightVector m = wv({1, 1, 1, 2});
  CHECK(top_intersection(m, Subset(0b1000), 0) == -1);
  CHECK(top_intersection(m, Subset(0b0001), 0) == 1);

  CHECK(expect_error([&] {
          top_intersection(pent, Subset(1ull << 7), 0);
        }).code() == errc::bad_argument);
  CHECK(expect_error([&] { top_intersection(pent, Subset(0b00011), 1); })
            .code() == errc::wrong_degree);
}

TEST_CASE("sign-sum value is independent of the (I, gamma) choice") {
  for (WeightVector m : {wv({1, 1, 1, 2}), wv({1, 1, 1, 1, 1}),
                         wv({3, 1, 1, 1, 1}), wv({2, 1, 1, 1, 1, 1})}) {
    int n = m.n();
    for (const Monomial& M : top_monomials(n)) {
      Int def = top_intersection(m, M.lSet, M.pPow);
      for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
        Subset I(bits);
        if (I.count() != n - 2 || !M.lSet.subset_of(I)) continue;
        for (int gamma : bit_indices(I)) {
          SignSumChoice choice{I, gamma};
          CHECK(top_intersection(m, M.lSet, M.pPow, choice) == def);
        }
      }
    }
  }
}

TEST_CASE("cycle reduction is independent of partner rule and p realization") {
  auto rng = std::make_shared<std::mt19937_64>(testsupport::g_seed);
  PartnerRule shuffled = [rng](const Partition& P, int a) {
    std::vector<int> others;
    for (int b = 0; b < P.size(); ++b)
      if (b != a) others.push_back(b);
    std::shuffle(others.begin(), others.end(), *rng);
    return std::pair<int, int>(others[0], others[1]);
  };

  for (WeightVector m : {wv({1, 1, 1, 1, 1}), wv({2, 1, 1, 1, 1, 1})}) {
    for (const Monomial& M : top_monomials(m.n())) {
      Int def = evaluate_monomial_by_cycles(m, M);
      CHECK(def == top_intersection(m, M.lSet, M.pPow));
      for (int rep = 0; rep < 3; ++rep) {
        CycleEvalOptions opts;
        opts.partner_rule = shuffled;
        CHECK(evaluate_monomial_by_cycles(m, M, opts) == def);
      }
    }
  }

  WeightVector pent = wv({1, 1, 1, 1, 1});
  for (int gamma = 0; gamma < 5; ++gamma) {
    CycleEvalOptions opts;
    opts.p_index = gamma;
    CHECK(evaluate_monomial_by_cycles(pent, Monomial{Subset(0), 1}, opts) ==
          -3);
  }
  WeightVector hex = wv({2, 1, 1, 1, 1, 1});
  Int expect = top_intersection(hex, Subset(0b100), 1);
  for (int gamma = 0; gamma < 6; ++gamma) {
    CycleEvalOptions opts;
    opts.p_index = gamma;
    CHECK(evaluate_monomial_by_cycles(hex, Monomial{Subset(0b100), 1}, opts) ==
          expect);
  }
}

TEST_CASE("both routes agree across sampled chambers") {
  auto sample = testsupport::sample_chambers(testsupport::g_seed);
  for (const auto& m : sample.vectors) {
    if (m.n() > 5) continue;
    for (const Monomial& M : top_monomials(m.n()))
      CHECK(evaluate_monomial_by_cycles(m, M) ==
            top_intersection(m, M.lSet, M.pPow));
  }
}

TEST_CASE("evaluate extends linearly to top-degree elements") {
  WeightVector pent = wv({1, 1, 1, 1, 1});
  RingElement s = sum_l(5);
  CHECK(evaluate(pent, s * s) == Rat(5));
  CHECK(evaluate(pent, RingElement::zero()) == Rat(0));

  WeightVector m = wv({1, 1, 1, 2});
  CHECK(evaluate(m, sum_l(4)) == Rat(2));
  CHECK(evaluate(m, divisor_class(0, 1)) == Rat(1));

  CHECK(expect_error([&] {
          evaluate(m, RingElement::generator_l(0) + RingElement::generator_p());
        }).code() == errc::not_homogeneous_top);
  CHECK(expect_error([&] {
          evaluate(pent, RingElement::generator_l(0));
        }).code() == errc::not_homogeneous_top);
}

TEST_CASE("divisor dictionary") {
  RingElement d = divisor_class(0, 1);
  CHECK(d.coeff(Monomial{Subset(0b01), 0}) == Rat(1, 2));
  CHECK(d.coeff(Monomial{Subset(0b10), 0}) == Rat(1, 2));
  RingElement a = antidivisor_class(0, 1);
  CHECK(a.coeff(Monomial{Subset(0b10), 0}) == Rat(-1, 2));
  CHECK(expect_error([] { divisor_class(2, 2); }).code() ==
        errc::equal_indices);

  // l_i l_j = D_ij^2 - (D_ij^-)^2 as ring elements
  RingElement li = RingElement::generator_l(0);
  RingElement lj = RingElement::generator_l(1);
  CHECK(d * d - a * a == li * lj);
}

TEST_CASE("sign-vector expansions") {
  SignVector plus{Subset(0b11), Subset(0)};
  CHECK(expand_d_epsilon(Subset(0b11), plus, 0) == divisor_class(0, 1));
  SignVector mix{Subset(0b11), Subset(0b10)};
  CHECK(expand_d_epsilon(Subset(0b11), mix, 0) == antidivisor_class(0, 1));

  RingElement e =
      expand_d_epsilon(Subset(0b111), SignVector{Subset(0b111), Subset(0)}, 0);
  CHECK(e.coeff(Monomial{Subset(0), 1}) == Rat(1, 4));
  CHECK(e.coeff(Monomial{Subset(0b011), 0}) == Rat(1, 4));
  CHECK(e.coeff(Monomial{Subset(0b101), 0}) == Rat(1, 4));
  CHECK(e.coeff(Monomial{Subset(0b110), 0}) == Rat(1, 4));

  CHECK(expect_error([] {
          expand_d_epsilon(Subset(0b111),
                           SignVector{Subset(0b111), Subset(0b001)}, 0);
        }).code() == errc::bad_center);
}

TEST_CASE("signed sums of expansions collapse to monomials") {
  std::mt19937_64 rng(testsupport::g_seed + 5);
  for (int trial = 0; trial < 20; ++trial) {
    std::uint64_t bits = rng() & 0b111111;
    if (__builtin_popcountll(bits) < 2) {
      --trial;
      continue;
    }
    Subset I(bits);
    int i0 = I.min_index();
    std::uint64_t flips = bits & ~(1ull << i0);
    for (std::uint64_t J = bits;; J = (J - 1) & bits) {
      int outside = __builtin_popcountll(bits & ~J);
      if (outside & 1) {
        RingElement sum = RingElement::zero();
        std::uint64_t minus = flips;
        while (true) {
          RingElement term =
              expand_d_epsilon(I, SignVector{I, Subset(minus)}, i0);
          if (__builtin_popcountll(minus & J) & 1)
            sum -= term;
          else
            sum += term;
          if (minus == 0) break;
          minus = (minus - 1) & flips;
        }
        CHECK(sum == RingElement::monomial(
                         Monomial{Subset(J), (outside - 1) / 2}));
      }
      if (J == 0) break;
    }
  }
}

TEST_CASE("expansion sums evaluate like their monomials on long supports") {
  WeightVector pent = wv({1, 1, 1, 1, 1});
  for (std::uint64_t bits = 0; bits < 32; ++bits) {
    if (__builtin_popcountll(bits) != 3) continue;
    Subset I(bits);
    int i0 = I.min_index();
    std::uint64_t flips = bits & ~(1ull << i0);
    for (std::uint64_t J = bits;; J = (J - 1) & bits) {
      int outside = __builtin_popcountll(bits & ~J);
      if (outside & 1) {
        RingElement sum = RingElement::zero();
        std::uint64_t minus = flips;
        while (true) {
          RingElement term =
              expand_d_epsilon(I, SignVector{I, Subset(minus)}, i0);
          if (__builtin_popcountll(minus & J) & 1)
            sum -= term;
          else
            sum += term;
          if (minus == 0) break;
          minus = (minus - 1) & flips;
        }
        CHECK(evaluate(pent, sum) ==
              Rat(top_intersection(pent, Subset(J), (outside - 1) / 2)));
      }
      if (J == 0) break;
    }
  }
}

TEST_CASE("relations annihilate the intersection form") {
  for (WeightVector m :
       {wv({1, 1, 1, 2}), wv({1, 1, 1, 1, 1}), wv({2, 1, 1, 1, 1, 1})}) {
    int n = m.n();
    RingPresentation pr = presentation(m);
    for (const RingElement& rel : pr.relations) {
      int deg = 0;
      REQUIRE(rel.is_homogeneous(&deg));
      if (deg > n - 3) continue;
      for (const Monomial& X : monomial_basis(n, n - 3 - deg))
        CHECK(evaluate(m, rel * RingElement::monomial(X)) == Rat(0));
    }
  }
}

TEST_CASE("threaded sign sums agree with serial") {
  std::vector<Rat> entries(11, Rat(1));
  entries.push_back(Rat(2));
  WeightVector m = WeightVector::create(entries);
  CHECK(top_intersection(m, Subset(0b1), 4, {}, 4) ==
        top_intersection(m, Subset(0b1), 4, {}, 1));
  RingElement e = RingElement::monomial(Monomial{Subset(0b111), 3});
  CHECK(evaluate(m, e, 4) == evaluate(m, e, 1));
}
