#include "polyspace/ring.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "polyspace/errors.hpp"
#include "polyspace/linalg.hpp"

namespace polyspace {

bool RingElement::is_homogeneous(int* degree_out) const {
  if (terms_.empty()) {
    if (degree_out) *degree_out = -1;
    return true;
  }
  const int d = terms_.begin()->first.degree();
  for (const auto& [mono, coeff] : terms_)
    if (mono.degree() != d) return false;
  if (degree_out) *degree_out = d;
  return true;
}

void RingElement::add_term(const Monomial& mono, Rat coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElement& RingElement::operator+=(const RingElement& o) {
  for (const auto& [mono, coeff] : o.terms_) add_term(mono, coeff);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  for (const auto& [mono, coeff] : o.terms_) add_term(mono, -coeff);
  return *this;
}

RingElement& RingElement::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= c;
  return *this;
}

RingElement multiply(const RingElement& a, const RingElement& b) {
  RingElement out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      out.add_term(product_monomial(ma, mb), ca * cb);
  return out;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  return multiply(a, b);
}

RingElement relation_for_long_set(Subset I) {
  const int card = I.count();
  RingElement rel;
  // J runs over subsets of I with |J| = |I|-1 (mod 2); the p-power soaks up
  // the missing degree.
  std::vector<int> idx;
  idx.reserve(card);
  for (int i : bit_indices(I)) idx.push_back(i);
  for (std::uint64_t t = 0; t < (1ull << card); ++t) {
    const int size = std::popcount(t);
    if (((card - 1 - size) & 1) != 0 || size > card - 1) continue;
    Subset J(0);
    for (int b = 0; b < card; ++b)
      if ((t >> b) & 1) J = J.with(idx[b]);
    rel.add_term(Monomial{J, (card - 1 - size) / 2}, 1);
  }
  return rel;
}

RingPresentation presentation(const WeightVector& m, int threads) {
  require_smooth(m, threads);
  RingPresentation pres;
  pres.n = m.n();
  pres.long_sets = long_subsets(m);
  pres.relations.reserve(pres.long_sets.size());
  for (Subset I : pres.long_sets)
    pres.relations.push_back(relation_for_long_set(I));
  return pres;
}

std::vector<Monomial> monomial_basis(int n, int d) {
  std::vector<Monomial> basis;
  for (int k = 0; 2 * k <= d; ++k) {
    const int r = d - 2 * k;
    if (r > n) continue;
    // all r-subsets of {0..n-1}, ascending mask order
    if (r == 0) {
      basis.push_back(Monomial{Subset(0), k});
      continue;
    }
    std::uint64_t mask = (1ull << r) - 1;
    while (mask < (1ull << n)) {
      basis.push_back(Monomial{Subset(mask), k});
      // next mask with the same popcount (Gosper)
      std::uint64_t c = mask & -mask;
      std::uint64_t rr = mask + c;
      mask = (((rr ^ mask) >> 2) / c) | rr;
    }
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

Int ambient_dimension(int n, int d) {
  Int total = 0;
  for (int k = 0; 2 * k <= d; ++k) {
    const int r = d - 2 * k;
    if (r > n) continue;
    Int binom = 1;
    for (int i = 0; i < r; ++i) binom = binom * (n - i) / (i + 1);
    total += binom;
  }
  return total;
}

Int graded_dimension(const WeightVector& m, int d, int threads) {
  require_smooth(m, threads);
  const int n = m.n();
  if (d < 0 || d > n - 3)
    throw Error(errc::degree_out_of_range,
                "degree must lie in [0, n-3]");

  std::vector<Monomial> basis = monomial_basis(n, d);
  std::map<Monomial, int> column;
  for (int c = 0; c < static_cast<int>(basis.size()); ++c)
    column.emplace(basis[c], c);

  RingPresentation pres = presentation(m, threads);
  std::vector<std::vector<Int>> rows;
  for (std::size_t r = 0; r < pres.relations.size(); ++r) {
    const int rel_deg = pres.long_sets[r].count() - 1;
    if (rel_deg > d) continue;
    for (const Monomial& mult : monomial_basis(n, d - rel_deg)) {
      RingElement row =
          multiply(pres.relations[r], RingElement::monomial(mult));
      std::vector<Int> coords(basis.size(), 0);
      for (const auto& [mono, coeff] : row.terms()) {
        // relation rows are integral by construction
        coords[column.at(mono)] = Int(numerator(coeff));
      }
      rows.push_back(std::move(coords));
    }
  }
  return Int(basis.size()) - rank_fraction_free(std::move(rows));
}

}  // namespace polyspace
