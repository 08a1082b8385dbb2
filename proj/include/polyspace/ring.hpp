#pragma once

#include <compare>
#include <map>
#include <vector>

#include "polyspace/rational.hpp"
#include "polyspace/subset.hpp"
#include "polyspace/weights.hpp"

namespace polyspace {

// Normal-form monomial l_J * p^k (J squarefree by construction).
struct Monomial {
  Subset lSet{0};
  int pPow = 0;

  int degree() const { return lSet.count() + 2 * pPow; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.lSet == b.lSet && a.pPow == b.pPow;
  }
  // Elimination order: degree, then p-power, then l-set as an integer.
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.pPow <=> b.pPow; c != 0) return c;
    return a.lSet.bits <=> b.lSet.bits;
  }
};

// Product in the quotient by l_i^2 = p: shared l-indices square to p.
inline Monomial product_monomial(const Monomial& a, const Monomial& b) {
  return Monomial{a.lSet ^ b.lSet, a.pPow + b.pPow + (a.lSet & b.lSet).count()};
}

// Finite rational combination of normal-form monomials.
class RingElement {
 public:
  RingElement() = default;

  static RingElement zero() { return RingElement(); }
  static RingElement one() { return monomial(Monomial{}, 1); }
  static RingElement generator_l(int i) {
    return monomial(Monomial{Subset::single(i), 0}, 1);
  }
  static RingElement generator_p() { return monomial(Monomial{Subset(0), 1}, 1); }
  static RingElement monomial(Monomial mono, Rat coeff = 1) {
    RingElement e;
    e.add_term(mono, std::move(coeff));
    return e;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }
  Rat coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  // Zero is homogeneous of every degree; reports -1 for it.
  bool is_homogeneous(int* degree_out = nullptr) const;

  void add_term(const Monomial& mono, Rat coeff);

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const Rat& c);
  friend RingElement operator+(RingElement a, const RingElement& b) {
    a += b;
    return a;
  }
  friend RingElement operator-(RingElement a, const RingElement& b) {
    a -= b;
    return a;
  }
  friend RingElement operator*(RingElement a, const Rat& c) {
    a *= c;
    return a;
  }
  friend RingElement operator*(const Rat& c, RingElement a) {
    a *= c;
    return a;
  }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a) {
    return a * Rat(-1);
  }

  bool operator==(const RingElement&) const = default;

 private:
  std::map<Monomial, Rat> terms_;
};

// Distributive product with the rewrite l_i^2 -> p.
RingElement multiply(const RingElement& a, const RingElement& b);

// Sum over 2k + r = |I|-1 of p^k sigma_r(l_i : i in I), expanded:
// every J subseteq I with |J| = |I|-1 (mod 2), |J| <= |I|-1 contributes
// l_J p^{(|I|-1-|J|)/2} with coefficient 1. Homogeneous of degree |I|-1.
RingElement relation_for_long_set(Subset I);

struct RingPresentation {
  int n = 0;
  std::vector<Subset> long_sets;         // ascending mask order
  std::vector<RingElement> relations;    // parallel to long_sets
};

RingPresentation presentation(const WeightVector& m, int threads = 1);

// All monomials l_J p^k of degree d over n generators, in elimination order.
std::vector<Monomial> monomial_basis(int n, int d);

// Sum over k of C(n, d-2k): dimension of the degree-d span of monomials.
Int ambient_dimension(int n, int d);

// Dimension of the degree-d graded piece of the quotient ring, by exact
// rank computation over the rationals.
Int graded_dimension(const WeightVector& m, int d, int threads = 1);

}  // namespace polyspace
