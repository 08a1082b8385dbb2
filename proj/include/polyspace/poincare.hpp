#pragma once

#include <string>
#include <vector>

#include "polyspace/rational.hpp"
#include "polyspace/weights.hpp"

namespace polyspace {

// Dense polynomial with Int coefficients, coeffs_[d] = coefficient of q^d.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Int& coeff(int d) const {
    static const Int zero = 0;
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[d];
  }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  Int operator()(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  bool operator==(const IntPolynomial&) const = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Int> coeffs_;
};

// Poincare polynomial of the polygon space: degree n-3, constant term 1,
// palindromic coefficients. Throws not_smooth on a wall.
IntPolynomial poincare_polynomial(const WeightVector& m, int threads = 1);

// Even Betti numbers b_0, b_2, ..., b_{2(n-3)} (the odd ones vanish).
std::vector<Int> betti_numbers(const WeightVector& m, int threads = 1);

// Euler characteristic = sum of the Betti numbers.
Int euler_characteristic(const WeightVector& m, int threads = 1);

}  // namespace polyspace
