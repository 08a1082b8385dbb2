#include "polyspace/poincare.hpp"

#include <numeric>

#include "polyspace/errors.hpp"

namespace polyspace {

IntPolynomial poincare_polynomial(const WeightVector& m, int threads) {
  require_smooth(m, threads);
  const int n = m.n();

  // N(q) = (1+q)^{n-1} - sum over short-or-empty I of q^{|I|}
  //      = (1+q)^{n-1} - sum_k hist[k] q^k
  // and P(q) = N(q) / (q (q-1)).
  std::vector<Int> hist = short_histogram(m, threads);
  std::vector<Int> N(static_cast<std::size_t>(n), 0);
  Int binom = 1;
  for (int k = 0; k <= n - 1; ++k) {
    N[k] = binom;
    if (k < static_cast<int>(hist.size())) N[k] -= hist[k];
    binom = binom * (n - 1 - k) / (k + 1);
  }

  // Divide by q: constant term must vanish.
  if (N[0] != 0)
    throw Error(errc::non_exact_division,
                "numerator has nonzero constant term");
  std::vector<Int> N1(N.begin() + 1, N.end());

  // Divide by (q - 1) synthetically; remainder is N1 evaluated at 1.
  std::vector<Int> P(N1.size() - 1);
  Int carry = N1.back();
  for (int d = static_cast<int>(N1.size()) - 2; d >= 0; --d) {
    P[d] = carry;
    carry += N1[d];
  }
  if (carry != 0)
    throw Error(errc::non_exact_division,
                "numerator is not divisible by q-1");
  return IntPolynomial(std::move(P));
}

std::vector<Int> betti_numbers(const WeightVector& m, int threads) {
  IntPolynomial P = poincare_polynomial(m, threads);
  std::vector<Int> b(static_cast<std::size_t>(m.n() - 2), 0);
  for (int d = 0; d <= P.degree(); ++d) b[d] = P.coeff(d);
  return b;
}

Int euler_characteristic(const WeightVector& m, int threads) {
  std::vector<Int> b = betti_numbers(m, threads);
  return std::accumulate(b.begin(), b.end(), Int(0));
}

}  // namespace polyspace
