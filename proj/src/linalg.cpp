#include "polyspace/linalg.hpp"

#include <utility>

namespace polyspace {

int rank_fraction_free(std::vector<std::vector<Int>> a) {
  const int rows = static_cast<int>(a.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(a[0].size());

  int rank = 0;
  Int prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    // Bareiss step: entries stay integral, divisions are exact.
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c)
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

int rank_exact(const std::vector<std::vector<Rat>>& rows) {
  std::vector<std::vector<Int>> scaled;
  scaled.reserve(rows.size());
  for (const auto& row : rows) {
    Int mult = 1;
    for (const Rat& x : row) mult = lcm(mult, Int(denominator(x)));
    std::vector<Int> irow;
    irow.reserve(row.size());
    for (const Rat& x : row)
      irow.push_back(Int(numerator(x)) * (mult / Int(denominator(x))));
    scaled.push_back(std::move(irow));
  }
  return rank_fraction_free(std::move(scaled));
}

}  // namespace polyspace
