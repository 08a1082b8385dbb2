#pragma once

#include <vector>

#include "polyspace/rational.hpp"

namespace polyspace {

// Rank of an integer matrix via fraction-free (Bareiss) elimination.
// Exact; consumes the matrix.
int rank_fraction_free(std::vector<std::vector<Int>> rows);

// Rank of a rational matrix: clears denominators row by row, then Bareiss.
int rank_exact(const std::vector<std::vector<Rat>>& rows);

}  // namespace polyspace
