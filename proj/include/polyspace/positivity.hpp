#pragma once

#include <optional>
#include <vector>

#include "polyspace/partition.hpp"
#include "polyspace/rational.hpp"
#include "polyspace/ring.hpp"
#include "polyspace/subset.hpp"
#include "polyspace/weights.hpp"

namespace polyspace {

enum class QuadrangleKind { Triangle, Star };

// Nonzero 4-part degenerate cycle with its type. Exactly 3 of the 6
// pair-sums of part masses are Long (one per complementary pair); they
// either form a triangle avoiding one part (Triangle, special = avoided
// part) or a star through one part (Star, special = center).
struct Quadrangle {
  Partition parts;
  QuadrangleKind kind;
  int special;  // index into parts.parts()
};

// All nonzero quadrangles in canonical partition order.
std::vector<Quadrangle> quadrangles(const WeightVector& m, int threads = 1);

// c_1 = sum of all l_i.
RingElement first_chern_class(int n);
// The same class written as the sum of consecutive divisors D_{i,i+1}
// (cyclically); expands to first_chern_class.
RingElement first_chern_class_divisor_form(int n);

struct DivisorCoefficients {
  std::vector<Rat> a;  // coefficients of sum a_i l_i, length n
};

struct AmpleResult {
  bool ample = false;
  // First violating quadrangle in canonical order, when not ample.
  std::optional<Quadrangle> violation;
};

// Ample iff for every quadrangle: Triangle with avoided part I => a_I > 0;
// Star with center I => a_I < a_J + a_K + a_L.
AmpleResult is_ample(const WeightVector& m, const DivisorCoefficients& a,
                     int threads = 1);

// is_ample with unit coefficients: every star center I has |I| < n - |I|.
bool is_fano_quadrangle(const WeightVector& m, int threads = 1);

struct MaximalDegeneration {
  Subset I;
  int dimension;  // n - |I| - 2
};

// Short sets that become Long when any single outside index is added.
std::vector<MaximalDegeneration> maximal_degenerations(const WeightVector& m,
                                                       int threads = 1);

// Every maximal degeneration is a point or has dimension > (n-4)/2.
bool is_fano_maximal(const WeightVector& m, int threads = 1);

struct FanoReport {
  bool fano = false;
  bool method_quadrangle = false;
  bool method_maximal = false;
  std::optional<Quadrangle> star_witness;              // quadrangle method
  std::optional<MaximalDegeneration> maximal_witness;  // maximal method
};

// Runs both Fano criteria and collects witnesses for a negative verdict.
FanoReport fano_report(const WeightVector& m, int threads = 1);

}  // namespace polyspace
