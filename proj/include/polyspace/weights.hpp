#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polyspace/rational.hpp"
#include "polyspace/subset.hpp"

namespace polyspace {

enum class SubsetClass { Short, Long, Wall };

// Hard ceiling for the number of sides: subsets live in one 64-bit word and
// the enumeration kernels index Gray codes by a 64-bit counter.
inline constexpr int kMaxSides = 62;

// Current cap: kMaxSides, or POLYSPACE_MAX_N from the environment when that
// parses to something smaller.
int max_sides();

// Validated side-length/weight vector. Immutable; all derived quantities are
// exact. Alongside the rational entries it stores the weights scaled by the
// common denominator, and an int64 copy when magnitudes permit, which is what
// the 2^n kernels run on.
class WeightVector {
 public:
  // Throws Error with code non_positive_entry / too_few_sides /
  // too_many_sides / polygon_inequality_violated. The index payload of
  // entry-specific errors is 1-based.
  static WeightVector create(std::vector<Rat> entries);

  int n() const { return static_cast<int>(entries_.size()); }
  const std::vector<Rat>& entries() const { return entries_; }
  const Rat& entry(int i) const { return entries_[i]; }
  const Rat& total() const { return total_; }

  const std::vector<Int>& scaled() const { return scaled_; }
  const Int& scaled_total() const { return scaled_total_; }
  Int scaled_mass(Subset I) const;
  Rat mass(Subset I) const;

  bool has_fast64() const { return !scaled64_.empty(); }
  std::span<const std::int64_t> scaled64() const { return scaled64_; }
  std::int64_t scaled_total64() const { return scaled_total64_; }

  SubsetClass classify(Subset I) const;

 private:
  WeightVector() = default;

  std::vector<Rat> entries_;
  Rat total_;
  std::vector<Int> scaled_;
  Int scaled_total_;
  std::vector<std::int64_t> scaled64_;
  std::int64_t scaled_total64_ = 0;
};

struct ClassCounts {
  std::uint64_t n_short = 0;
  std::uint64_t n_long = 0;
  std::uint64_t n_wall = 0;
};

ClassCounts count_classes(const WeightVector& m, int threads = 1);

// Smallest-bitmask subset with mass exactly half the total, if any.
std::optional<Subset> find_wall(const WeightVector& m, int threads = 1);

bool is_smooth(const WeightVector& m, int threads = 1);

// Throws Error(not_smooth) carrying the minimal wall subset.
void require_smooth(const WeightVector& m, int threads = 1);

// Special chamber structure. one_massive lists every index i whose weight
// pairs past half the total with all others (the moduli is P^{n-3});
// three_massive lists every triple with all three pairwise sums past half
// (the moduli is (P^1)^{n-3}). Indices 0-based.
struct MassiveReport {
  std::vector<int> one_massive;
  std::vector<std::array<int, 3>> three_massive;
  bool generic() const { return one_massive.empty() && three_massive.empty(); }
};

MassiveReport massive_points(const WeightVector& m, int threads = 1);

// All Long subsets, ascending as unsigned integers.
std::vector<Subset> long_subsets(const WeightVector& m);

// Counts, per cardinality 0..n, of subsets with 2*mass <= total.
std::vector<Int> short_histogram(const WeightVector& m, int threads = 1);

// Canonical encoding of the stability chamber: the full Short-set family.
// Two weight vectors lie in the same chamber iff their signatures compare
// equal; positive rescaling leaves the signature unchanged.
struct ChamberSignature {
  int n = 0;
  std::vector<std::uint64_t> short_masks;  // ascending

  friend bool operator==(const ChamberSignature&,
                         const ChamberSignature&) = default;
  std::uint64_t digest() const;  // FNV-1a, stable across runs
};

ChamberSignature chamber_signature(const WeightVector& m, int threads = 1);

}  // namespace polyspace
