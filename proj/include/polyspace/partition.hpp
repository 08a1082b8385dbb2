#pragma once

#include <compare>
#include <map>
#include <vector>

#include "polyspace/rational.hpp"
#include "polyspace/subset.hpp"

namespace polyspace {

// Set partition of {0..n-1} into nonempty parts, canonically sorted by
// smallest element. Models the degenerate cycle D_{I,J,K,...}.
class Partition {
 public:
  static Partition singletons(int n);
  // Validates: parts nonempty, pairwise disjoint, union = {0..n-1}.
  static Partition from_parts(std::vector<Subset> parts, int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(parts_.size()); }
  const std::vector<Subset>& parts() const { return parts_; }
  const Subset& part(int a) const { return parts_[a]; }
  int part_containing(int i) const;

  // New partition with parts a and b fused (re-canonicalized).
  Partition merge(int a, int b) const;

  friend bool operator==(const Partition& x, const Partition& y) {
    return x.parts_ == y.parts_;
  }
  friend std::strong_ordering operator<=>(const Partition& x,
                                          const Partition& y);

 private:
  std::vector<Subset> parts_;
  int n_ = 0;
};

// Integer combination of partitions (all with equal part counts when the
// sum is homogeneous; enforced by the cycle calculus, not the container).
struct CycleSum {
  std::map<Partition, Int> terms;

  void add(const Partition& P, const Int& coeff);
  bool is_zero() const { return terms.empty(); }
};

// All partitions of {0..n-1} into exactly k nonempty parts, in restricted-
// growth-string lexicographic order (parts listed by smallest element; this
// is the canonical enumeration order used for certificates).
std::vector<Partition> partitions_into(int n, int k);

}  // namespace polyspace
