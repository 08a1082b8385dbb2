#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polyspace {

enum class errc {
  // weight vector validation
  non_positive_entry,
  too_few_sides,
  too_many_sides,
  polygon_inequality_violated,
  // smoothness
  not_smooth,
  // internal hard faults
  non_exact_division,
  wall_hit,
  // argument errors
  degree_out_of_range,
  too_few_parts,
  wrong_degree,
  not_homogeneous_top,
  equal_indices,
  bad_center,
  parse_error,
  bad_argument,
};

// Single exception type; code() distinguishes conditions, payload carries a
// 1-based index / parse position and an optional subset witness.
class Error : public std::runtime_error {
 public:
  Error(errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Error& with_index(long index) {
    index_ = index;
    return *this;
  }
  Error& with_subset(std::uint64_t bits) {
    subset_bits_ = bits;
    has_subset_ = true;
    return *this;
  }

  errc code() const { return code_; }
  long index() const { return index_; }
  bool has_subset() const { return has_subset_; }
  std::uint64_t subset_bits() const { return subset_bits_; }

 private:
  errc code_;
  long index_ = -1;
  std::uint64_t subset_bits_ = 0;
  bool has_subset_ = false;
};

}  // namespace polyspace
