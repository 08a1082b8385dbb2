#include "polyspace/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "polyspace/errors.hpp"
#include "polyspace/kernels.hpp"

namespace polyspace {

int max_sides() {
  if (const char* env = std::getenv("POLYSPACE_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 3 && v < kMaxSides) {
      return static_cast<int>(v);
    }
  }
  return kMaxSides;
}

WeightVector WeightVector::create(std::vector<Rat> entries) {
  const int n = static_cast<int>(entries.size());
  if (n < 3) throw Error(errc::too_few_sides, "need at least 3 sides");
  if (n > max_sides())
    throw Error(errc::too_many_sides,
                "more than " + std::to_string(max_sides()) + " sides");
  for (int i = 0; i < n; ++i) {
    if (entries[i] <= 0)
      throw Error(errc::non_positive_entry,
                  "entry " + std::to_string(i + 1) + " is not positive")
          .with_index(i + 1);
  }

  WeightVector m;
  m.entries_ = std::move(entries);
  m.total_ = 0;
  for (const Rat& e : m.entries_) m.total_ += e;
  for (int i = 0; i < n; ++i) {
    // polygon inequality: m_i < total - m_i
    if (2 * m.entries_[i] >= m.total_)
      throw Error(errc::polygon_inequality_violated,
                  "entry " + std::to_string(i + 1) +
                      " is at least the sum of the others; the space is empty")
          .with_index(i + 1);
  }

  Int denom_lcm = 1;
  for (const Rat& e : m.entries_)
    denom_lcm = lcm(denom_lcm, Int(denominator(e)));
  m.scaled_.reserve(n);
  m.scaled_total_ = 0;
  for (const Rat& e : m.entries_) {
    Int w = Int(numerator(e)) * (denom_lcm / Int(denominator(e)));
    m.scaled_total_ += w;
    m.scaled_.push_back(std::move(w));
  }

  // int64 fast path: 2*mass must never overflow during the scans
  constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max() / 4;
  if (m.scaled_total_ <= kLimit) {
    m.scaled64_.reserve(n);
    for (const Int& w : m.scaled_)
      m.scaled64_.push_back(w.convert_to<std::int64_t>());
    m.scaled_total64_ = m.scaled_total_.convert_to<std::int64_t>();
  }
  return m;
}

Int WeightVector::scaled_mass(Subset I) const {
  Int mass = 0;
  for (int i : bit_indices(I)) mass += scaled_[i];
  return mass;
}

Rat WeightVector::mass(Subset I) const {
  Rat mass = 0;
  for (int i : bit_indices(I)) mass += entries_[i];
  return mass;
}

SubsetClass WeightVector::classify(Subset I) const {
  Int twice = 2 * scaled_mass(I);
  if (twice < scaled_total_) return SubsetClass::Short;
  if (twice > scaled_total_) return SubsetClass::Long;
  return SubsetClass::Wall;
}

ClassCounts count_classes(const WeightVector& m, int threads) {
  kernels::ClassCounts counts =
      m.has_fast64()
          ? kernels::count_classes_parallel<std::int64_t>(
                m.scaled64(), m.scaled_total64(), threads)
          : kernels::count_classes_parallel<Int>(
                std::span<const Int>(m.scaled()), m.scaled_total(), threads);
  return ClassCounts{counts.n_short, counts.n_long, counts.n_wall};
}

std::optional<Subset> find_wall(const WeightVector& m, int threads) {
  // A wall needs 2*mass == total, impossible when the scaled total is odd.
  if (bit_test(m.scaled_total(), 0)) return std::nullopt;
  std::optional<std::uint64_t> bits =
      m.has_fast64()
          ? kernels::min_wall_parallel<std::int64_t>(
                m.scaled64(), m.scaled_total64(), threads)
          : kernels::min_wall_parallel<Int>(std::span<const Int>(m.scaled()),
                                            m.scaled_total(), threads);
  if (!bits) return std::nullopt;
  return Subset(*bits);
}

bool is_smooth(const WeightVector& m, int threads) {
  return !find_wall(m, threads).has_value();
}

void require_smooth(const WeightVector& m, int threads) {
  if (auto wall = find_wall(m, threads)) {
    throw Error(errc::not_smooth, "weight vector lies on a wall")
        .with_subset(wall->bits);
  }
}

MassiveReport massive_points(const WeightVector& m, int threads) {
  require_smooth(m, threads);
  const int n = m.n();
  const std::vector<Int>& w = m.scaled();
  const Int& total = m.scaled_total();
  MassiveReport report;
  for (int i = 0; i < n; ++i) {
    bool massive = true;
    for (int j = 0; j < n && massive; ++j) {
      if (j == i) continue;
      if (2 * (w[i] + w[j]) <= total) massive = false;
    }
    if (massive) report.one_massive.push_back(i);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (2 * (w[i] + w[j]) <= total) continue;
      for (int k = j + 1; k < n; ++k) {
        if (2 * (w[j] + w[k]) > total && 2 * (w[i] + w[k]) > total)
          report.three_massive.push_back({i, j, k});
      }
    }
  return report;
}

std::vector<Subset> long_subsets(const WeightVector& m) {
  std::vector<Subset> result;
  if (m.has_fast64()) {
    const std::int64_t total = m.scaled_total64();
    kernels::ordered_scan<std::int64_t>(
        m.scaled64(), [&](std::uint64_t mask, std::int64_t mass) {
          if (2 * mass > total) result.push_back(Subset(mask));
        });
  } else {
    const Int& total = m.scaled_total();
    kernels::ordered_scan<Int>(std::span<const Int>(m.scaled()),
                               [&](std::uint64_t mask, const Int& mass) {
                                 if (2 * mass > total)
                                   result.push_back(Subset(mask));
                               });
  }
  return result;
}

std::vector<Int> short_histogram(const WeightVector& m, int threads) {
  std::vector<std::uint64_t> hist =
      m.has_fast64()
          ? kernels::short_histogram_parallel<std::int64_t>(
                m.scaled64(), m.scaled_total64(), threads)
          : kernels::short_histogram_parallel<Int>(
                std::span<const Int>(m.scaled()), m.scaled_total(), threads);
  return std::vector<Int>(hist.begin(), hist.end());
}

std::uint64_t ChamberSignature::digest() const {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (8 * byte)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(n));
  for (std::uint64_t mask : short_masks) mix(mask);
  return h;
}

ChamberSignature chamber_signature(const WeightVector& m, int threads) {
  require_smooth(m, threads);
  ChamberSignature sig;
  sig.n = m.n();
  if (m.has_fast64()) {
    const std::int64_t total = m.scaled_total64();
    kernels::ordered_scan<std::int64_t>(
        m.scaled64(), [&](std::uint64_t mask, std::int64_t mass) {
          if (2 * mass < total) sig.short_masks.push_back(mask);
        });
  } else {
    const Int& total = m.scaled_total();
    kernels::ordered_scan<Int>(std::span<const Int>(m.scaled()),
                               [&](std::uint64_t mask, const Int& mass) {
                                 if (2 * mass < total)
                                   sig.short_masks.push_back(mask);
                               });
  }
  return sig;
}

}  // namespace polyspace
