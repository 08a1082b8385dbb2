#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

// 2^n enumeration kernels. Each kernel comes in a _serial form (the reference
// implementation) and a _parallel form that splits the index range across
// OpenMP threads. Parallel results are merged by commutative exact-integer
// reductions, so serial and parallel outputs are bit-identical; the unit
// tests and the bench target compare the two.
//
// The weight type T is either int64_t (fast path; caller guarantees
// 2*total fits) or polyspace::Int for arbitrary magnitudes.

namespace polyspace::kernels {

inline std::uint64_t gray(std::uint64_t t) { return t ^ (t >> 1); }

// Walk masks g(t) for t in [t_begin, t_end), maintaining the subset mass
// incrementally: consecutive Gray codes differ in exactly one bit.
template <class T, class Visit>
void gray_scan(std::span<const T> w, std::uint64_t t_begin, std::uint64_t t_end,
               Visit&& visit) {
  if (t_begin >= t_end) return;
  std::uint64_t g = gray(t_begin);
  T mass{};
  for (std::uint64_t rest = g; rest;) {
    int b = std::countr_zero(rest);
    rest &= rest - 1;
    mass += w[b];
  }
  visit(g, mass);
  for (std::uint64_t t = t_begin + 1; t < t_end; ++t) {
    int b = std::countr_zero(t);
    std::uint64_t bit = 1ull << b;
    g ^= bit;
    if (g & bit)
      mass += w[b];
    else
      mass -= w[b];
    visit(g, mass);
  }
}

// Visit all masks in ascending numeric order with O(1) incremental mass
// updates (depth-first over bit positions, high bit slowest). Serial only.
template <class T, class Visit>
void ordered_scan(std::span<const T> w, Visit&& visit) {
  const int n = static_cast<int>(w.size());
  struct Rec {
    std::span<const T> w;
    Visit& visit;
    void go(int pos, std::uint64_t mask, const T& mass) {
      if (pos < 0) {
        visit(mask, mass);
        return;
      }
      go(pos - 1, mask, mass);
      T next = mass;
      next += w[pos];
      go(pos - 1, mask | (1ull << pos), next);
    }
  } rec{w, visit};
  rec.go(n - 1, 0, T{});
}

// --- Short-or-wall histogram: counts, per cardinality, of subsets with
// --- 2*mass <= total. Feeds the Poincare polynomial.

template <class T>
std::vector<std::uint64_t> short_histogram_serial(std::span<const T> w,
                                                  const T& total) {
  const int n = static_cast<int>(w.size());
  std::vector<std::uint64_t> hist(n + 1, 0);
  gray_scan(w, 0, 1ull << n, [&](std::uint64_t g, const T& mass) {
    if (2 * mass <= total) ++hist[std::popcount(g)];
  });
  return hist;
}

template <class T>
std::vector<std::uint64_t> short_histogram_parallel(std::span<const T> w,
                                                    const T& total,
                                                    int threads) {
  const int n = static_cast<int>(w.size());
  const std::uint64_t count = 1ull << n;
  std::vector<std::uint64_t> hist(n + 1, 0);
#ifdef _OPENMP
  if (threads > 1 && n >= 10) {
    std::vector<std::vector<std::uint64_t>> partial(
        threads, std::vector<std::uint64_t>(n + 1, 0));
#pragma omp parallel num_threads(threads)
    {
      const int tid = omp_get_thread_num();
      const int nt = omp_get_num_threads();
      const std::uint64_t chunk = (count + nt - 1) / nt;
      const std::uint64_t lo = chunk * tid;
      const std::uint64_t hi = lo + chunk < count ? lo + chunk : count;
      auto& mine = partial[tid];
      gray_scan(w, lo, hi, [&](std::uint64_t g, const T& mass) {
        if (2 * mass <= total) ++mine[std::popcount(g)];
      });
    }
    for (const auto& part : partial)
      for (int c = 0; c <= n; ++c) hist[c] += part[c];
    return hist;
  }
#else
  (void)threads;
#endif
  return short_histogram_serial(w, total);
}

// --- Minimal wall: smallest mask with 2*mass == total, if any.

template <class T>
std::optional<std::uint64_t> min_wall_serial(std::span<const T> w,
                                             const T& total) {
  const int n = static_cast<int>(w.size());
  std::uint64_t best = ~0ull;
  gray_scan(w, 0, 1ull << n, [&](std::uint64_t g, const T& mass) {
    if (2 * mass == total && g < best) best = g;
  });
  if (best == ~0ull) return std::nullopt;
  return best;
}

template <class T>
std::optional<std::uint64_t> min_wall_parallel(std::span<const T> w,
                                               const T& total, int threads) {
#ifdef _OPENMP
  const int n = static_cast<int>(w.size());
  const std::uint64_t count = 1ull << n;
  if (threads > 1 && n >= 10) {
    std::uint64_t best = ~0ull;
#pragma omp parallel num_threads(threads) reduction(min : best)
    {
      const int tid = omp_get_thread_num();
      const int nt = omp_get_num_threads();
      const std::uint64_t chunk = (count + nt - 1) / nt;
      const std::uint64_t lo = chunk * tid;
      const std::uint64_t hi = lo + chunk < count ? lo + chunk : count;
      gray_scan(w, lo, hi, [&](std::uint64_t g, const T& mass) {
        if (2 * mass == total && g < best) best = g;
      });
    }
    if (best == ~0ull) return std::nullopt;
    return best;
  }
#else
  (void)threads;
#endif
  return min_wall_serial(w, total);
}

// --- Class counters.

struct ClassCounts {
  std::uint64_t n_short = 0;
  std::uint64_t n_long = 0;
  std::uint64_t n_wall = 0;
};

template <class T>
ClassCounts count_classes_serial(std::span<const T> w, const T& total) {
  const int n = static_cast<int>(w.size());
  ClassCounts counts;
  gray_scan(w, 0, 1ull << n, [&](std::uint64_t, const T& mass) {
    T twice = 2 * mass;
    if (twice < total)
      ++counts.n_short;
    else if (twice > total)
      ++counts.n_long;
    else
      ++counts.n_wall;
  });
  return counts;
}

template <class T>
ClassCounts count_classes_parallel(std::span<const T> w, const T& total,
                                   int threads) {
#ifdef _OPENMP
  const int n = static_cast<int>(w.size());
  const std::uint64_t count = 1ull << n;
  if (threads > 1 && n >= 10) {
    std::uint64_t s = 0, l = 0, wl = 0;
#pragma omp parallel num_threads(threads) reduction(+ : s, l, wl)
    {
      const int tid = omp_get_thread_num();
      const int nt = omp_get_num_threads();
      const std::uint64_t chunk = (count + nt - 1) / nt;
      const std::uint64_t lo = chunk * tid;
      const std::uint64_t hi = lo + chunk < count ? lo + chunk : count;
      gray_scan(w, lo, hi, [&](std::uint64_t, const T& mass) {
        T twice = 2 * mass;
        if (twice < total)
          ++s;
        else if (twice > total)
          ++l;
        else
          ++wl;
      });
    }
    return ClassCounts{s, l, wl};
  }
#else
  (void)threads;
#endif
  return count_classes_serial(w, total);
}

// --- Sign-window sum: the inner loop of the sign-sum intersection formula.
//
// Enumerates all sign vectors on q positions (the designated position with
// its forced +1 sign is excluded before the call). State per step: the
// signed sum s and the parity of minus signs on the product positions.
// Accumulates sgn(s) * (-1)^parity over vectors with lo < |s| < hi.
// Equality with a window edge is reported as a wall hit.

struct SignSumResult {
  long long sum = 0;
  bool wall_hit = false;
};

template <class T>
SignSumResult sign_window_sum_range(std::span<const T> w,
                                    std::uint64_t prod_mask, const T& lo,
                                    const T& hi, const T& base,
                                    std::uint64_t t_begin,
                                    std::uint64_t t_end) {
  SignSumResult result;
  if (t_begin >= t_end) return result;
  std::uint64_t g = gray(t_begin);
  T s = base;
  int parity = 0;
  for (std::uint64_t rest = g; rest;) {
    int b = std::countr_zero(rest);
    rest &= rest - 1;
    s -= 2 * w[b];
    if ((prod_mask >> b) & 1) parity ^= 1;
  }
  auto account = [&](const T& sv, int par) {
    T a = sv < 0 ? T(-sv) : sv;
    if (a == lo || a == hi) {
      result.wall_hit = true;
      return;
    }
    if (lo < a && a < hi) {
      int sign = (sv < 0) ? -1 : 1;
      result.sum += par ? -sign : sign;
    }
  };
  account(s, parity);
  for (std::uint64_t t = t_begin + 1; t < t_end; ++t) {
    int b = std::countr_zero(t);
    std::uint64_t bit = 1ull << b;
    g ^= bit;
    if (g & bit)
      s -= 2 * w[b];
    else
      s += 2 * w[b];
    if ((prod_mask >> b) & 1) parity ^= 1;
    account(s, parity);
  }
  return result;
}

// base = value of the signed sum with every sign +1 (the designated
// position's weight plus the sum of the span).
template <class T>
SignSumResult sign_window_sum_serial(std::span<const T> w,
                                     std::uint64_t prod_mask, const T& lo,
                                     const T& hi, const T& base) {
  return sign_window_sum_range(w, prod_mask, lo, hi, base, 0,
                               1ull << w.size());
}

template <class T>
SignSumResult sign_window_sum_parallel(std::span<const T> w,
                                       std::uint64_t prod_mask, const T& lo,
                                       const T& hi, const T& base,
                                       int threads) {
#ifdef _OPENMP
  const int q = static_cast<int>(w.size());
  const std::uint64_t count = 1ull << q;
  if (threads > 1 && q >= 10) {
    long long sum = 0;
    int walls = 0;
#pragma omp parallel num_threads(threads) reduction(+ : sum, walls)
    {
      const int tid = omp_get_thread_num();
      const int nt = omp_get_num_threads();
      const std::uint64_t chunk = (count + nt - 1) / nt;
      const std::uint64_t lo_t = chunk * tid;
      const std::uint64_t hi_t = lo_t + chunk < count ? lo_t + chunk : count;
      auto part = sign_window_sum_range(w, prod_mask, lo, hi, base, lo_t, hi_t);
      sum += part.sum;
      walls += part.wall_hit ? 1 : 0;
    }
    return SignSumResult{sum, walls != 0};
  }
#else
  (void)threads;
#endif
  return sign_window_sum_serial(w, prod_mask, lo, hi, base);
}

}  // namespace polyspace::kernels
