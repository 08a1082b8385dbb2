#include "polyspace/partition.hpp"

#include <algorithm>

#include "polyspace/errors.hpp"

namespace polyspace {

Partition Partition::singletons(int n) {
  Partition P;
  P.n_ = n;
  P.parts_.reserve(n);
  for (int i = 0; i < n; ++i) P.parts_.push_back(Subset::single(i));
  return P;
}

Partition Partition::from_parts(std::vector<Subset> parts, int n) {
  Subset seen(0);
  for (Subset part : parts) {
    if (part.bits == 0)
      throw Error(errc::bad_argument, "partition has an empty part");
    if (seen.intersects(part))
      throw Error(errc::bad_argument, "partition parts overlap");
    seen = seen | part;
  }
  if (seen != Subset::full(n))
    throw Error(errc::bad_argument, "partition does not cover the index set");
  std::sort(parts.begin(), parts.end(),
            [](Subset a, Subset b) { return a.min_index() < b.min_index(); });
  Partition P;
  P.n_ = n;
  P.parts_ = std::move(parts);
  return P;
}

int Partition::part_containing(int i) const {
  for (int a = 0; a < size(); ++a)
    if (parts_[a].contains(i)) return a;
  throw Error(errc::bad_argument, "index not covered by partition");
}

Partition Partition::merge(int a, int b) const {
  std::vector<Subset> parts;
  parts.reserve(parts_.size() - 1);
  for (int c = 0; c < size(); ++c) {
    if (c == b) continue;
    parts.push_back(c == a ? (parts_[a] | parts_[b]) : parts_[c]);
  }
  std::sort(parts.begin(), parts.end(),
            [](Subset x, Subset y) { return x.min_index() < y.min_index(); });
  Partition P;
  P.n_ = n_;
  P.parts_ = std::move(parts);
  return P;
}

std::strong_ordering operator<=>(const Partition& x, const Partition& y) {
  if (auto c = x.parts_.size() <=> y.parts_.size(); c != 0) return c;
  for (std::size_t a = 0; a < x.parts_.size(); ++a)
    if (auto c = x.parts_[a].bits <=> y.parts_[a].bits; c != 0) return c;
  return std::strong_ordering::equal;
}

void CycleSum::add(const Partition& P, const Int& coeff) {
  if (coeff == 0) return;
  auto it = terms.find(P);
  if (it == terms.end()) {
    terms.emplace(P, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

std::vector<Partition> partitions_into(int n, int k) {
  std::vector<Partition> result;
  if (k < 1 || k > n) return result;
  // restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(prefix),
  // exactly k distinct values; generated in lexicographic order
  std::vector<int> rgs(n, 0), maxv(n, 0);
  auto emit = [&] {
    if (maxv[n - 1] + 1 != k) return;
    // rgs blocks are numbered by first appearance, already sorted by min
    std::vector<Subset> parts(k, Subset(0));
    for (int i = 0; i < n; ++i) parts[rgs[i]] = parts[rgs[i]].with(i);
    result.push_back(Partition::from_parts(std::move(parts), n));
  };
  // iterative successor walk
  emit();
  for (;;) {
    int i = n - 1;
    // max value at position i is min(k-1, maxv[i-1]+1)
    while (i > 0) {
      int cap = std::min(k - 1, maxv[i - 1] + 1);
      if (rgs[i] < cap) break;
      --i;
    }
    if (i == 0) break;
    ++rgs[i];
    maxv[i] = std::max(maxv[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      maxv[j] = maxv[j - 1];
    }
    emit();
  }
  return result;
}

}  // namespace polyspace
