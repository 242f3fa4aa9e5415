#pragma once

#include <vector>

namespace rga::detail {

// Visits every size-k subset of {0..n-1} in ascending binary-counter order
// (vertex 0 = least significant bit), i.e. colexicographic order. fn receives
// the subset as a strictly ascending vector and returns true to stop early.
// Returns true iff fn stopped the walk.
template <typename Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return false;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  for (;;) {
    if (fn(static_cast<const std::vector<int>&>(c))) return true;
    // colex successor: bump the lowest slot that has room, reset those below
    int i = 0;
    while (i < k) {
      const int limit = (i + 1 < k) ? c[i + 1] : n;
      if (c[i] + 1 < limit) break;
      ++i;
    }
    if (i == k) return false;
    ++c[i];
    for (int j = 0; j < i; ++j) c[j] = j;
  }
}

}  // namespace rga::detail
