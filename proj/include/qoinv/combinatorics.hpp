#pragma once

#include <cstddef>
#include <vector>

namespace qoinv {

/// Calls f(indices) for every increasing k-subset of {0, ..., n-1}, in
/// lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Complement of a sorted subset of {0, ..., n-1}.
inline std::vector<std::size_t> complement(const std::vector<std::size_t>& subset, std::size_t n) {
  std::vector<std::size_t> out;
  std::size_t s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (s < subset.size() && subset[s] == i) {
      ++s;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

}  // namespace qoinv
