#pragma once

// Exhaustive enumeration of unordered rooted trees by canonical level
// sequences (Beyer-Hedetniemi successor rule). Used by the acceptance suite
// to sweep every space up to a node budget.

#include <vector>

#include "dk/space.hpp"

namespace dk {

// Parent vectors (parent[0] = -1, parent[i] < i) of every unordered rooted
// tree on exactly n nodes, each appearing once.
inline std::vector<std::vector<int>> rooted_trees(int n) {
  std::vector<std::vector<int>> out;
  if (n <= 0) return out;
  std::vector<int> L(n);
  for (int i = 0; i < n; ++i) L[i] = i + 1;  // the path, lexicographically largest
  while (true) {
    std::vector<int> parent(n, -1);
    for (int i = 1; i < n; ++i)
      for (int j = i - 1; j >= 0; --j)
        if (L[j] == L[i] - 1) {
          parent[i] = j;
          break;
        }
    out.push_back(parent);
    int p = -1;
    for (int i = n - 1; i >= 1; --i)
      if (L[i] > 2) {
        p = i;
        break;
      }
    if (p < 0) break;
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
      if (L[i] == L[p] - 1) {
        q = i;
        break;
      }
    for (int i = p; i < n; ++i) L[i] = L[i - (p - q)];
  }
  return out;
}

inline size_t count_rooted_trees(int n) { return rooted_trees(n).size(); }

}  // namespace dk
