#pragma once

// Deterministic generators for the randomized property suites. All draws go
// through explicit modular reduction of a mt19937_64 stream so a seed pins
// the byte-identical case sequence on any platform.

#include <random>
#include <vector>

#include "dk/function.hpp"
#include "dk/space.hpp"

namespace dk {

class Rng {
 public:
  explicit Rng(uint64_t seed) : g_(seed) {}
  uint64_t next() { return g_(); }
  int uniform(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
  bool flip() { return (next() & 1) != 0; }
  Rational rational(int num_range = 8, int den_range = 4) {
    return Rational(uniform(-num_range, num_range), uniform(1, den_range));
  }

 private:
  std::mt19937_64 g_;
};

inline TreeSpace random_tree(Rng& rng, int min_nodes, int max_nodes) {
  int n = rng.uniform(min_nodes, max_nodes);
  std::vector<int> parent(n, -1);
  for (int i = 1; i < n; ++i) parent[i] = rng.uniform(0, i - 1);
  return TreeSpace::from_parents(parent);
}

inline NodeSet random_set(Rng& rng, const TreeSpace& sp) {
  NodeSet s(sp);
  for (int i = 0; i < sp.size(); ++i)
    if (rng.flip()) s.add(i);
  return s;
}

inline NodeSet random_nonempty_set(Rng& rng, const TreeSpace& sp) {
  NodeSet s = random_set(rng, sp);
  if (s.empty()) s.add(rng.uniform(0, sp.size() - 1));
  return s;
}

inline NodeSet random_closed_set(Rng& rng, const TreeSpace& sp) {
  return closure(random_set(rng, sp));
}

inline NodeSet random_open_set(Rng& rng, const TreeSpace& sp) {
  return closure(random_set(rng, sp)).complement();
}

inline NodeSet random_dcs(Rng& rng, const TreeSpace& sp) {
  return random_closed_set(rng, sp) & random_open_set(rng, sp);
}

inline FnR random_function(Rng& rng, const TreeSpace& sp, int num_range = 8, int den_range = 4) {
  std::vector<Rational> v(sp.size());
  for (auto& x : v) x = rng.rational(num_range, den_range);
  return FnR(sp, std::move(v));
}

// Small positive rational, biased toward achievable oscillation scales.
inline Rational random_positive_eps(Rng& rng, int num_range = 6, int den_range = 3) {
  return Rational(rng.uniform(1, num_range), rng.uniform(1, den_range));
}

}  // namespace dk
