#pragma once

#include <random>
#include <string>
#include <vector>

#include "mwall/group_model.hpp"
#include "mwall/wallspace.hpp"

namespace mwall::testing {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::int64_t uniform(std::mt19937_64& g, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(g);
}

inline IntVec random_vector(std::mt19937_64& g, std::size_t n, std::int64_t bound) {
  IntVec v(n);
  for (auto& x : v) x = uniform(g, -bound, bound);
  return v;
}

// Random reduced word of length <= len over rank generators.
inline Word random_word(std::mt19937_64& g, int rank, int len) {
  Word w;
  int n = static_cast<int>(uniform(g, 0, len));
  while (static_cast<int>(w.size()) < n) {
    Letter l = static_cast<Letter>(uniform(g, 1, rank));
    if (uniform(g, 0, 1)) l = static_cast<Letter>(-l);
    if (!w.empty() && w.back() == -l) continue;
    w.push_back(l);
  }
  return w;
}

inline std::int64_t l1(const IntVec& a, const IntVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
  return s;
}

// Tree distance by walking both words to their meeting point.
inline std::int64_t tree_distance_oracle(const Word& a, const Word& b) {
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
  return static_cast<std::int64_t>(a.size() - k + b.size() - k);
}

inline std::string fixture(const std::string& name) { return std::string(MWALL_FIXTURE_DIR) + "/" + name; }

}  // namespace mwall::testing
