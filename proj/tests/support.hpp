#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hecke_lab/root_datum.hpp"

namespace testing {

/// Seed for the property tests; --seed N on the test binary overrides it.
std::uint64_t seed();

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline int uniform(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

inline std::vector<int> random_word(std::mt19937_64& g, int nodes, int max_len) {
  std::vector<int> w(static_cast<std::size_t>(uniform(g, 0, max_len)));
  for (auto& s : w) s = uniform(g, 0, nodes - 1);
  return w;
}

inline hecke_lab::IntVec random_coweight(std::mt19937_64& g, int rank, int bound) {
  hecke_lab::IntVec v(static_cast<std::size_t>(rank));
  for (auto& x : v) x = uniform(g, -bound, bound);
  return v;
}

}  // namespace testing
