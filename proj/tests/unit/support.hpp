#pragma once

// Small helpers shared by the unit tests. Nothing here calls into the library
// beyond constructing values.

#include <cstdint>
#include <random>
#include <vector>

#include "hartop/lattice.hpp"
#include "hartop/rational.hpp"

namespace testing {

inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline hartop::MultiIndex random_exponent(std::mt19937_64& rng, std::size_t n, std::int64_t bound) {
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = draw(rng, -bound, bound);
  return hartop::MultiIndex(std::move(v));
}

inline hartop::ComplexRational random_coefficient(std::mt19937_64& rng) {
  mpq_class re(static_cast<long>(draw(rng, -9, 9)), static_cast<unsigned long>(draw(rng, 1, 9)));
  mpq_class im(static_cast<long>(draw(rng, -9, 9)), static_cast<unsigned long>(draw(rng, 1, 9)));
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

/// All points of [-b, b]^n.
inline std::vector<hartop::MultiIndex> cube(std::size_t n, std::int64_t b) {
  std::vector<hartop::MultiIndex> out;
  std::vector<std::int64_t> cur(n, -b);
  while (true) {
    out.emplace_back(cur);
    std::size_t k = 0;
    while (k < n && cur[k] == b) cur[k++] = -b;
    if (k == n) break;
    ++cur[k];
  }
  return out;
}

}  // namespace testing
