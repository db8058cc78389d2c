#pragma once

#include "lsv/verify.hpp"
#include "lsv/weyl.hpp"

#include <vector>

namespace lsv::testing {

// Subword characterization of the Bruhat order, kept test-only as the
// independent oracle for the lift/descent recursion: fix one reduced word of
// w; then y <= w iff some subword multiplies out to y (such a subword has
// length l(y), hence is reduced).
inline bool bruhat_leq_subword(const WeylGroup& wg, int y, int w) {
  const auto& word = wg.word(w);
  const int n = static_cast<int>(word.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<int>(__builtin_popcount(mask)) != wg.length(y)) continue;
    int z = wg.identity();
    for (int j = 0; j < n; ++j)
      if (mask & (1u << j)) z = wg.times_simple(z, word[j]);
    if (z == y) return true;
  }
  return false;
}

}  // namespace lsv::testing
