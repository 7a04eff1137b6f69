#pragma once

#include <cstdint>
#include <iostream>

#include "fiedler/generate.hpp"

#ifndef FIEDLER_TEST_SEED
#define FIEDLER_TEST_SEED 1
#endif

namespace helpers {

// Seeded from FIEDLER_SEED when set so a failing run can be replayed.
inline fiedler::Rng make_rng(std::uint64_t salt) {
  static const std::uint64_t base = [] {
    const auto s = fiedler::seed_from_env(FIEDLER_TEST_SEED);
    std::cerr << "random seed " << s << "\n";
    return s;
  }();
  return fiedler::Rng(base ^ (salt * 0x9E3779B97F4A7C15ull));
}

inline std::size_t pick(fiedler::Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline double uniform(fiedler::Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace helpers
