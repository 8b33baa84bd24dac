#pragma once

// Seeded random multisets for property checks. Draws use only the raw
// 64-bit Mersenne Twister output, so a seed gives the same corpus on every
// platform.

#include <cstdint>
#include <random>

#include "zpsum/multiset.hpp"

namespace zpsum {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

class Corpus {
 public:
  explicit Corpus(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }

  // Arbitrary multiset (zero allowed, multiplicities up to p+1) with at
  // most `max_choices` submultisets, i.e. prod(m_x + 1) <= max_choices.
  Multiset any(const GroupParams& g, std::uint64_t max_choices);

  // Valid multiset of size n built by random insertion; elements that would
  // break validity are skipped. May come back smaller than n when the
  // attempts run out.
  Multiset valid(const GroupParams& g, std::uint64_t n);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace zpsum
