#pragma once

#include <cstdint>

#include "af/framework.hpp"

namespace af {

/// splitmix64: the committed, platform-independent generator behind every
/// seeded corpus, so instances regenerate identically everywhere.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) without modulo bias.
    std::uint64_t below(std::uint64_t bound);

  private:
    std::uint64_t state_;
};

/// Exactly m distinct attacks sampled uniformly from all n*n ordered pairs
/// (self-attacks included), duplicates resampled. Pure in (n, m, seed).
Framework random_framework(int n, long long m, std::uint64_t seed);

/// All n*n ordered pairs, every self-attack included.
Framework complete_framework(int n);

/// m/2 distinct mutual non-self attack pairs; m must be even and at most
/// n*n - n.
Framework symmetric_framework(int n, long long m, std::uint64_t seed);

}  // namespace af
