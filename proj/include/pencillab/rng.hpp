#pragma once

#include <cstdint>
#include <random>

#include "pencillab/homform.hpp"

namespace pencillab {

inline constexpr std::uint64_t kDefaultSeed = 0x1F2E3D4C5B6A7989ULL;

// Deterministic RNG for coordinate changes and sampled configurations.
// mt19937_64 output is pinned by the standard, so runs reproduce across
// platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : gen_(seed) {}

    long int_in(long lo, long hi) {  // inclusive
        std::uniform_int_distribution<long> d(lo, hi);
        return d(gen_);
    }

    Rat rat(long num_range, long den_range) {
        long den = int_in(1, den_range);
        return Rat(int_in(-num_range, num_range), den);
    }

    // Random unimodular integer matrix built from elementary operations;
    // entries stay small.
    Mat3 unimodular3(int ops = 6) {
        Mat3 m = mat3_identity();
        for (int t = 0; t < ops; ++t) {
            int kind = static_cast<int>(int_in(0, 2));
            int i = static_cast<int>(int_in(0, 2));
            int j = static_cast<int>(int_in(0, 2));
            if (kind == 0 && i != j) {
                Rat f(int_in(-2, 2));
                for (int c = 0; c < 3; ++c) m[i][c] += f * m[j][c];
            } else if (kind == 1 && i != j) {
                std::swap(m[i], m[j]);
            } else {
                for (int c = 0; c < 3; ++c) m[i][c] = -m[i][c];
            }
        }
        return m;
    }

    std::uint64_t raw() { return gen_(); }

  private:
    std::mt19937_64 gen_;
};

}  // namespace pencillab
