#pragma once

// Seedable, splittable randomness: xoshiro256++ streams keyed by
// (seed, stream), state-expanded with SplitMix64.  Replicate r of a run uses
// stream r, so results are bitwise independent of thread scheduling, and
// integer draws use rejection sampling (no implementation-defined
// distributions).

#include <cstdint>
#include <vector>

namespace pav {

class Rng {
  public:
    Rng(uint64_t seed, uint64_t stream) {
        uint64_t z = splitmix(seed) ^ (splitmix(stream + 0x9E3779B97F4A7C15ULL) + 0xBF58476D1CE4E5B9ULL);
        for (auto& w : s_) {
            z += 0x9E3779B97F4A7C15ULL;
            w = mix(z);
        }
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;  // all-zero state is absorbing
    }

    uint64_t next() {
        const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform on {0, ..., m-1}, unbiased (rejection).
    uint64_t below(uint64_t m) {
        const uint64_t threshold = (-m) % m;
        for (;;) {
            const uint64_t r = next();
            if (r >= threshold) return r % m;
        }
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    static uint64_t splitmix(uint64_t x) { return mix(x + 0x9E3779B97F4A7C15ULL); }

    uint64_t s_[4];
};

}  // namespace pav
