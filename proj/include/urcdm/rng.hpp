#pragma once

#include <cmath>
#include <cstdint>

namespace urcdm {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Mixes a seed with a tag. Used to derive independent streams
/// (per task, per stage, per draw) from one master seed.
inline uint64_t hash_combine(uint64_t seed, uint64_t tag) {
    uint64_t s = seed ^ (tag + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    return splitmix64(s);
}

/// Small deterministic PRNG. splitmix64 core, Box-Muller normals.
/// Bit-stable across platforms, unlike std::normal_distribution.
class Rng {
   public:
    explicit Rng(uint64_t seed) : state_(seed) {
        // burn a few outputs so nearby seeds decorrelate
        splitmix64(state_);
        splitmix64(state_);
    }

    uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    uint64_t uniform_index(uint64_t n) {
        // modulo bias is irrelevant at our n << 2^64
        return n == 0 ? 0 : next_u64() % n;
    }

    /// Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

   private:
    uint64_t state_;
    double spare_ = 0;
    bool have_spare_ = false;
};

}  // namespace urcdm
