#pragma once

#include <cstdint>
#include <random>

namespace animat {

// Seeded generator with an explicit unit-interval mapping. Distributions from
// <random> are implementation-defined, so traces would not replay across
// standard libraries; the shift-and-scale mapping below is bit-stable.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform double in [0, 1) with 53 random bits.
    double nextUnit() {
        return static_cast<double>(gen_() >> 11) * (1.0 / 9007199254740992.0);
    }

    double nextRange(double lo, double hi) { return lo + (hi - lo) * nextUnit(); }

    std::uint64_t nextRaw() { return gen_(); }

  private:
    std::mt19937_64 gen_;
};

}  // namespace animat
