#pragma once

#include <cstdint>
#include <random>

#include "gwmono/states.hpp"

namespace gwmono {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

// Seeded generator with platform-independent uniform and normal draws
// (std distributions are implementation-defined, which would break
// byte-identical reports across toolchains).
class Rng {
public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

    // [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    // [lo, hi] inclusive
    int integer(int lo, int hi);
    double normal();

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Complex Gaussian coefficients, normalized.
GWState random_gw_state(Rng& rng, int n, int d);

// Random partition of `sites` into `blocks` non-empty blocks.
Partition random_partition(Rng& rng, int n, const SiteSet& sites, int blocks);

}  // namespace gwmono
