#pragma once

#include <cstdint>

namespace pedflow {

// Which part of the simulation a draw belongs to. Keeping the phases apart in
// the key space means no two subsystems can ever consume the same stream.
enum class Phase : uint32_t {
    Placement = 0,
    LemSelect = 1,
    AcoSelect = 2,
    Resolve = 3,
    TieBreak = 4,
};

// Address of a single random draw. Every draw in a run is a pure function of
// this tuple, so replaying a run — in any order, on any number of threads —
// reproduces the exact same values.
struct RngKey {
    uint64_t seed = 0;
    uint32_t step = 0;
    Phase phase = Phase::Placement;
    uint64_t entity = 0;  // agent id or cell linear index
    uint32_t counter = 0; // draw ordinal within (step, phase, entity)

    RngKey with_phase(Phase p) const {
        RngKey k = *this;
        k.phase = p;
        return k;
    }
    RngKey with_counter(uint32_t c) const {
        RngKey k = *this;
        k.counter = c;
        return k;
    }
};

// 64 uniform bits from Philox4x32-10 applied to the key tuple.
uint64_t random_bits(const RngKey& key);

// Uniform double in [0, 1), 53 significant bits.
double uniform(const RngKey& key);

// Normal(mu, sigma) variate via the inverse-CDF map (Wichura's AS 241 PPND16
// rational approximation). sigma == 0 returns exactly mu.
double normal(const RngKey& key, double mu, double sigma);

// Quantile function of the standard normal distribution; exposed for tests.
double inverse_normal_cdf(double p);

}  // namespace pedflow
