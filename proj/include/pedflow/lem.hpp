#pragma once

#include <array>
#include <cstdint>

#include "pedflow/grid.hpp"
#include "pedflow/rng.hpp"

namespace pedflow {

// Per-agent candidate values over the 8 goal-relative slots. For the least
// effort model a value is d_min/d_i in (0, 1]; for the ant model it is the
// transition-rule numerator. Blocked or out-of-bounds slots score 0.
struct CandidateScores {
    std::array<double, kNumDirs> score{};
    uint32_t owner = 0;
};

// Outcome of a selection: either stay put or move to an adjacent cell that
// was empty in the step-start snapshot.
struct Decision {
    bool move = false;
    int32_t row = 0;
    int32_t col = 0;

    static Decision stay() { return {}; }
    static Decision move_to(int32_t r, int32_t c) { return {true, r, c}; }
};

struct LemParams {
    double mu_sel = 1.0;     // mean of the selection draw, in units of C_max
    double sigma_sel = 0.5;  // spread of the selection draw, same units
};

// Least-effort candidate values: score_i = d_min / d_i for open slots.
CandidateScores lem_scores(const Neighborhood& nbhd, const DistanceTable& dtable,
                           uint32_t owner = 0);

// Forward cell first; otherwise a normal draw clamped into [0, C_max] picks
// the candidate with the nearest score. Equal-score ties are broken by one
// uniform draw keyed at Phase::TieBreak.
Decision lem_select(const CandidateScores& scores, const Neighborhood& nbhd, const RngKey& key,
                    const LemParams& params = {});

}  // namespace pedflow
