#include "pedflow/lem.hpp"

#include <algorithm>
#include <cmath>

namespace pedflow {

CandidateScores lem_scores(const Neighborhood& nbhd, const DistanceTable& dtable, uint32_t owner) {
    CandidateScores cs;
    cs.owner = owner;
    // d_min is taken over all 8 distances regardless of occupancy, which by
    // table construction is always the forward distance.
    const double dmin = dtable.min();
    for (int i = 0; i < kNumDirs; ++i) {
        cs.score[size_t(i)] = nbhd.open(Dir(i)) ? dmin / dtable.d[size_t(i)] : 0.0;
    }
    return cs;
}

Decision lem_select(const CandidateScores& scores, const Neighborhood& nbhd, const RngKey& key,
                    const LemParams& params) {
    // Forward priority: an open forward cell is taken without any draw.
    if (nbhd.open(Dir::F)) {
        const NeighborSlot& f = nbhd.slot[size_t(Dir::F)];
        return Decision::move_to(f.row, f.col);
    }

    double cmax = 0.0;
    for (double s : scores.score) cmax = std::max(cmax, s);
    if (cmax <= 0.0) return Decision::stay();

    // Draw a target value and clamp it into the score range; negatives become
    // 0 and overshoots become C_max, so the best candidate is the mode.
    double r = normal(key, params.mu_sel * cmax, params.sigma_sel * cmax);
    r = std::clamp(r, 0.0, cmax);

    // Candidate whose score lies nearest the target, canonical order.
    double best = -1.0;
    int tied[kNumDirs];
    int ntied = 0;
    for (int i = 0; i < kNumDirs; ++i) {
        const double s = scores.score[size_t(i)];
        if (s <= 0.0) continue;
        const double gap = std::fabs(s - r);
        if (ntied == 0 || gap < best) {
            best = gap;
            ntied = 0;
            tied[ntied++] = i;
        } else if (gap == best) {
            tied[ntied++] = i;
        }
    }

    int pick = tied[0];
    if (ntied > 1) {
        const double u = uniform(key.with_phase(Phase::TieBreak));
        pick = tied[std::min(int(u * ntied), ntied - 1)];
    }
    const NeighborSlot& s = nbhd.slot[size_t(pick)];
    return Decision::move_to(s.row, s.col);
}

}  // namespace pedflow
