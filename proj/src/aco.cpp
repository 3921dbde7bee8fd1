#include "pedflow/aco.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "pedflow/errors.hpp"

namespace pedflow {

const double kDiagonalStep = std::sqrt(2.0);

double PheromoneField::mass() const {
    double m = 0.0;
    for (double v : top.data()) m += v;
    for (double v : bottom.data()) m += v;
    return m;
}

AcoHeuristic AcoHeuristic::make(const DistanceTable& dtable, const AcoParams& params) {
    AcoHeuristic h;
    h.alpha = params.alpha;
    for (int i = 0; i < kNumDirs; ++i) {
        h.inv_dist_pow[size_t(i)] = std::pow(1.0 / dtable.d[size_t(i)], params.beta);
    }
    return h;
}

namespace {

inline double pheromone_term(double tau, double alpha) {
    if (alpha == 1.0) return tau;
    if (alpha == 0.0) return 1.0;
    return std::pow(tau, alpha);
}

}  // namespace

CandidateScores aco_numerators(const Neighborhood& nbhd, const PheromoneField& field,
                               CellState group, const AcoHeuristic& heur, uint32_t owner) {
    CandidateScores cs;
    cs.owner = owner;
    const Matrix<double>& tau = field.for_group(group);
    for (int i = 0; i < kNumDirs; ++i) {
        if (!nbhd.open(Dir(i))) continue;
        const NeighborSlot& s = nbhd.slot[size_t(i)];
        cs.score[size_t(i)] =
            pheromone_term(tau.at(s.row, s.col), heur.alpha) * heur.inv_dist_pow[size_t(i)];
    }
    return cs;
}

CandidateScores aco_numerators(const Neighborhood& nbhd, const PheromoneField& field,
                               CellState group, const DistanceTable& dtable,
                               const AcoParams& params, uint32_t owner) {
    return aco_numerators(nbhd, field, group, AcoHeuristic::make(dtable, params), owner);
}

Decision aco_select(const CandidateScores& scores, const Neighborhood& nbhd, const RngKey& key) {
    if (nbhd.open(Dir::F)) {
        const NeighborSlot& f = nbhd.slot[size_t(Dir::F)];
        return Decision::move_to(f.row, f.col);
    }

    int cand[kNumDirs];
    int k = 0;
    double total = 0.0;
    for (int i = 0; i < kNumDirs; ++i) {
        if (!nbhd.open(Dir(i))) continue;
        cand[k++] = i;
        total += scores.score[size_t(i)];
    }
    if (k == 0) return Decision::stay();

    const double u = uniform(key);
    int pick = cand[k - 1];
    if (total <= 0.0) {
        // Degenerate numerators: uniform over the open candidates.
        pick = cand[std::min(int(u * k), k - 1)];
    } else {
        // First candidate whose cumulative probability exceeds u.
        double cum = 0.0;
        for (int j = 0; j < k; ++j) {
            cum += scores.score[size_t(cand[j])];
            if (cum > u * total) {
                pick = cand[j];
                break;
            }
        }
    }
    const NeighborSlot& s = nbhd.slot[size_t(pick)];
    return Decision::move_to(s.row, s.col);
}

void evaporate_range(Matrix<double>& field, double factor, size_t begin, size_t end) {
    double* v = field.data().data();
    for (size_t i = begin; i < end; ++i) v[i] *= factor;
}

void evaporate(PheromoneField& field, double rho) {
    if (!(rho > 0.0 && rho <= 1.0)) throw ConfigError("rho must be in (0, 1]");
    const double factor = 1.0 - rho;
    evaporate_range(field.top, factor, 0, field.top.size());
    evaporate_range(field.bottom, factor, 0, field.bottom.size());
}

double tour_increment(Dir d) {
    switch (d) {
        case Dir::FL:
        case Dir::FR:
        case Dir::BL:
        case Dir::BR:
            return kDiagonalStep;
        default:
            return 1.0;
    }
}

void deposit(PheromoneField& field, CellState group, int row, int col, double tour_length,
             const AcoParams& params) {
    assert(tour_length > 0.0);
    field.for_group(group).at(row, col) += params.q / tour_length;
}

}  // namespace pedflow
