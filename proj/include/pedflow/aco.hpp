#pragma once

#include <cstdint>

#include "pedflow/grid.hpp"
#include "pedflow/lem.hpp"
#include "pedflow/rng.hpp"

namespace pedflow {

struct AcoParams {
    double alpha = 1.0;  // pheromone weight
    double beta = 2.0;   // heuristic (distance) weight
    double rho = 0.05;   // evaporation rate, (0, 1]
    double tau0 = 0.1;   // initial pheromone level, > 0
    double q = 1.0;      // deposit scale, > 0
};

// One non-negative scalar field per group. Agents read and reinforce only
// their own group's field.
struct PheromoneField {
    Matrix<double> top;
    Matrix<double> bottom;

    PheromoneField() = default;
    PheromoneField(int height, int width, double tau0)
        : top(height, width, tau0), bottom(height, width, tau0) {}

    bool empty() const { return top.size() == 0; }

    Matrix<double>& for_group(CellState g) { return g == CellState::Top ? top : bottom; }
    const Matrix<double>& for_group(CellState g) const {
        return g == CellState::Top ? top : bottom;
    }

    double mass() const;
};

// Direction-indexed factors of the transition numerator that do not change
// during a run; computing them once keeps the per-step cost close to the
// least-effort model's.
struct AcoHeuristic {
    std::array<double, kNumDirs> inv_dist_pow{};  // (1/d_i)^beta
    double alpha = 1.0;

    static AcoHeuristic make(const DistanceTable& dtable, const AcoParams& params);
};

// Transition-rule numerators: tau(slot, own group)^alpha * (1/d_i)^beta for
// open slots, 0 elsewhere.
CandidateScores aco_numerators(const Neighborhood& nbhd, const PheromoneField& field,
                               CellState group, const AcoHeuristic& heur, uint32_t owner = 0);
CandidateScores aco_numerators(const Neighborhood& nbhd, const PheromoneField& field,
                               CellState group, const DistanceTable& dtable,
                               const AcoParams& params, uint32_t owner = 0);

// Forward cell first; otherwise roulette selection over the open candidates
// with exact normalized numerator probabilities. A zero numerator sum falls
// back to a uniform choice among the open candidates.
Decision aco_select(const CandidateScores& scores, const Neighborhood& nbhd, const RngKey& key);

// Scales every entry of both fields by (1 - rho). Applied exactly once per
// step, before any deposit.
void evaporate(PheromoneField& field, double rho);

// Elementwise evaporation over a linear index range; the executors use this
// so split work produces bit-identical fields.
void evaporate_range(Matrix<double>& field, double factor, size_t begin, size_t end);

// Euclidean length of one move: 1 for straight steps, sqrt(2) for diagonals.
extern const double kDiagonalStep;
double tour_increment(Dir d);

// Adds q / tour_length at the mover's new cell in its group field. Call only
// after the move's increment has been applied to tour_length.
void deposit(PheromoneField& field, CellState group, int row, int col, double tour_length,
             const AcoParams& params);

}  // namespace pedflow
