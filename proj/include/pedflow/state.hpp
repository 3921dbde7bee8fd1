#pragma once

#include <cstdint>
#include <vector>

#include "pedflow/aco.hpp"
#include "pedflow/config.hpp"
#include "pedflow/grid.hpp"
#include "pedflow/lem.hpp"

namespace pedflow {

// The entire mutable world: occupancy and index grids, the agent table, the
// per-group pheromone fields (ant runs only) and the per-agent score buffer.
// A plain value; copying one is copying the simulation.
struct SimState {
    int width = 0;
    int height = 0;
    Model model = Model::Lem;

    Matrix<CellState> occupancy;
    Matrix<uint32_t> index;  // 0 = empty, else agent id
    std::vector<AgentRecord> agents;
    PheromoneField pheromone;  // sized only for ACO runs
    std::vector<CandidateScores> scores;
    uint32_t step = 0;

    AgentRecord& agent(uint32_t id) { return agents[id - 1]; }
    const AgentRecord& agent(uint32_t id) const { return agents[id - 1]; }
    size_t cell_index(int r, int c) const { return size_t(r) * size_t(width) + size_t(c); }
};

// Builds the initial world: agents_per_side agents per group, placed
// uniformly without collision inside each side's band of
// ceil(agents_per_side / width) rows, by a deterministic keyed shuffle.
// Pheromone starts uniform at tau0, tours at 0, futures at the positions.
SimState new_environment(const ScenarioConfig& cfg, uint64_t seed);

// Full cross-structure audit: index/occupancy bijection, agent table
// consistency, future cells adjacent or current. Throws std::logic_error
// with a description on the first violation.
void check_consistency(const SimState& state);

}  // namespace pedflow
