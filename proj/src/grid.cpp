#include "pedflow/grid.hpp"

#include <cassert>
#include <cmath>

#include "pedflow/errors.hpp"

namespace pedflow {

DistanceTable distance_table(double d0) {
    if (!(d0 > 1.0)) throw ConfigError("d0 must be > 1");
    auto dist = [d0](int f, int l) { return std::sqrt((d0 - f) * (d0 - f) + double(l * l)); };
    DistanceTable t;
    t.d0 = d0;
    t.d = {
        dist(+1, 0),  // F
        dist(+1, 1),  // FL
        dist(+1, 1),  // FR
        dist(0, 1),   // L
        dist(0, 1),   // R
        dist(-1, 0),  // B
        dist(-1, 1),  // BL
        dist(-1, 1),  // BR
    };
    assert(t.d[0] < t.d[1] && t.d[1] < t.d[3] && t.d[3] < t.d[5] && t.d[5] < t.d[6]);
    return t;
}

Neighborhood neighborhood(const Matrix<CellState>& occupancy, const AgentRecord& agent) {
    Neighborhood nb;
    for (int i = 0; i < kNumDirs; ++i) {
        const auto [dr, dc] = dir_offset(agent.group, Dir(i));
        NeighborSlot& s = nb.slot[size_t(i)];
        s.row = agent.row + dr;
        s.col = agent.col + dc;
        s.in_bounds = occupancy.in_bounds(s.row, s.col);
        s.occupant = s.in_bounds ? occupancy.at(s.row, s.col) : CellState::Empty;
    }
    return nb;
}

}  // namespace pedflow
