#include "pedflow/state.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "pedflow/metrics.hpp"
#include "pedflow/rng.hpp"

namespace pedflow {

namespace {

// Keyed Fisher-Yates over the band's cell list, then the first n cells are
// assigned to agents first_id..first_id+n-1 in order.
void place_side(SimState& s, CellState group, int row_begin, int row_end, int n,
                uint32_t first_id, uint64_t seed) {
    std::vector<size_t> cells;
    cells.reserve(size_t(row_end - row_begin) * size_t(s.width));
    for (int r = row_begin; r < row_end; ++r)
        for (int c = 0; c < s.width; ++c) cells.push_back(s.cell_index(r, c));

    const uint64_t side_tag = uint64_t(group);
    const size_t m = cells.size();
    for (size_t i = 0; i + 1 < m; ++i) {
        const double u = uniform(RngKey{seed, 0, Phase::Placement, side_tag, uint32_t(i)});
        const size_t j = i + std::min(size_t(u * double(m - i)), m - i - 1);
        std::swap(cells[i], cells[j]);
    }

    for (int k = 0; k < n; ++k) {
        const size_t cell = cells[size_t(k)];
        const uint32_t id = first_id + uint32_t(k);
        const int r = int(cell / size_t(s.width));
        const int c = int(cell % size_t(s.width));
        s.occupancy[cell] = group;
        s.index[cell] = id;
        AgentRecord& a = s.agent(id);
        a.index = id;
        a.group = group;
        a.row = r;
        a.col = c;
        a.future_row = r;
        a.future_col = c;
        a.tour_length = 0.0;
        a.crossed = false;
        s.scores[id - 1].owner = id;
    }
}

}  // namespace

SimState new_environment(const ScenarioConfig& cfg, uint64_t seed) {
    const int w = cfg.width;
    const int h = cfg.height;
    const int n = cfg.agents_per_side;
    const int band = band_height(n, w);
    if (2 * int64_t(n) > int64_t(w) * h || 2 * band > h)
        throw ConfigError("agents_per_side exceeds grid capacity");

    SimState s;
    s.width = w;
    s.height = h;
    s.model = cfg.model;
    s.occupancy = Matrix<CellState>(h, w, CellState::Empty);
    s.index = Matrix<uint32_t>(h, w, 0);
    s.agents.resize(size_t(2) * size_t(n));
    s.scores.resize(s.agents.size());
    if (cfg.model == Model::Aco) s.pheromone = PheromoneField(h, w, cfg.tau0);

    place_side(s, CellState::Top, 0, band, n, 1, seed);
    place_side(s, CellState::Bottom, h - band, h, n, uint32_t(n) + 1, seed);
    return s;
}

void check_consistency(const SimState& s) {
    auto fail = [](const std::string& msg) { throw std::logic_error("state corrupt: " + msg); };

    if (s.occupancy.height() != s.height || s.occupancy.width() != s.width ||
        s.index.height() != s.height || s.index.width() != s.width)
        fail("grid dimensions disagree");

    std::vector<bool> seen(s.agents.size(), false);
    size_t occupied = 0;
    for (int r = 0; r < s.height; ++r) {
        for (int c = 0; c < s.width; ++c) {
            const uint32_t id = s.index.at(r, c);
            const CellState cell = s.occupancy.at(r, c);
            if ((id == 0) != (cell == CellState::Empty)) fail("index/occupancy mismatch");
            if (id == 0) continue;
            ++occupied;
            if (id > s.agents.size()) fail("index out of agent range");
            if (seen[id - 1]) fail("agent id appears twice in the index grid");
            seen[id - 1] = true;
            const AgentRecord& a = s.agent(id);
            if (a.index != id) fail("agent record id mismatch");
            if (a.row != r || a.col != c) fail("agent position disagrees with index grid");
            if (a.group != cell) fail("agent group disagrees with occupancy");
        }
    }
    if (occupied != s.agents.size()) fail("agent count disagrees with occupied cells");

    for (const AgentRecord& a : s.agents) {
        const int dr = std::abs(a.future_row - a.row);
        const int dc = std::abs(a.future_col - a.col);
        if (dr > 1 || dc > 1) fail("future cell is not adjacent");
        if (!s.occupancy.in_bounds(a.future_row, a.future_col)) fail("future cell out of bounds");
    }
}

}  // namespace pedflow
