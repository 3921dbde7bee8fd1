#include "pedflow/engine.hpp"

#include <atomic>
#include <cassert>
#include <chrono>
#include <cmath>
#include <thread>

namespace pedflow {

namespace {

// Neighbor scan order around a destination cell, row-major. Contenders are
// gathered in this order; the winner index comes from one keyed draw.
constexpr std::array<std::array<int, 2>, 8> kCellNeighbors{{
    {{-1, -1}},
    {{-1, 0}},
    {{-1, +1}},
    {{0, -1}},
    {{0, +1}},
    {{+1, -1}},
    {{+1, 0}},
    {{+1, +1}},
}};

int resolve_threads(ExecutorKind kind, int threads) {
    if (kind == ExecutorKind::Sequential) return 1;
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? int(hw) : 1;
}

}  // namespace

EngineOptions EngineOptions::from_config(const ScenarioConfig& cfg, uint64_t seed) {
    EngineOptions opt;
    opt.model = cfg.model;
    opt.executor = cfg.executor;
    opt.threads = cfg.threads;
    opt.seed = seed;
    opt.dtable = distance_table(cfg.d0);
    opt.lem = LemParams{cfg.sel_mu, cfg.sel_sigma};
    opt.aco = AcoParams{cfg.alpha, cfg.beta, cfg.rho, cfg.tau0, cfg.q};
    opt.crossing_band = band_height(cfg.agents_per_side, cfg.width);
    return opt;
}

StepEngine::StepEngine(EngineOptions opt)
    : opt_(std::move(opt)),
      heur_(AcoHeuristic::make(opt_.dtable, opt_.aco)),
      pool_(std::make_unique<ThreadPool>(resolve_threads(opt_.executor, opt_.threads))) {}

StepReport StepEngine::step(SimState& s) {
    score_phase(s);
    intention_phase(s);
    StepReport report = movement_phase(s);
    reset_phase(s);
#ifndef NDEBUG
    check_consistency(s);
#endif
    return report;
}

void StepEngine::score_phase(SimState& s) {
    pool_->parallel_for(int64_t(s.agents.size()), [&](int64_t begin, int64_t end) {
        for (int64_t i = begin; i < end; ++i) {
            const AgentRecord& a = s.agents[size_t(i)];
            const Neighborhood nb = neighborhood(s.occupancy, a);
            s.scores[size_t(i)] = opt_.model == Model::Lem
                                      ? lem_scores(nb, opt_.dtable, a.index)
                                      : aco_numerators(nb, s.pheromone, a.group, heur_, a.index);
        }
    });
}

void StepEngine::intention_phase(SimState& s) {
    const Phase phase = opt_.model == Model::Lem ? Phase::LemSelect : Phase::AcoSelect;
    pool_->parallel_for(int64_t(s.agents.size()), [&](int64_t begin, int64_t end) {
        for (int64_t i = begin; i < end; ++i) {
            AgentRecord& a = s.agents[size_t(i)];
            const Neighborhood nb = neighborhood(s.occupancy, a);
            const RngKey key{opt_.seed, s.step, phase, a.index, 0};
            const Decision d = opt_.model == Model::Lem
                                   ? lem_select(s.scores[size_t(i)], nb, key, opt_.lem)
                                   : aco_select(s.scores[size_t(i)], nb, key);
            a.future_row = d.move ? d.row : a.row;
            a.future_col = d.move ? d.col : a.col;
        }
    });
}

StepReport StepEngine::movement_phase(SimState& s) {
    StepReport report;
    report.step = s.step;
    const int64_t cells = int64_t(s.occupancy.size());
    winners_.assign(size_t(cells), 0);

    // Gather: every cell empty at step start scans its neighbors for agents
    // whose future is this cell, and draws its winner. Reads touch only the
    // snapshot (grids and futures); writes touch only winners_[cell].
    pool_->parallel_for(cells, [&](int64_t begin, int64_t end) {
        for (int64_t idx = begin; idx < end; ++idx) {
            if (s.occupancy[size_t(idx)] != CellState::Empty) continue;
            const int r = int(idx / s.width);
            const int c = int(idx % s.width);
            uint32_t contenders[8];
            int k = 0;
            for (const auto& off : kCellNeighbors) {
                const int nr = r + off[0];
                const int nc = c + off[1];
                if (!s.occupancy.in_bounds(nr, nc)) continue;
                const uint32_t id = s.index.at(nr, nc);
                if (id == 0) continue;
                const AgentRecord& a = s.agents[id - 1];
                if (a.future_row == r && a.future_col == c) contenders[k++] = id;
            }
            if (k == 0) continue;
            const double u =
                uniform(RngKey{opt_.seed, s.step, Phase::Resolve, uint64_t(idx), 0});
            winners_[size_t(idx)] = contenders[std::min(int(u * k), k - 1)];
        }
    });

    // Pheromone decay happens once per step, before any deposit.
    if (opt_.model == Model::Aco && !s.pheromone.empty()) {
        const double factor = 1.0 - opt_.aco.rho;
        pool_->parallel_for(cells, [&](int64_t begin, int64_t end) {
            evaporate_range(s.pheromone.top, factor, size_t(begin), size_t(end));
            evaporate_range(s.pheromone.bottom, factor, size_t(begin), size_t(end));
        });
    }

    // Commit: each winning cell swaps its winner in. Destination cells are
    // distinct by construction and an agent wins at most one cell, so every
    // write (two grid cells, the agent row, the deposit cell) is owned by
    // exactly one iteration.
    std::atomic<uint32_t> moved{0}, newly_top{0}, newly_bottom{0};
    pool_->parallel_for(cells, [&](int64_t begin, int64_t end) {
        uint32_t local_moved = 0, local_top = 0, local_bottom = 0;
        for (int64_t idx = begin; idx < end; ++idx) {
            const uint32_t id = winners_[size_t(idx)];
            if (id == 0) continue;
            AgentRecord& a = s.agents[id - 1];
            const int dest_r = int(idx / s.width);
            const int dest_c = int(idx % s.width);
            assert(s.index.at(a.row, a.col) == id);
            assert(s.occupancy[size_t(idx)] == CellState::Empty);

            const int dr = dest_r - a.row;
            const int dc = dest_c - a.col;
            s.occupancy.at(a.row, a.col) = CellState::Empty;
            s.index.at(a.row, a.col) = 0;
            s.occupancy[size_t(idx)] = a.group;
            s.index[size_t(idx)] = id;
            a.row = dest_r;
            a.col = dest_c;
            ++local_moved;

            if (opt_.model == Model::Aco) {
                a.tour_length += (dr != 0 && dc != 0) ? kDiagonalStep : 1.0;
                deposit(s.pheromone, a.group, dest_r, dest_c, a.tour_length, opt_.aco);
            }
            if (!a.crossed && crossed(a, s.height, opt_.crossing_band)) {
                a.crossed = true;
                if (a.group == CellState::Top) {
                    ++local_top;
                } else {
                    ++local_bottom;
                }
            }
        }
        moved.fetch_add(local_moved, std::memory_order_relaxed);
        newly_top.fetch_add(local_top, std::memory_order_relaxed);
        newly_bottom.fetch_add(local_bottom, std::memory_order_relaxed);
    });

    report.moved = moved.load();
    report.newly_crossed_top = newly_top.load();
    report.newly_crossed_bottom = newly_bottom.load();
    return report;
}

void StepEngine::reset_phase(SimState& s) {
    pool_->parallel_for(int64_t(s.agents.size()), [&](int64_t begin, int64_t end) {
        for (int64_t i = begin; i < end; ++i) {
            AgentRecord& a = s.agents[size_t(i)];
            s.scores[size_t(i)].score.fill(0.0);
            a.future_row = a.row;
            a.future_col = a.col;
        }
    });
    ++s.step;
}

RunReport run_scenario(const ScenarioConfig& cfg, uint64_t seed, ExecutorKind executor,
                       int threads) {
    validate(cfg);
    const auto t0 = std::chrono::steady_clock::now();

    SimState state = new_environment(cfg, seed);
    EngineOptions opt = EngineOptions::from_config(cfg, seed);
    opt.executor = executor;
    opt.threads = threads;
    StepEngine engine(std::move(opt));

    RunReport report;
    report.config = cfg;
    report.seed = seed;
    report.model = cfg.model;
    report.executor = executor;
    report.threads = resolve_threads(executor, threads);
    report.agents_total = uint32_t(state.agents.size());
    report.series.reserve(size_t(cfg.steps));

    uint32_t cum_top = 0, cum_bottom = 0;
    for (int i = 0; i < cfg.steps; ++i) {
        const StepReport sr = engine.step(state);
        cum_top += sr.newly_crossed_top;
        cum_bottom += sr.newly_crossed_bottom;
        report.series.push_back({sr.step, cum_top, cum_bottom, cum_top + cum_bottom, sr.moved});
    }

    report.throughput = cum_top + cum_bottom;
    report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

RunReport run_scenario(const ScenarioConfig& cfg, uint64_t seed) {
    return run_scenario(cfg, seed, cfg.executor, cfg.threads);
}

}  // namespace pedflow
