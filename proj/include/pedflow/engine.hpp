#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pedflow/aco.hpp"
#include "pedflow/config.hpp"
#include "pedflow/lem.hpp"
#include "pedflow/metrics.hpp"
#include "pedflow/state.hpp"
#include "pedflow/thread_pool.hpp"

namespace pedflow {

struct StepReport {
    uint32_t step = 0;  // 0-based index of the step this report describes
    uint32_t moved = 0;
    uint32_t newly_crossed_top = 0;
    uint32_t newly_crossed_bottom = 0;
};

struct EngineOptions {
    Model model = Model::Lem;
    ExecutorKind executor = ExecutorKind::Sequential;
    int threads = 1;  // parallel executor only; 0 = hardware default
    uint64_t seed = 0;
    DistanceTable dtable = distance_table(2.0);
    LemParams lem;
    AcoParams aco;
    int crossing_band = 1;

    static EngineOptions from_config(const ScenarioConfig& cfg, uint64_t seed);
};

// Drives one synchronous step as four barrier-separated phases:
//
//   score      per-agent candidate values against the step-start snapshot
//   intention  per-agent future cell, keyed draws by (step, phase, agent)
//   movement   per-destination-cell conflict resolution and commit; for ACO
//              runs, global evaporation followed by mover deposits
//   reset      score buffers zeroed, futures re-anchored, step counter += 1
//
// Every write is a pure function of the snapshot, the config and the seed,
// partitioned by agent (score/intention/reset) or by cell (movement), so the
// sequential and parallel executors produce bit-identical states for any
// thread count.
class StepEngine {
  public:
    explicit StepEngine(EngineOptions opt);

    StepReport step(SimState& state);

    void score_phase(SimState& state);
    void intention_phase(SimState& state);
    StepReport movement_phase(SimState& state);
    void reset_phase(SimState& state);

    const EngineOptions& options() const { return opt_; }

  private:
    EngineOptions opt_;
    AcoHeuristic heur_;
    std::unique_ptr<ThreadPool> pool_;
    std::vector<uint32_t> winners_;  // per-cell scratch, 0 = no mover
};

// Builds the environment for (cfg, seed) and runs cfg.steps full steps with
// cfg's executor, recording the per-step crossing series and wall time.
RunReport run_scenario(const ScenarioConfig& cfg, uint64_t seed);
RunReport run_scenario(const ScenarioConfig& cfg, uint64_t seed, ExecutorKind executor,
                       int threads);

}  // namespace pedflow
