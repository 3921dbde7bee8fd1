#pragma once

#include <cstdint>
#include <vector>

#include "pedflow/config.hpp"
#include "pedflow/grid.hpp"

namespace pedflow {

// Rows a side's initial placement occupies: ceil(agents_per_side / width).
// The same band at the opposite edge is the crossing region.
int band_height(int agents_per_side, int width);

// Whether an agent stands inside the opposite side's band. Stickiness is the
// caller's business; this is the raw position predicate.
bool crossed(const AgentRecord& agent, int height, int band);

struct StepSeriesRow {
    uint32_t step = 0;
    uint32_t crossed_top = 0;     // cumulative
    uint32_t crossed_bottom = 0;  // cumulative
    uint32_t crossed_total = 0;   // cumulative
    uint32_t moved = 0;           // this step
};

// Everything one run produces.
struct RunReport {
    ScenarioConfig config;
    uint64_t seed = 0;
    Model model = Model::Lem;
    ExecutorKind executor = ExecutorKind::Sequential;
    int threads = 1;
    uint32_t agents_total = 0;
    std::vector<StepSeriesRow> series;
    uint32_t throughput = 0;  // final cumulative crossings
    double runtime_seconds = 0.0;
};

struct ProportionTest {
    double p_value = 1.0;
    bool defined = true;  // false when both runs have zero agents
};

// Two-sided two-proportion z-test on crossing fractions. Both runs must
// share agents_total; identical counts give p = 1.
ProportionTest proportion_test(const RunReport& a, const RunReport& b);

struct SweepRow {
    uint32_t agents_total = 0;
    Model model = Model::Lem;
    int repeats = 0;
    double throughput_mean = 0.0;
    double throughput_sd = 0.0;  // sample sd; 0 for a single run
    double runtime_mean_seconds = 0.0;
};

using SweepReport = std::vector<SweepRow>;

// Mean/sd of throughput and mean runtime over repeated seeds of one
// configuration. Throws on an empty list.
SweepRow aggregate(const std::vector<RunReport>& reports);

}  // namespace pedflow
