#include "pedflow/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace pedflow {

int band_height(int agents_per_side, int width) {
    if (width <= 0) throw ConfigError("width must be > 0");
    return int((int64_t(agents_per_side) + width - 1) / width);
}

bool crossed(const AgentRecord& agent, int height, int band) {
    if (agent.group == CellState::Top) return agent.row >= height - band;
    return agent.row <= band - 1;
}

ProportionTest proportion_test(const RunReport& a, const RunReport& b) {
    if (a.agents_total != b.agents_total)
        throw std::invalid_argument("proportion_test: runs must share agents_total");
    if (a.agents_total == 0) return {1.0, false};
    if (a.throughput == b.throughput) return {1.0, true};

    const double n = double(a.agents_total);
    const double p1 = double(a.throughput) / n;
    const double p2 = double(b.throughput) / n;
    const double pooled = (double(a.throughput) + double(b.throughput)) / (2.0 * n);
    const double se = std::sqrt(pooled * (1.0 - pooled) * (2.0 / n));
    if (se == 0.0) return {1.0, true};  // unreachable for unequal counts, but safe
    const double z = (p1 - p2) / se;
    return {std::erfc(std::fabs(z) / std::sqrt(2.0)), true};
}

SweepRow aggregate(const std::vector<RunReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("aggregate: empty report list");
    SweepRow row;
    row.agents_total = reports.front().agents_total;
    row.model = reports.front().model;
    row.repeats = int(reports.size());

    double sum_thr = 0.0, sum_rt = 0.0;
    for (const RunReport& r : reports) {
        sum_thr += double(r.throughput);
        sum_rt += r.runtime_seconds;
    }
    const double n = double(reports.size());
    row.throughput_mean = sum_thr / n;
    row.runtime_mean_seconds = sum_rt / n;

    if (reports.size() > 1) {
        double ss = 0.0;
        for (const RunReport& r : reports) {
            const double d = double(r.throughput) - row.throughput_mean;
            ss += d * d;
        }
        row.throughput_sd = std::sqrt(ss / (n - 1.0));
    }
    return row;
}

}  // namespace pedflow
