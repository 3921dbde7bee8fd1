#include "pedflow/csv.hpp"

#include <cstdio>
#include <ostream>

namespace pedflow {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void write_steps_csv(std::ostream& out, const std::vector<RunReport>& runs) {
    out << "run_id,seed,model,executor,step,crossed_top,crossed_bottom,crossed_total,moved\n";
    for (size_t i = 0; i < runs.size(); ++i) {
        const RunReport& r = runs[i];
        for (const StepSeriesRow& row : r.series) {
            out << i << ',' << r.seed << ',' << to_string(r.model) << ','
                << to_string(r.executor) << ',' << row.step << ',' << row.crossed_top << ','
                << row.crossed_bottom << ',' << row.crossed_total << ',' << row.moved << '\n';
        }
    }
}

void write_summary_csv(std::ostream& out, const std::vector<RunReport>& runs,
                       const CsvOptions& opt) {
    out << "run_id,seed,model,executor,agents_total,steps,throughput,runtime_seconds\n";
    for (size_t i = 0; i < runs.size(); ++i) {
        const RunReport& r = runs[i];
        const double rt = opt.zero_timings ? 0.0 : r.runtime_seconds;
        out << i << ',' << r.seed << ',' << to_string(r.model) << ',' << to_string(r.executor)
            << ',' << r.agents_total << ',' << r.config.steps << ',' << r.throughput << ','
            << format_double(rt) << '\n';
    }
    if (runs.size() > 1) {
        const SweepRow agg = aggregate(runs);
        const double rt = opt.zero_timings ? 0.0 : agg.runtime_mean_seconds;
        out << "mean," << runs.front().seed << ',' << to_string(runs.front().model) << ','
            << to_string(runs.front().executor) << ',' << agg.agents_total << ','
            << runs.front().config.steps << ',' << format_double(agg.throughput_mean) << ','
            << format_double(rt) << '\n';
    }
}

void write_sweep_csv(std::ostream& out, const SweepReport& rows, const CsvOptions& opt) {
    out << "agents_total,model,repeats,throughput_mean,throughput_sd,runtime_mean_seconds\n";
    for (const SweepRow& r : rows) {
        const double rt = opt.zero_timings ? 0.0 : r.runtime_mean_seconds;
        out << r.agents_total << ',' << to_string(r.model) << ',' << r.repeats << ','
            << format_double(r.throughput_mean) << ',' << format_double(r.throughput_sd) << ','
            << format_double(rt) << '\n';
    }
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows,
                     const CsvOptions& opt) {
    out << "agents_total,model,executor,threads,steps,seconds,speedup_vs_seq\n";
    for (const BenchRow& r : rows) {
        const double sec = opt.zero_timings ? 0.0 : r.seconds;
        const double spd = opt.zero_timings ? 0.0 : r.speedup_vs_seq;
        out << r.agents_total << ',' << to_string(r.model) << ',' << to_string(r.executor) << ','
            << r.threads << ',' << r.steps << ',' << format_double(sec) << ','
            << format_double(spd) << '\n';
    }
}

}  // namespace pedflow
