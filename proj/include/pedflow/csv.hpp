#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pedflow/metrics.hpp"

namespace pedflow {

// Wall-clock columns (runtime, seconds, speedup) are the one nondeterministic
// part of the outputs; zero_timings blanks them so repeated invocations are
// byte-identical.
struct CsvOptions {
    bool zero_timings = false;
};

struct BenchRow {
    uint32_t agents_total = 0;
    Model model = Model::Lem;
    ExecutorKind executor = ExecutorKind::Sequential;
    int threads = 1;
    int steps = 0;
    double seconds = 0.0;
    double speedup_vs_seq = 1.0;
};

// Shortest round-trip decimal form; deterministic for equal values.
std::string format_double(double v);

void write_steps_csv(std::ostream& out, const std::vector<RunReport>& runs);
void write_summary_csv(std::ostream& out, const std::vector<RunReport>& runs,
                       const CsvOptions& opt = {});
void write_sweep_csv(std::ostream& out, const SweepReport& rows, const CsvOptions& opt = {});
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows,
                     const CsvOptions& opt = {});

}  // namespace pedflow
