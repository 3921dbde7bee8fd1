// pedflow — bi-directional pedestrian flow on an occupancy grid.
//
// Subcommands:
//   simulate  repeated runs of one scenario; writes steps.csv + summary.csv
//   sweep     density sweep over one or both models; writes sweep.csv
//   bench     sequential vs parallel timing; writes bench.csv

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pedflow/csv.hpp"
#include "pedflow/engine.hpp"

namespace fs = std::filesystem;
using namespace pedflow;

namespace {

struct CliValues {
    std::string config_path;
    int width = 0, height = 0, agents_per_side = 0, steps = 0, repeats = 0, threads = 0;
    uint64_t seed = 0;
    std::string model, executor, out_dir;
    double d0 = 0, sel_mu = 0, sel_sigma = 0, alpha = 0, beta = 0, rho = 0, tau0 = 0, q = 0;
    std::string densities;
    bool zero_timings = false;
};

std::string fmt_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Register the shared scenario flags on a subcommand. Only flags the user
// actually passed become overrides, so file values keep their precedence.
void add_scenario_flags(CLI::App* cmd, CliValues& v) {
    cmd->add_option("--config", v.config_path, "flat key = value scenario file");
    cmd->add_option("--width", v.width, "grid width (multiple of 16)");
    cmd->add_option("--height", v.height, "grid height (multiple of 16)");
    cmd->add_option("--agents-per-side", v.agents_per_side, "agents in each group");
    cmd->add_option("--model", v.model, "movement model: lem|aco");
    cmd->add_option("--steps", v.steps, "simulation steps per run");
    cmd->add_option("--seed", v.seed, "base RNG seed; repeat i uses seed+i");
    cmd->add_option("--repeats", v.repeats, "number of seeds per configuration");
    cmd->add_option("--executor", v.executor, "seq|par");
    cmd->add_option("--threads", v.threads, "parallel executor workers (0 = hardware)");
    cmd->add_option("--d0", v.d0, "nominal forward distance of the table");
    cmd->add_option("--sel-mu", v.sel_mu, "LEM selection mean, units of C_max");
    cmd->add_option("--sel-sigma", v.sel_sigma, "LEM selection spread, units of C_max");
    cmd->add_option("--alpha", v.alpha, "pheromone weight");
    cmd->add_option("--beta", v.beta, "heuristic weight");
    cmd->add_option("--rho", v.rho, "evaporation rate in (0,1]");
    cmd->add_option("--tau0", v.tau0, "initial pheromone");
    cmd->add_option("--q", v.q, "deposit scale");
    cmd->add_option("--out", v.out_dir, "output directory for CSV artifacts");
    cmd->add_flag("--zero-timings", v.zero_timings,
                  "write 0 for wall-clock columns so outputs are byte-reproducible");
}

KeyValues collect_overrides(CLI::App* cmd, const CliValues& v) {
    KeyValues kv;
    auto passed = [cmd](const std::string& name) { return cmd->count(name) > 0; };
    if (passed("--width")) kv.emplace_back("width", std::to_string(v.width));
    if (passed("--height")) kv.emplace_back("height", std::to_string(v.height));
    if (passed("--agents-per-side"))
        kv.emplace_back("agents_per_side", std::to_string(v.agents_per_side));
    if (passed("--model")) kv.emplace_back("model", v.model);
    if (passed("--steps")) kv.emplace_back("steps", std::to_string(v.steps));
    if (passed("--seed")) kv.emplace_back("seed", std::to_string(v.seed));
    if (passed("--repeats")) kv.emplace_back("repeats", std::to_string(v.repeats));
    if (passed("--executor")) kv.emplace_back("executor", v.executor);
    if (passed("--threads")) kv.emplace_back("threads", std::to_string(v.threads));
    if (passed("--d0")) kv.emplace_back("d0", fmt_full(v.d0));
    if (passed("--sel-mu")) kv.emplace_back("sel_mu", fmt_full(v.sel_mu));
    if (passed("--sel-sigma")) kv.emplace_back("sel_sigma", fmt_full(v.sel_sigma));
    if (passed("--alpha")) kv.emplace_back("alpha", fmt_full(v.alpha));
    if (passed("--beta")) kv.emplace_back("beta", fmt_full(v.beta));
    if (passed("--rho")) kv.emplace_back("rho", fmt_full(v.rho));
    if (passed("--tau0")) kv.emplace_back("tau0", fmt_full(v.tau0));
    if (passed("--q")) kv.emplace_back("q", fmt_full(v.q));
    if (passed("--out")) kv.emplace_back("out_dir", v.out_dir);
    return kv;
}

std::vector<int> parse_densities(const std::string& text) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        try {
            size_t used = 0;
            const int value = std::stoi(item, &used);
            if (used != item.size() || value < 0) throw std::invalid_argument(item);
            out.push_back(value);
        } catch (const std::exception&) {
            throw ConfigError("malformed value for key 'densities': '" + item + "'");
        }
        pos = comma + 1;
    }
    return out;
}

std::vector<Model> models_to_run(const ScenarioConfig& cfg) {
    if (cfg.model_explicit) return {cfg.model};
    return {Model::Lem, Model::Aco};
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

fs::path prepare_out_dir(const ScenarioConfig& cfg) {
    fs::path dir(cfg.out_dir);
    fs::create_directories(dir);
    return dir;
}

int cmd_simulate(const ScenarioConfig& cfg, const CsvOptions& csv_opt) {
    std::vector<RunReport> runs;
    runs.reserve(size_t(cfg.repeats));
    for (int i = 0; i < cfg.repeats; ++i) runs.push_back(run_scenario(cfg, cfg.seed + uint64_t(i)));

    const fs::path dir = prepare_out_dir(cfg);
    std::ostringstream steps, summary;
    write_steps_csv(steps, runs);
    write_summary_csv(summary, runs, csv_opt);
    write_file(dir / "steps.csv", steps.str());
    write_file(dir / "summary.csv", summary.str());
    std::cout << "wrote " << (dir / "steps.csv").string() << " and "
              << (dir / "summary.csv").string() << "\n";
    return 0;
}

std::vector<int> default_sweep_densities(const ScenarioConfig& cfg) {
    // The reference schedule: totals from 2,560 to 102,400 in 2,560-agent
    // increments, i.e. 1,280 per side.
    if (cfg.width == 480 && cfg.height == 480) {
        std::vector<int> d;
        for (int k = 1; k <= 40; ++k) d.push_back(1280 * k);
        return d;
    }
    throw ConfigError("no default densities for this grid size; pass --densities");
}

int cmd_sweep(const ScenarioConfig& cfg, std::vector<int> densities, const CsvOptions& csv_opt) {
    if (densities.empty()) densities = default_sweep_densities(cfg);

    // Validate every density up front so a late failure cannot waste runs.
    for (int d : densities) {
        ScenarioConfig probe = cfg;
        probe.agents_per_side = d;
        validate(probe);
    }

    SweepReport rows;
    for (int d : densities) {
        for (Model model : models_to_run(cfg)) {
            ScenarioConfig run_cfg = cfg;
            run_cfg.agents_per_side = d;
            run_cfg.model = model;
            std::vector<RunReport> runs;
            runs.reserve(size_t(cfg.repeats));
            for (int i = 0; i < cfg.repeats; ++i)
                runs.push_back(run_scenario(run_cfg, cfg.seed + uint64_t(i)));
            rows.push_back(aggregate(runs));
        }
    }

    const fs::path dir = prepare_out_dir(cfg);
    std::ostringstream out;
    write_sweep_csv(out, rows, csv_opt);
    write_file(dir / "sweep.csv", out.str());
    std::cout << "wrote " << (dir / "sweep.csv").string() << "\n";
    return 0;
}

int cmd_bench(const ScenarioConfig& cfg, std::vector<int> densities, const CsvOptions& csv_opt) {
    if (densities.empty()) densities = {cfg.agents_per_side};
    for (int d : densities) {
        ScenarioConfig probe = cfg;
        probe.agents_per_side = d;
        validate(probe);
    }

    std::vector<BenchRow> rows;
    for (int d : densities) {
        for (Model model : models_to_run(cfg)) {
            ScenarioConfig run_cfg = cfg;
            run_cfg.agents_per_side = d;
            run_cfg.model = model;

            const RunReport seq = run_scenario(run_cfg, cfg.seed, ExecutorKind::Sequential, 1);
            const RunReport par =
                run_scenario(run_cfg, cfg.seed, ExecutorKind::Parallel, cfg.threads);

            const double speedup =
                par.runtime_seconds > 0.0 ? seq.runtime_seconds / par.runtime_seconds : 0.0;
            rows.push_back({seq.agents_total, model, ExecutorKind::Sequential, 1, run_cfg.steps,
                            seq.runtime_seconds, 1.0});
            rows.push_back({par.agents_total, model, ExecutorKind::Parallel, par.threads,
                            run_cfg.steps, par.runtime_seconds, speedup});
        }
    }

    const fs::path dir = prepare_out_dir(cfg);
    std::ostringstream out;
    write_bench_csv(out, rows, csv_opt);
    write_file(dir / "bench.csv", out.str());
    std::cout << "wrote " << (dir / "bench.csv").string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bi-directional pedestrian flow simulator"};
    app.require_subcommand(1);

    CliValues v;
    CLI::App* simulate = app.add_subcommand("simulate", "run one scenario over repeated seeds");
    CLI::App* sweep = app.add_subcommand("sweep", "density sweep over one or both models");
    CLI::App* bench = app.add_subcommand("bench", "time sequential vs parallel executors");
    for (CLI::App* cmd : {simulate, sweep, bench}) add_scenario_flags(cmd, v);
    sweep->add_option("--densities", v.densities, "comma-separated agents-per-side values");
    bench->add_option("--densities", v.densities, "comma-separated agents-per-side values");

    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* active = app.get_subcommands().front();
        const ScenarioConfig cfg = parse_config(v.config_path, collect_overrides(active, v));
        const CsvOptions csv_opt{v.zero_timings};
        const std::vector<int> densities =
            v.densities.empty() ? std::vector<int>{} : parse_densities(v.densities);

        if (active == simulate) return cmd_simulate(cfg, csv_opt);
        if (active == sweep) return cmd_sweep(cfg, densities, csv_opt);
        return cmd_bench(cfg, densities, csv_opt);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
