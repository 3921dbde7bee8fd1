#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pedflow/errors.hpp"

namespace pedflow {

enum class Model { Lem, Aco };
enum class ExecutorKind { Sequential, Parallel };

const char* to_string(Model m);
const char* to_string(ExecutorKind e);

// Every tunable of a run. Defaults reproduce the reference scenario: a
// 480x480 arena, 25,000 steps, 10 repeated seeds.
struct ScenarioConfig {
    int width = 480;
    int height = 480;
    int agents_per_side = 1280;
    Model model = Model::Aco;
    int steps = 25000;
    uint64_t seed = 42;
    int repeats = 10;
    ExecutorKind executor = ExecutorKind::Sequential;
    int threads = 0;  // parallel executor worker count; 0 = hardware default

    // least-effort selection
    double d0 = 2.0;
    double sel_mu = 1.0;
    double sel_sigma = 0.5;

    // ant-system parameters
    double alpha = 1.0;
    double beta = 2.0;
    double rho = 0.05;
    double tau0 = 0.1;
    double q = 1.0;

    std::string out_dir = ".";

    // True when the model came from the file or a flag rather than the
    // default; sweep runs both models unless the user picked one. Not part
    // of config equality.
    bool model_explicit = false;

    bool operator==(const ScenarioConfig& o) const {
        return width == o.width && height == o.height && agents_per_side == o.agents_per_side &&
               model == o.model && steps == o.steps && seed == o.seed && repeats == o.repeats &&
               executor == o.executor && threads == o.threads && d0 == o.d0 &&
               sel_mu == o.sel_mu && sel_sigma == o.sel_sigma && alpha == o.alpha &&
               beta == o.beta && rho == o.rho && tau0 == o.tau0 && q == o.q &&
               out_dir == o.out_dir;
    }
};

// Throws ConfigError naming the offending key.
void validate(const ScenarioConfig& cfg);

using KeyValues = std::vector<std::pair<std::string, std::string>>;

// Flat `key = value` text; '#' starts a comment. Unknown keys are rejected.
// Overrides are applied after the file and win.
ScenarioConfig parse_config_text(const std::string& text, const KeyValues& overrides = {});

// Same, reading the file at `path`; an empty path means defaults + overrides.
ScenarioConfig parse_config(const std::string& path, const KeyValues& overrides = {});

// Round-trippable `key = value` form of a config.
std::string serialize_config(const ScenarioConfig& cfg);

}  // namespace pedflow
