#include "pedflow/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pedflow/metrics.hpp"

namespace pedflow {

const char* to_string(Model m) { return m == Model::Lem ? "lem" : "aco"; }
const char* to_string(ExecutorKind e) { return e == ExecutorKind::Sequential ? "seq" : "par"; }

namespace {

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
    throw ConfigError("malformed value for key '" + key + "': '" + value + "'");
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
    T out{};
    const char* first = value.data();
    const char* last = value.data() + value.size();
    std::from_chars_result res;
    if constexpr (std::is_floating_point_v<T>) {
        res = std::from_chars(first, last, out);
    } else {
        res = std::from_chars(first, last, out, 10);
    }
    if (res.ec != std::errc{} || res.ptr != last) bad_value(key, value);
    return out;
}

void apply(ScenarioConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "width") {
        cfg.width = parse_number<int>(key, value);
    } else if (key == "height") {
        cfg.height = parse_number<int>(key, value);
    } else if (key == "agents_per_side") {
        cfg.agents_per_side = parse_number<int>(key, value);
    } else if (key == "model") {
        if (value == "lem") {
            cfg.model = Model::Lem;
        } else if (value == "aco") {
            cfg.model = Model::Aco;
        } else {
            bad_value(key, value);
        }
        cfg.model_explicit = true;
    } else if (key == "steps") {
        cfg.steps = parse_number<int>(key, value);
    } else if (key == "seed") {
        cfg.seed = parse_number<uint64_t>(key, value);
    } else if (key == "repeats") {
        cfg.repeats = parse_number<int>(key, value);
    } else if (key == "executor") {
        if (value == "seq") {
            cfg.executor = ExecutorKind::Sequential;
        } else if (value == "par") {
            cfg.executor = ExecutorKind::Parallel;
        } else {
            bad_value(key, value);
        }
    } else if (key == "threads") {
        cfg.threads = parse_number<int>(key, value);
    } else if (key == "d0") {
        cfg.d0 = parse_number<double>(key, value);
    } else if (key == "sel_mu") {
        cfg.sel_mu = parse_number<double>(key, value);
    } else if (key == "sel_sigma") {
        cfg.sel_sigma = parse_number<double>(key, value);
    } else if (key == "alpha") {
        cfg.alpha = parse_number<double>(key, value);
    } else if (key == "beta") {
        cfg.beta = parse_number<double>(key, value);
    } else if (key == "rho") {
        cfg.rho = parse_number<double>(key, value);
    } else if (key == "tau0") {
        cfg.tau0 = parse_number<double>(key, value);
    } else if (key == "q") {
        cfg.q = parse_number<double>(key, value);
    } else if (key == "out_dir") {
        if (value.empty()) bad_value(key, value);
        cfg.out_dir = value;
    } else {
        throw ConfigError("unknown key '" + key + "'");
    }
}

}  // namespace

void validate(const ScenarioConfig& cfg) {
    auto fail = [](const std::string& msg) { throw ConfigError(msg); };
    if (cfg.width < 16 || cfg.width % 16 != 0) fail("width must be a multiple of 16 and >= 16");
    if (cfg.height < 16 || cfg.height % 16 != 0) fail("height must be a multiple of 16 and >= 16");
    if (cfg.agents_per_side < 0) fail("agents_per_side must be >= 0");
    if (cfg.steps < 0) fail("steps must be >= 0");
    if (cfg.repeats < 1) fail("repeats must be >= 1");
    if (cfg.threads < 0) fail("threads must be >= 0");
    if (!(cfg.d0 > 1.0)) fail("d0 must be > 1");
    if (!(cfg.sel_sigma >= 0.0)) fail("sel_sigma must be >= 0");
    if (!(cfg.alpha >= 0.0)) fail("alpha must be >= 0");
    if (!(cfg.beta >= 0.0)) fail("beta must be >= 0");
    if (!(cfg.rho > 0.0 && cfg.rho <= 1.0)) fail("rho must be in (0, 1]");
    if (!(cfg.tau0 > 0.0)) fail("tau0 must be > 0");
    if (!(cfg.q > 0.0)) fail("q must be > 0");
    if (cfg.out_dir.empty()) fail("out_dir must not be empty");

    const int64_t cells = int64_t(cfg.width) * cfg.height;
    if (2 * int64_t(cfg.agents_per_side) > cells)
        fail("agents_per_side exceeds grid capacity (width * height / 2)");
    const int band = band_height(cfg.agents_per_side, cfg.width);
    if (2 * band > cfg.height)
        fail("agents_per_side needs more placement rows than the grid height allows");
}

ScenarioConfig parse_config_text(const std::string& text, const KeyValues& overrides) {
    ScenarioConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + " is not 'key = value'");
        apply(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    for (const auto& [key, value] : overrides) apply(cfg, key, value);
    validate(cfg);
    return cfg;
}

ScenarioConfig parse_config(const std::string& path, const KeyValues& overrides) {
    std::string text;
    if (!path.empty()) {
        std::ifstream f(path);
        if (!f) throw ConfigError("cannot open config file '" + path + "'");
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    return parse_config_text(text, overrides);
}

namespace {

std::string fmt_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string serialize_config(const ScenarioConfig& cfg) {
    std::ostringstream out;
    out << "width = " << cfg.width << "\n";
    out << "height = " << cfg.height << "\n";
    out << "agents_per_side = " << cfg.agents_per_side << "\n";
    out << "model = " << to_string(cfg.model) << "\n";
    out << "steps = " << cfg.steps << "\n";
    out << "seed = " << cfg.seed << "\n";
    out << "repeats = " << cfg.repeats << "\n";
    out << "executor = " << to_string(cfg.executor) << "\n";
    out << "threads = " << cfg.threads << "\n";
    out << "d0 = " << fmt_full(cfg.d0) << "\n";
    out << "sel_mu = " << fmt_full(cfg.sel_mu) << "\n";
    out << "sel_sigma = " << fmt_full(cfg.sel_sigma) << "\n";
    out << "alpha = " << fmt_full(cfg.alpha) << "\n";
    out << "beta = " << fmt_full(cfg.beta) << "\n";
    out << "rho = " << fmt_full(cfg.rho) << "\n";
    out << "tau0 = " << fmt_full(cfg.tau0) << "\n";
    out << "q = " << fmt_full(cfg.q) << "\n";
    out << "out_dir = " << cfg.out_dir << "\n";
    return out.str();
}

}  // namespace pedflow
