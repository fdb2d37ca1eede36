// config.hpp — flat key=value run configuration
//
// One `key = value` per line; blank lines and lines starting with '#' are ignored.
// Recognised keys:
//   omega_h omega_c T_h T_c lambda Omega t1 t2      engine parameters
//   backend (tcl2|markov)  step (0 = default)       dynamics
//   t1_min t1_max t1_count t2_min t2_max t2_count   sweep grid
//   omega_pairs = wh:wc, wh:wc, ...                 optional (omega_h, omega_c) list
//   oracle_modes oracle_fock_cutoff oracle_omega_max oracle_samples
//   out workers

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qotto/engine.hpp"
#include "qotto/sweep.hpp"

namespace qotto {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    EngineParams engine;
    Backend backend{Backend::tcl2};
    double step{0.0};
    Axis t1_axis{1.0, 60.0, 60};
    Axis t2_axis{1.0, 60.0, 60};
    std::vector<std::pair<double, double>> omega_pairs;
    int oracle_modes{4};
    int oracle_fock_cutoff{4};
    double oracle_omega_max{2.0};
    std::size_t oracle_samples{21};
    std::string out;  // empty: stdout
    unsigned workers{1};

    // Throws ConfigError on any violated invariant.
    void validate() const;
};

// Throws ConfigError for unknown keys or malformed values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);
// "key=value"
void apply_assignment(RunConfig& config, std::string_view assignment);

RunConfig parse_config(std::string_view text, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

// Canonical text form; parse_config(serialize_config(c)) reproduces c exactly.
std::string serialize_config(const RunConfig& config);

}  // namespace qotto
