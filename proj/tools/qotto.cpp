// qotto — command-line driver: dynamics, sweep and oracle CSV emitters.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure
// (positivity violation or degenerate limit cycle).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qotto/config.hpp"
#include "qotto/cycle.hpp"
#include "qotto/report.hpp"
#include "qotto/stroke.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Options {
    std::string config_path;
    std::string backend;
    std::string out;
    unsigned workers{0};
    std::vector<std::string> settings;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--config", opt.config_path, "key=value configuration file");
    cmd->add_option("--backend", opt.backend, "tcl2 or markov");
    cmd->add_option("--out", opt.out, "output CSV path (default: stdout)");
    cmd->add_option("--workers", opt.workers, "worker threads for sweeps");
    cmd->add_option("--set", opt.settings, "override a configuration key (key=value)");
}

qotto::RunConfig resolve(const Options& opt) {
    qotto::RunConfig config;
    if (!opt.config_path.empty()) config = qotto::load_config(opt.config_path);
    for (const auto& s : opt.settings) qotto::apply_assignment(config, s);
    if (!opt.backend.empty()) qotto::apply_setting(config, "backend", opt.backend);
    if (!opt.out.empty()) config.out = opt.out;
    if (opt.workers > 0) config.workers = opt.workers;
    config.validate();
    return config;
}

template <class Writer>
int emit(const qotto::RunConfig& config, Writer&& write) {
    if (config.out.empty()) {
        write(config, std::cout);
        std::cout.flush();
        return 0;
    }
    std::ofstream file(config.out, std::ios::binary);
    if (!file) {
        std::fprintf(stderr, "error: config: cannot open '%s' for writing\n", config.out.c_str());
        return kExitConfig;
    }
    write(config, file);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Non-Markovian quantum Otto engine simulator"};
    app.require_subcommand(1);

    Options opt;
    auto* dynamics = app.add_subcommand("dynamics", "hot-stroke dynamics at the limit cycle");
    auto* sweep = app.add_subcommand("sweep", "work and efficiency over the (t1, t2) grid");
    auto* oracle = app.add_subcommand("oracle", "TCL2 against exact few-mode evolution");
    for (auto* cmd : {dynamics, sweep, oracle}) add_common(cmd, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        const auto config = resolve(opt);
        if (dynamics->parsed()) return emit(config, qotto::write_dynamics);
        if (sweep->parsed()) return emit(config, qotto::write_sweep);
        return emit(config, qotto::write_oracle);
    } catch (const qotto::ConfigError& e) {
        std::fprintf(stderr, "error: config: %s\n", e.what());
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: config: %s\n", e.what());
        return kExitConfig;
    } catch (const qotto::PositivityViolation& e) {
        std::fprintf(stderr, "error: positivity: %s\n", e.what());
        return kExitNumerical;
    } catch (const qotto::DegenerateCycle& e) {
        std::fprintf(stderr, "error: degenerate-cycle: %s\n", e.what());
        return kExitNumerical;
    }
}
