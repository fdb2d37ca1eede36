#include "qotto/config.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qotto {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(std::string_view key, std::string_view value) {
    const std::string text(trim(value));
    char* end = nullptr;
    errno = 0;
    const double x = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE) {
        throw ConfigError("invalid number for '" + std::string(key) + "': '" + text + "'");
    }
    return x;
}

unsigned long long to_count(std::string_view key, std::string_view value) {
    value = trim(value);
    unsigned long long x = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), x);
    if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ConfigError("invalid count for '" + std::string(key) + "': '" + std::string(value) + "'");
    }
    return x;
}

std::vector<std::pair<double, double>> to_pairs(std::string_view value) {
    std::vector<std::pair<double, double>> pairs;
    value = trim(value);
    while (!value.empty()) {
        const auto comma = value.find(',');
        const auto item = trim(value.substr(0, comma));
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw ConfigError("omega_pairs entries must look like omega_h:omega_c");
        }
        pairs.emplace_back(to_double("omega_pairs", item.substr(0, colon)),
                           to_double("omega_pairs", item.substr(colon + 1)));
        if (comma == std::string_view::npos) break;
        value = trim(value.substr(comma + 1));
    }
    return pairs;
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

void RunConfig::validate() const {
    try {
        engine.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (!(step >= 0.0)) throw ConfigError("step must be nonnegative");
    for (const Axis* a : {&t1_axis, &t2_axis}) {
        if (a->count < 1) throw ConfigError("sweep counts must be at least 1");
        if (!(a->min > 0.0) || !(a->max >= a->min)) throw ConfigError("sweep ranges must be positive and ordered");
    }
    for (const auto& [wh, wc] : omega_pairs) {
        if (!(wc > 0.0) || !(wh > wc)) throw ConfigError("omega_pairs need omega_h > omega_c > 0");
    }
    if (oracle_modes < 1 || oracle_fock_cutoff < 1) throw ConfigError("oracle sizes must be at least 1");
    if (!(oracle_omega_max > 0.0)) throw ConfigError("oracle_omega_max must be positive");
    if (oracle_samples < 2) throw ConfigError("oracle_samples must be at least 2");
    if (workers < 1) throw ConfigError("workers must be at least 1");
}

void apply_setting(RunConfig& c, std::string_view key_in, std::string_view value) {
    const auto key = trim(key_in);
    value = trim(value);
    auto& e = c.engine;
    if (key == "omega_h") e.omega_h = to_double(key, value);
    else if (key == "omega_c") e.omega_c = to_double(key, value);
    else if (key == "T_h") e.T_h = to_double(key, value);
    else if (key == "T_c") e.T_c = to_double(key, value);
    else if (key == "lambda") e.coupling = to_double(key, value);
    else if (key == "Omega") e.cutoff = to_double(key, value);
    else if (key == "t1") e.t1 = to_double(key, value);
    else if (key == "t2") e.t2 = to_double(key, value);
    else if (key == "backend") {
        try {
            c.backend = parse_backend(value);
        } catch (const std::invalid_argument& err) {
            throw ConfigError(err.what());
        }
    }
    else if (key == "step") c.step = to_double(key, value);
    else if (key == "t1_min") c.t1_axis.min = to_double(key, value);
    else if (key == "t1_max") c.t1_axis.max = to_double(key, value);
    else if (key == "t1_count") c.t1_axis.count = to_count(key, value);
    else if (key == "t2_min") c.t2_axis.min = to_double(key, value);
    else if (key == "t2_max") c.t2_axis.max = to_double(key, value);
    else if (key == "t2_count") c.t2_axis.count = to_count(key, value);
    else if (key == "omega_pairs") c.omega_pairs = to_pairs(value);
    else if (key == "oracle_modes") c.oracle_modes = static_cast<int>(to_count(key, value));
    else if (key == "oracle_fock_cutoff") c.oracle_fock_cutoff = static_cast<int>(to_count(key, value));
    else if (key == "oracle_omega_max") c.oracle_omega_max = to_double(key, value);
    else if (key == "oracle_samples") c.oracle_samples = to_count(key, value);
    else if (key == "out") c.out = std::string(value);
    else if (key == "workers") c.workers = static_cast<unsigned>(to_count(key, value));
    else throw ConfigError("unknown configuration key '" + std::string(key) + "'");
}

void apply_assignment(RunConfig& config, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos) {
        throw ConfigError("expected key=value, got '" + std::string(assignment) + "'");
    }
    apply_setting(config, assignment.substr(0, eq), assignment.substr(eq + 1));
}

RunConfig parse_config(std::string_view text, RunConfig base) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const auto line = trim(text.substr(0, nl));
        ++line_no;
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty() || line.front() == '#') continue;
        try {
            apply_assignment(base, line);
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), std::move(base));
}

std::string serialize_config(const RunConfig& c) {
    std::ostringstream out;
    const auto& e = c.engine;
    out << "omega_h = " << num(e.omega_h) << '\n'
        << "omega_c = " << num(e.omega_c) << '\n'
        << "T_h = " << num(e.T_h) << '\n'
        << "T_c = " << num(e.T_c) << '\n'
        << "lambda = " << num(e.coupling) << '\n'
        << "Omega = " << num(e.cutoff) << '\n'
        << "t1 = " << num(e.t1) << '\n'
        << "t2 = " << num(e.t2) << '\n'
        << "backend = " << to_string(c.backend) << '\n'
        << "step = " << num(c.step) << '\n'
        << "t1_min = " << num(c.t1_axis.min) << '\n'
        << "t1_max = " << num(c.t1_axis.max) << '\n'
        << "t1_count = " << c.t1_axis.count << '\n'
        << "t2_min = " << num(c.t2_axis.min) << '\n'
        << "t2_max = " << num(c.t2_axis.max) << '\n'
        << "t2_count = " << c.t2_axis.count << '\n';
    out << "omega_pairs =";
    for (std::size_t i = 0; i < c.omega_pairs.size(); ++i) {
        out << (i ? ", " : " ") << num(c.omega_pairs[i].first) << ':' << num(c.omega_pairs[i].second);
    }
    out << '\n'
        << "oracle_modes = " << c.oracle_modes << '\n'
        << "oracle_fock_cutoff = " << c.oracle_fock_cutoff << '\n'
        << "oracle_omega_max = " << num(c.oracle_omega_max) << '\n'
        << "oracle_samples = " << c.oracle_samples << '\n'
        << "out = " << c.out << '\n'
        << "workers = " << c.workers << '\n';
    return out.str();
}

}  // namespace qotto
