// engine.hpp — one Otto engine configuration

#pragma once

#include <string_view>

#include "qotto/kernels.hpp"

namespace qotto {

enum class Backend { tcl2, markov };
enum class Leg { hot, cold };

Backend parse_backend(std::string_view name);  // "tcl2" | "markov"; throws std::invalid_argument
std::string_view to_string(Backend backend) noexcept;

struct EngineParams {
    double omega_h{1.0};
    double omega_c{0.18};
    double T_h{5.0};
    double T_c{1.0};
    double coupling{0.01};  // lambda, shared by both reservoirs
    double cutoff{0.4};     // Omega, shared by both reservoirs
    double t1{5.0};         // hot contact duration
    double t2{60.0};        // cold contact duration

    // Enforces omega_h > omega_c > 0, T_h > T_c > 0, coupling >= 0, cutoff > 0, t1, t2 > 0.
    void validate() const;

    ReservoirSpec reservoir(Leg leg) const {
        return {leg == Leg::hot ? T_h : T_c, coupling, cutoff};
    }
    double splitting(Leg leg) const { return leg == Leg::hot ? omega_h : omega_c; }
    double duration(Leg leg) const { return leg == Leg::hot ? t1 : t2; }

    double otto_efficiency() const { return 1.0 - omega_c / omega_h; }
    double carnot_efficiency() const { return 1.0 - T_c / T_h; }
};

}  // namespace qotto
