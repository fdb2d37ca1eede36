#include "qotto/engine.hpp"

#include <stdexcept>
#include <string>

namespace qotto {

Backend parse_backend(std::string_view name) {
    if (name == "tcl2") return Backend::tcl2;
    if (name == "markov") return Backend::markov;
    throw std::invalid_argument("unknown backend '" + std::string(name) + "' (expected tcl2 or markov)");
}

std::string_view to_string(Backend backend) noexcept {
    return backend == Backend::tcl2 ? "tcl2" : "markov";
}

void EngineParams::validate() const {
    if (!(omega_c > 0.0)) throw std::invalid_argument("omega_c must be positive");
    if (!(omega_h > omega_c)) throw std::invalid_argument("omega_h must exceed omega_c");
    if (!(T_c > 0.0)) throw std::invalid_argument("T_c must be positive");
    if (!(T_h > T_c)) throw std::invalid_argument("T_h must exceed T_c");
    if (!(coupling >= 0.0)) throw std::invalid_argument("lambda must be nonnegative");
    if (!(cutoff > 0.0)) throw std::invalid_argument("Omega must be positive");
    if (!(t1 > 0.0) || !(t2 > 0.0)) throw std::invalid_argument("contact durations must be positive");
}

}  // namespace qotto
