// report.hpp — CSV emitters behind the `dynamics`, `sweep` and `oracle` subcommands
//
// Format: ',' separator, '.' decimal point, LF line endings, one header row, numbers
// printed with 12 significant digits. Output depends only on the configuration.

#pragma once

#include <ostream>
#include <string>

#include "qotto/config.hpp"

namespace qotto {

std::string format_number(double x);

// Hot stroke at the limit cycle:
//   t,rho00,rho11,T_eff,dES,dEB,EI,theta
// Throws PositivityViolation or DegenerateCycle.
void write_dynamics(const RunConfig& config, std::ostream& out);

// One row per (t1, t2), t1-major:
//   t1,t2,W_ad1,W_ad2,W_I,W_II,eta_O,eta_C,error
// With omega_pairs set, the grid is repeated per pair and omega_h,omega_c lead each row.
// Per-point failures fill `error` and leave the numeric columns empty.
void write_sweep(const RunConfig& config, std::ostream& out);

// TCL2 against the exact few-mode model on the hot stroke at the limit cycle:
//   t,dES_tcl2,dES_exact,dEB_tcl2,dEB_exact,EI_tcl2,EI_exact,truncation_warning
void write_oracle(const RunConfig& config, std::ostream& out);

}  // namespace qotto
