#pragma once

// Limit-trend drivers: each family evaluates a parameterized quantity along a
// sequence of control values approaching a limit that is computed by an
// independent route, and reports the gap at every step. The families double
// as convergence diagnostics for the refinement parameters of the lattice
// sums and the two-base kernel.

#include <string>
#include <vector>

#include "qsf/config.hpp"
#include "qsf/scalar.hpp"

namespace qsf {

struct TrendStep {
  Real control = 0.0;   // refinement level N or base p, family dependent
  Complex value;        // the quantity at this control value
  Real gap = 0.0;       // relative distance to the independently computed limit
};

struct TrendReport {
  std::string family;
  Complex limit;
  std::vector<TrendStep> steps;
  Real final_gap = 0.0;
  Real threshold = 0.0;  // the final step must land below this
  bool pass = false;
  std::string note;
};

// Names accepted by run_trend.
const std::vector<std::string>& trend_families();

TrendReport run_trend(const std::string& family, const EvalConfig& cfg);

}  // namespace qsf
