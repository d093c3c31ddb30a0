#pragma once

#include <cstdint>

#include "qsf/errors.hpp"
#include "qsf/scalar.hpp"

namespace qsf {

// Evaluation knobs shared by every series sum and quadrature in the library.
// Defaults are tuned so that a plain EvalConfig{} verifies all registered
// identities; individual registry rows override fields (notably max_terms for
// the slowly converging sampling series).
struct EvalConfig {
  Real rel_tol = 1e-11;       // target relative accuracy of a single evaluation
  long max_terms = 200000;    // bilateral budget counts both directions
  long quad_nodes = 64;       // starting node count for adaptive quadrature
  long quad_node_cap = 4096;  // refinement stops here
  Real ill_cond_guard = 1e-8; // |factor| below this in a denominator is an error

  void validate() const {
    if (!(rel_tol > 0.0) || rel_tol >= 1e-2)
      fail(ErrorKind::BadConfig, "rel_tol must lie in (0, 1e-2)");
    if (max_terms < 16) fail(ErrorKind::BadConfig, "max_terms must be at least 16");
    if (quad_nodes < 32 || (quad_nodes & (quad_nodes - 1)) != 0)
      fail(ErrorKind::BadConfig, "quad_nodes must be a power of two >= 32");
    if (quad_node_cap < quad_nodes)
      fail(ErrorKind::BadConfig, "quad_node_cap must be >= quad_nodes");
    if (!(ill_cond_guard > 0.0) || ill_cond_guard > 1e-4)
      fail(ErrorKind::BadConfig, "ill_cond_guard must lie in (0, 1e-4]");
  }

  // Inner evaluations (Pochhammer products inside a series term, integrand
  // factors) run a bit tighter than the enclosing sum so their rounding noise
  // stays below the outer stopping threshold.
  EvalConfig inner() const {
    EvalConfig c = *this;
    c.rel_tol = rel_tol * 1e-2;
    if (c.rel_tol < 1e-15) c.rel_tol = 1e-15;
    return c;
  }
};

// Outcome of any truncated evaluation: infinite products, bilateral and
// unilateral sums. err_estimate bounds the truncation error; when converged
// is true it is guaranteed <= rel_tol * (|value| + 1).
struct SeriesEvaluation {
  Complex value{};
  Real err_estimate = 0.0;
  long terms_used = 0;
  bool converged = false;
};

}  // namespace qsf
