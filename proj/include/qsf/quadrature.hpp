#pragma once

#include <functional>

#include "qsf/config.hpp"
#include "qsf/scalar.hpp"

namespace qsf {

struct QuadratureResult {
  Complex value{};
  Real err_estimate = 0.0;
  long nodes = 0;
  bool converged = false;
};

// Mean value (1/2pi) int_{-pi}^{pi} F(theta) dtheta by the periodic
// trapezoid rule, which is spectrally accurate for integrands analytic in a
// strip. Starts at cfg.quad_nodes equispaced nodes and doubles (reusing all
// previous evaluations) until two successive levels agree to rel_tol, up to
// cfg.quad_node_cap; failing that raises NodeCapExceeded.
QuadratureResult periodic_mean(const std::function<Complex(Real)>& F, const EvalConfig& cfg);

// int_{-inf}^{inf} G(v) dv for integrands that decay at both ends (callers
// integrating over (0,inf) against dt/t substitute t = e^v first). The window
// [-W, W] grows until both endpoint magnitudes drop below 1e-3 * rel_tol of
// the interior peak (NoDecayDetected if that never happens), then the
// trapezoid rule refines by doubling under the same node cap as above.
QuadratureResult real_line_trapezoid(const std::function<Complex(Real)>& G,
                                     const EvalConfig& cfg);

// Finite-interval tanh-sinh rule on [a, b]; handles integrable endpoint
// singularities such as fractional powers. Level spacing halves until two
// levels agree to rel_tol or the node cap is hit.
QuadratureResult tanh_sinh(const std::function<Complex(Real)>& f, Real a, Real b,
                           const EvalConfig& cfg);

// Evaluates den at 64 equispaced contour angles and raises
// IllConditionedContour if any modulus falls below guard: a denominator pole
// this close to the path would poison the spectral convergence the periodic
// rule relies on.
void require_contour_clear(const std::function<Complex(Real)>& den, Real guard);

}  // namespace qsf
