#pragma once

#include "qsf/scalar.hpp"

namespace qsf {

// Euler gamma via the Lanczos approximation (g = 7, 9 terms), reflection for
// Re z < 0.5. Exact nonpositive integers on the real axis raise
// PoleAtNonpositiveInteger. Relative accuracy ~1e-14 over the ranges the
// registry samples.
Complex gamma(Complex z);

// log Gamma on the right half-plane Re z >= 0.5 (principal value, continuous
// there). Arguments left of that raise DomainViolation; use log_gamma_signed
// or reflection at the call site instead.
Complex log_gamma(Complex z);

// log |Gamma(x)| and the sign of Gamma(x) for real non-pole x, valid
// arbitrarily deep on the negative axis. This is the workhorse for summands
// built from balanced gamma ratios whose individual factors overflow double
// range long before the ratio does.
struct SignedLogGamma {
  Real log_abs;
  int sign;  // +1 or -1
};
SignedLogGamma log_gamma_signed(Real x);

// 1/Gamma as an entire function: exactly zero at 0, -1, -2, ... and computed
// without forming Gamma itself where that would overflow.
Complex reciprocal_gamma(Complex z);

// sin(pi z) with the real part reduced mod 2 before evaluation, so the result
// keeps full relative accuracy for large |Re z| (plain sin(pi*x) loses a digit
// per decade there, which matters inside reflection formulas).
Complex sinpi(Complex z);
Real sinpi(Real x);

// log(sin(w)) computed without overflowing sinh for large |Im w|; beyond
// |Im w| = 20 the discarded exponential is below 1e-17 relative.
Complex log_sin(Complex w);

}  // namespace qsf
