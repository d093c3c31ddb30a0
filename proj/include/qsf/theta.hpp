#pragma once

#include "qsf/config.hpp"
#include "qsf/scalar.hpp"

namespace qsf {

// Jacobi theta functions in the nome convention, nome real in (0,1):
//   theta1(z) = 2 sum_{n>=0} (-1)^n nome^{(n+1/2)^2} sin((2n+1) z)
//   theta2(z) = 2 sum_{n>=0}        nome^{(n+1/2)^2} cos((2n+1) z)
//   theta3(z) = 1 + 2 sum_{n>=1}        nome^{n^2} cos(2 n z)
//   theta4(z) = 1 + 2 sum_{n>=1} (-1)^n nome^{n^2} cos(2 n z)
// Complex z is supported; the terms peak near n = |Im z| / ln(1/nome) before
// the quadratic exponent takes over, and each term is assembled in log space
// so that peak never overflows intermediate factors. Evaluations whose peak
// magnitude would leave double range raise IllConditioned; exhausting the
// term budget raises BudgetExceeded.
Complex theta(int j, Complex z, Real nome, const EvalConfig& cfg);

// theta1'(0) = 2 sum_{n>=0} (-1)^n (2n+1) nome^{(n+1/2)^2}.
Real theta1_prime_zero(Real nome, const EvalConfig& cfg);

}  // namespace qsf
