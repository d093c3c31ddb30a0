#include "qsf/theta.hpp"

#include <cmath>
#include <sstream>

#include "qsf/errors.hpp"
#include "qsf/gamma.hpp"

namespace qsf {

namespace {

Complex log_cos(Complex w) { return log_sin(w + Complex(kPi / 2, 0.0)); }

}  // namespace

Complex theta(int j, Complex z, Real nome, const EvalConfig& cfg) {
  if (j < 1 || j > 4) fail(ErrorKind::BadConfig, "theta index must be 1, 2, 3 or 4");
  if (!(nome > 0.0 && nome < 1.0))
    fail(ErrorKind::DomainViolation, "theta nome must lie in (0,1)");
  const Real om = std::log(1.0 / nome);
  const Real y = std::abs(z.imag());
  if (y * y / om > 600.0) {
    std::ostringstream os;
    os << "theta" << j << " at Im z = " << z.imag() << ", nome " << nome
       << ": peak term magnitude exp(" << y * y / om << ") leaves double range";
    fail(ErrorKind::IllConditioned, os.str());
  }

  const Real lnq = -om;
  const long n_peak = static_cast<long>(y / om) + 1;
  const bool half_index = (j == 1 || j == 2);  // exponents (n+1/2)^2 vs n^2
  const bool alternating = (j == 1 || j == 4);

  Complex S = half_index ? Complex(0.0) : Complex(1.0);
  int quiet = 0;
  for (long n = half_index ? 0 : 1;; ++n) {
    if (n > cfg.max_terms) {
      std::ostringstream os;
      os << "theta" << j << " series did not settle within " << cfg.max_terms << " terms";
      fail(ErrorKind::BudgetExceeded, os.str());
    }
    Real e;
    Complex trig;
    if (half_index) {
      const Real h = static_cast<Real>(n) + 0.5;
      e = lnq * h * h;
      const Complex w = static_cast<Real>(2 * n + 1) * z;
      trig = (j == 1) ? log_sin(w) : log_cos(w);
    } else {
      e = lnq * static_cast<Real>(n) * static_cast<Real>(n);
      trig = log_cos(static_cast<Real>(2 * n) * z);
    }
    const Real sgn = (alternating && (n & 1)) ? -1.0 : 1.0;
    const Complex t = 2.0 * sgn * std::exp(Complex(e, 0.0) + trig);
    S += t;
    if (n >= n_peak && std::abs(t) <= 0.25 * cfg.rel_tol * (std::abs(S) + 1.0)) {
      if (++quiet >= 2) break;
    } else {
      quiet = 0;
    }
  }
  return S;
}

Real theta1_prime_zero(Real nome, const EvalConfig& cfg) {
  if (!(nome > 0.0 && nome < 1.0))
    fail(ErrorKind::DomainViolation, "theta nome must lie in (0,1)");
  const Real lnq = std::log(nome);
  Real S = 0.0;
  int quiet = 0;
  for (long n = 0;; ++n) {
    if (n > cfg.max_terms)
      fail(ErrorKind::BudgetExceeded, "theta1' series did not settle within the term budget");
    const Real h = static_cast<Real>(n) + 0.5;
    const Real t = (n & 1 ? -1.0 : 1.0) * static_cast<Real>(2 * n + 1) * std::exp(lnq * h * h);
    S += t;
    if (std::abs(t) <= 0.25 * cfg.rel_tol * (std::abs(S) + 1.0)) {
      if (++quiet >= 2) break;
    } else {
      quiet = 0;
    }
  }
  return 2.0 * S;
}

}  // namespace qsf
