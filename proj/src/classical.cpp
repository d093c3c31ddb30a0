#include "qsf/classical.hpp"

#include <cmath>

#include "qsf/errors.hpp"
#include "qsf/gamma.hpp"
#include "qsf/quadrature.hpp"

namespace qsf {

namespace {

constexpr Real kLn2 = 0.69314718055945309417232121458176568;

bool is_nonpositive_integer(Real x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace

BandLimitedTestCase sinc_profile() {
  BandLimitedTestCase c;
  c.id = "sinc";
  c.band_note = "flat band on [-pi, pi]";
  c.g = [](Real t) -> Real {
    if (t == 0.0) return 1.0;
    return std::sin(kPi * t) / (kPi * t);
  };
  return c;
}

BandLimitedTestCase cos_power_profile(Real b) {
  if (!(b > 0.0)) fail(ErrorKind::DomainViolation, "cos-power profile needs b > 0");
  BandLimitedTestCase c;
  c.id = "cosb";
  c.band_note = "cos^b band shape";
  const Real pre = log_gamma_signed(b + 1.0).log_abs - b * kLn2;
  c.g = [b, pre](Real t) -> Real {
    const Real u1 = 1.0 + 0.5 * b + t;
    const Real u2 = 1.0 + 0.5 * b - t;
    // Reciprocal gamma zeros: the profile vanishes on the far lattice.
    if (is_nonpositive_integer(u1) || is_nonpositive_integer(u2)) return 0.0;
    const SignedLogGamma g1 = log_gamma_signed(u1);
    const SignedLogGamma g2 = log_gamma_signed(u2);
    return static_cast<Real>(g1.sign * g2.sign) * std::exp(pre - g1.log_abs - g2.log_abs);
  };
  return c;
}

Complex dougall_rhs(Real a, Real b, Real c, Real d) {
  const Real s = a + b + c + d;
  return gamma(Complex(s - 3.0)) * reciprocal_gamma(Complex(a + b - 1.0)) *
         reciprocal_gamma(Complex(a + d - 1.0)) * reciprocal_gamma(Complex(c + b - 1.0)) *
         reciprocal_gamma(Complex(c + d - 1.0));
}

Complex binomial_rhs(Complex a, Real x) {
  return cpow(Complex(1.0) + std::polar(1.0, x), a);
}

Complex beta_integral_rhs(Real a, Real b) {
  return kPi * gamma(Complex(b + 1.0)) * reciprocal_gamma(Complex(0.5 * (a + b) + 1.0)) *
         reciprocal_gamma(Complex(0.5 * (b - a) + 1.0)) / std::exp((b + 1.0) * kLn2);
}

std::pair<Complex, Complex> beta_integral_check(Real a, Real b, const EvalConfig& cfg) {
  if (!(b > -0.99))
    fail(ErrorKind::DomainViolation,
         "cosine-power integral needs b > -1 for integrability at the right endpoint");
  auto f = [a, b](Real x) -> Complex {
    return Complex(std::pow(std::cos(x), b) * std::cos(a * x), 0.0);
  };
  const QuadratureResult I = tanh_sinh(f, 0.0, 0.5 * kPi, cfg);
  return {I.value, beta_integral_rhs(a, b)};
}

}  // namespace qsf
