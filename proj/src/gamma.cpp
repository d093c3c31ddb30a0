#include "qsf/gamma.hpp"

#include <array>
#include <sstream>

#include "qsf/errors.hpp"

namespace qsf {

namespace {

// Lanczos g = 7 coefficient set, the classical double-precision choice.
constexpr std::array<Real, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

constexpr Real kSqrtTwoPi = 2.50662827463100050241576528481104525;

bool is_nonpositive_integer(Complex z) {
  if (z.imag() != 0.0) return false;
  Real x = z.real();
  return x <= 0.0 && x == std::floor(x);
}

[[noreturn]] void pole_error(Complex z) {
  std::ostringstream os;
  os << "gamma pole at z = " << z;
  fail(ErrorKind::PoleAtNonpositiveInteger, os.str());
}

// Core Lanczos evaluation for Re z >= 0.5, returned in log form to delay the
// exponential until callers have combined everything they need.
Complex log_gamma_core(Complex z) {
  z -= Complex(1.0);
  Complex x(kLanczos[0]);
  for (int k = 1; k < 9; ++k) x += kLanczos[k] / (z + Complex(static_cast<Real>(k)));
  Complex t = z + Complex(7.5);
  return std::log(Complex(kSqrtTwoPi)) + (z + Complex(0.5)) * std::log(t) - t + std::log(x);
}

}  // namespace

Real sinpi(Real x) {
  Real r = std::fmod(x, 2.0);
  return std::sin(kPi * r);
}

Complex sinpi(Complex z) {
  if (z.imag() == 0.0) return Complex(sinpi(z.real()));
  Real r = std::fmod(z.real(), 2.0);
  return std::sin(Complex(kPi * r, kPi * z.imag()));
}

Complex log_gamma(Complex z) {
  if (z.real() < 0.5)
    fail(ErrorKind::DomainViolation, "log_gamma requires Re z >= 0.5");
  return log_gamma_core(z);
}

Complex gamma(Complex z) {
  if (is_nonpositive_integer(z)) pole_error(z);
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    return Complex(kPi) / (sinpi(z) * std::exp(log_gamma_core(Complex(1.0) - z)));
  }
  return std::exp(log_gamma_core(z));
}

SignedLogGamma log_gamma_signed(Real x) {
  if (x > 0.0) return {log_gamma_core(Complex(x)).real(), 1};
  if (x == std::floor(x)) pole_error(Complex(x));
  // x < 0: log |Gamma(x)| = log pi - log |sin(pi x)| - log Gamma(1 - x), and
  // the sign is carried entirely by sin(pi x) since Gamma(1 - x) > 0.
  Real s = sinpi(x);
  Real log_abs = std::log(kPi) - std::log(std::abs(s)) - log_gamma_core(Complex(1.0 - x)).real();
  return {log_abs, s > 0.0 ? 1 : -1};
}

Complex log_sin(Complex w) {
  constexpr Real kLn2 = 0.69314718055945309417232121458176568;
  const Real y = w.imag();
  if (y > 20.0) return Complex(y - kLn2, kPi / 2 - w.real());
  if (y < -20.0) return Complex(-y - kLn2, w.real() - kPi / 2);
  return std::log(std::sin(w));
}

Complex reciprocal_gamma(Complex z) {
  if (is_nonpositive_integer(z)) return Complex(0.0);
  if (z.real() < 0.5) {
    // 1/Gamma(z) = sin(pi z) Gamma(1 - z) / pi. Overflows once Re(1 - z)
    // passes ~170; summands that go deeper must work with log_gamma_signed.
    return sinpi(z) * std::exp(log_gamma_core(Complex(1.0) - z)) / Complex(kPi);
  }
  return std::exp(-log_gamma_core(z));
}

}  // namespace qsf
