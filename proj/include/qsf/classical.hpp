#pragma once

#include <functional>
#include <string>
#include <utility>

#include "qsf/config.hpp"
#include "qsf/scalar.hpp"

namespace qsf {

// A band-limited function g (the Fourier transform of something supported on
// [-pi, pi]) for driving the sampling-theorem sum. Instances come from the
// two registered profiles below.
struct BandLimitedTestCase {
  std::string id;
  std::function<Real(Real)> g;
  std::string band_note;
};

// g(y) = sin(pi y)/(pi y); band profile is the indicator of [-pi, pi].
BandLimitedTestCase sinc_profile();

// g_b(y) = Gamma(b+1) 2^{-b} / [Gamma(1+b/2+y) Gamma(1+b/2-y)], the transform
// of the cos^b band shape; decays like |y|^{-b-1}.
BandLimitedTestCase cos_power_profile(Real b);

// Closed forms of the classical identities.

// Gamma(a+b+c+d-3) / [Gamma(a+b-1) Gamma(a+d-1) Gamma(c+b-1) Gamma(c+d-1)].
Complex dougall_rhs(Real a, Real b, Real c, Real d);

// (1 + e^{ix})^a with the principal power, x in (-pi, pi).
Complex binomial_rhs(Complex a, Real x);

// pi Gamma(b+1) / [2^{b+1} Gamma((a+b)/2+1) Gamma((b-a)/2+1)].
Complex beta_integral_rhs(Real a, Real b);

// Integral side int_0^{pi/2} cos^b(x) cos(a x) dx by finite-interval
// quadrature, paired with the closed form; the caller compares. Requires
// b > -1 for integrability at the right endpoint.
std::pair<Complex, Complex> beta_integral_check(Real a, Real b, const EvalConfig& cfg);

}  // namespace qsf
