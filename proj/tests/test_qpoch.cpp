#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qsf/config.hpp"
#include "qsf/errors.hpp"
#include "qsf/qpoch.hpp"
#include "qsf/rng.hpp"

using namespace qsf;

namespace {

Real rel(Complex a, Complex b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace

// Reference values computed with an independent 40-digit implementation and
// truncated to double precision.
TEST_CASE("infinite product matches external references") {
  EvalConfig cfg;
  cfg.rel_tol = 1e-14;  // the default stops near 1e-12; pin tighter for frozen values
  CHECK(rel(qpoch_infinite(Complex(0.1), Complex(0.1), cfg).value,
            Complex(0.890010099998999)) < 1e-13);
  CHECK(rel(qpoch_infinite(Complex(0.5), Complex(0.5), cfg).value,
            Complex(0.288788095086602421)) < 1e-13);
  CHECK(rel(qpoch_infinite(Complex(-0.3, 0.2), Complex(0.6), cfg).value,
            Complex(1.8540930496877451, -0.834003790995907262)) < 1e-13);
  // Vanishing argument: empty product.
  CHECK(qpoch_infinite(Complex(0.0), Complex(0.5), cfg).value == Complex(1.0));
}

TEST_CASE("finite symbol handles positive, zero and negative index") {
  CHECK(rel(qpoch_finite(Complex(0.5), Complex(0.5), 3), Complex(0.328125)) < 1e-15);
  CHECK(qpoch_finite(Complex(0.7), Complex(0.3), 0) == Complex(1.0));
  // (a;q)_{-1} = 1 / (1 - a/q)
  CHECK(rel(qpoch_finite(Complex(0.25), Complex(0.5), -1), Complex(2.0)) < 1e-15);
  // negative-index inversion against the defining product
  Complex a(0.4, 0.3), q(0.55);
  Complex direct(1.0);
  for (int k = 1; k <= 4; ++k) direct /= (1.0 - a * std::pow(q, Complex(-k)));
  CHECK(rel(qpoch_finite(a, q, -4), direct) < 1e-14);
}

TEST_CASE("infinite product splits as finite symbol times shifted tail") {
  EvalConfig cfg;
  cfg.rel_tol = 1e-14;
  Rng rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    Complex a = rng.ring_point(0.1, 2.5, 0.05);
    Complex q(rng.uniform(0.1, 0.8));
    long n = rng.uniform_int(1, 17);
    Complex whole = qpoch_infinite(a, q, cfg).value;
    Complex head = qpoch_finite(a, q, n);
    Complex tail = qpoch_infinite(a * std::pow(q, Complex(static_cast<Real>(n))), q, cfg).value;
    INFO("a=", a, " q=", q, " n=", n);
    CHECK(rel(whole, head * tail) < 1e-12);
  }
}

TEST_CASE("log-space product agrees with the direct evaluation") {
  EvalConfig cfg;
  cfg.rel_tol = 1e-14;
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Complex c = rng.ring_point(0.05, 3.0, 0.05);
    Complex q(rng.uniform(0.15, 0.75));
    LogProduct L = log_qpoch(c, q, 1e-13);
    REQUIRE(!L.zero);
    CHECK(rel(std::exp(L.log), qpoch_infinite(c, q, cfg).value) < 1e-12);
  }
}

TEST_CASE("log-space ratio matches quotient of products") {
  EvalConfig cfg;
  cfg.rel_tol = 1e-14;
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Complex cn = rng.ring_point(0.05, 2.0, 0.05);
    Complex cd = rng.ring_point(0.05, 2.0, 0.05);
    Complex q(rng.uniform(0.2, 0.7));
    LogProduct L = log_qpoch_ratio(cn, cd, q, 1e-13, 1e-8);
    REQUIRE(!L.zero);
    Complex direct =
        qpoch_infinite(cn, q, cfg).value / qpoch_infinite(cd, q, cfg).value;
    CHECK(rel(std::exp(L.log), direct) < 1e-12);
  }
}

TEST_CASE("denominator with a vanishing factor is rejected") {
  EvalConfig cfg;
  // (2; 0.5)_inf has the factor (1 - 2 * 0.5) = 0.
  try {
    qpoch_infinite(Complex(2.0), Complex(0.5), cfg, true);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByVanishingFactor);
    CHECK(std::string(e.what()).find("vanishing") != std::string::npos);
  }
  // Numerator side of the same value is fine: the product is exactly zero.
  CHECK(qpoch_infinite(Complex(2.0), Complex(0.5), cfg).value == Complex(0.0));
}

TEST_CASE("error estimate bounds the distance to a tighter evaluation") {
  EvalConfig loose;
  loose.rel_tol = 1e-8;
  EvalConfig tight;
  tight.rel_tol = 1e-14;
  Rng rng(99);
  int ok = 0, total = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Complex a = rng.ring_point(0.05, 2.8, 0.05);
    Complex q(rng.uniform(0.1, 0.85));
    SeriesEvaluation v = qpoch_infinite(a, q, loose);
    SeriesEvaluation ref = qpoch_infinite(a, q, tight);
    REQUIRE(v.converged);
    ++total;
    if (std::abs(v.value - ref.value) <= v.err_estimate + 1e-15 * std::abs(ref.value)) ++ok;
  }
  CHECK(ok == total);
}
