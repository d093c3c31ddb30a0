#include "qsf/trend.hpp"

#include <cmath>
#include <cstdio>
#include <span>
#include <vector>

#include "qsf/errors.hpp"
#include "qsf/qpoch.hpp"
#include "qsf/quadrature.hpp"
#include "qsf/series.hpp"
#include "qsf/terms.hpp"

namespace qsf {

namespace {

Real rel_gap(Complex v, Complex limit) {
  Real scale = std::max(std::abs(limit), 1e-300);
  return std::abs(v - limit) / scale;
}

// Gaps must end below the threshold and must not grow in the tail: the worst
// gap over the last half of the steps may not exceed the worst over the first
// half (with slack), unless everything already sits at the noise floor.
bool tail_controlled(const std::vector<TrendStep>& steps, Real floor_level) {
  if (steps.size() < 2) return false;
  std::size_t half = steps.size() / 2;
  Real head = 0.0, tail = 0.0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    Real g = steps[i].gap;
    if (i < half) head = std::max(head, g);
    else tail = std::max(tail, g);
  }
  return tail <= std::max(1.5 * head, floor_level);
}

// Family 1: the lattice-refined very-well-poised sum S_N along N = 1, 2, 4,
// 8, 16 against the whole-line integral it refines into. The closed product
// form anchors every step: S_N must agree with it to near engine precision.
TrendReport trend_sn_to_integral(const EvalConfig& cfg) {
  const Real a = 0.72, b = 0.3, c = 0.4, d = 0.5, e = 0.6, q = 0.5;
  TrendReport rep;
  rep.family = "sn_to_askey";
  rep.threshold = 1e-3;

  Complex cq(q);
  const Real rq = std::sqrt(q);
  const Real omega = std::log(1.0 / q);
  const Real ptol = cfg.inner().rel_tol;
  const Real guard = cfg.ill_cond_guard;
  const Complex I(0.0, 1.0);
  auto F = [=](Real v) -> Complex {
    Complex u(std::exp(v));
    LogProduct L = log_qpoch_ratio(I * b * u, I * rq * u, cq, ptol, guard);
    L += log_qpoch_ratio(I * c * u, I * cq * u, cq, ptol, guard);
    L += log_qpoch_ratio(I * d * u, -I * rq * u, cq, ptol, guard);
    L += log_qpoch_ratio(I * e * u, -I * cq * u, cq, ptol, guard);
    L += log_qpoch_ratio(-I * b / u, -I * rq / u, cq, ptol, guard);
    L += log_qpoch_ratio(-I * c / u, -I * cq / u, cq, ptol, guard);
    L += log_qpoch_ratio(-I * d / u, I * rq / u, cq, ptol, guard);
    L += log_qpoch_ratio(-I * e / u, I * cq / u, cq, ptol, guard);
    if (L.zero) return Complex(0.0);
    return std::exp(L.log);
  };
  rep.limit = real_line_trapezoid(F, cfg).value / omega;

  Real q3 = q * q * q;
  std::vector<Complex> num = {Complex(b * c / q), Complex(b * d / q), Complex(b * e / q),
                              Complex(c * d / q), Complex(c * e / q), Complex(d * e / q), cq};
  Complex closed = qpoch_multi(std::span<const Complex>(num), cq, cfg).value /
                   qpoch_infinite(Complex(b * c * d * e / q3), cq, cfg, true).value;

  Real worst_closed = 0.0;
  for (long N : {1L, 2L, 4L, 8L, 16L}) {
    SumOutcome out = sum_bilateral(
        make_sn_terms(Complex(a), Complex(b), Complex(c), Complex(d), Complex(e), q, N, cfg), cfg);
    TrendStep st;
    st.control = static_cast<Real>(N);
    st.value = out.value;
    st.gap = rel_gap(out.value, rep.limit);
    rep.steps.push_back(st);
    worst_closed = std::max(worst_closed, rel_gap(out.value, closed));
  }
  rep.final_gap = rep.steps.back().gap;
  rep.pass = rep.final_gap < rep.threshold && tail_controlled(rep.steps, 1e-5) &&
             worst_closed < 1e-9;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "worst gap to the closed product form: %.3e", worst_closed);
  rep.note = buf;
  return rep;
}

// Family 2: the normalized lattice sum at x = -1 along N = 1 .. 16 against
// the half-line integral divided by log(1/q). The sum is N-independent, so
// the steps hold flat at the limit within engine precision.
TrendReport trend_lattice_sum_to_integral(const EvalConfig& cfg) {
  const Real a = 2.2, b = 0.25, q = 0.5;
  TrendReport rep;
  rep.family = "alpha_psi_to_qbeta";
  rep.threshold = 1e-6;

  Complex cq(q);
  const Real ptol = cfg.inner().rel_tol;
  const Real guard = cfg.ill_cond_guard;
  auto G = [=](Real v) -> Complex {
    Complex t(std::exp(v));
    LogProduct L = log_qpoch_ratio(b * t, -t, cq, ptol, guard);
    L += log_qpoch_ratio(cq / (a * t), -cq / t, cq, ptol, guard);
    if (L.zero) return Complex(0.0);
    return std::exp(L.log);
  };
  rep.limit = real_line_trapezoid(G, cfg).value / std::log(1.0 / q);

  for (long N : {1L, 2L, 3L, 4L, 6L, 8L, 12L, 16L}) {
    // The factory's slot takes -x/a; here x = -1.
    SumOutcome out = sum_bilateral(
        make_second_extension_terms(Complex(a), Complex(b), Complex(1.0 / a), q, N, Complex(1.0),
                                    cfg),
        cfg);
    Complex v = out.value / static_cast<Real>(N);
    TrendStep st;
    st.control = static_cast<Real>(N);
    st.value = v;
    st.gap = rel_gap(v, rep.limit);
    rep.steps.push_back(st);
  }
  rep.final_gap = rep.steps.back().gap;
  rep.pass = rep.final_gap < rep.threshold && tail_controlled(rep.steps, 1e-8);
  return rep;
}

// Family 3: the two-base kernel with first argument aq/p as p increases
// toward q. At p = q the kernel collapses to a weighted bilateral series;
// the gap to that limit shrinks with q - p.
TrendReport trend_kernel_base_merge(const EvalConfig& cfg) {
  const Real q = 0.5;
  const Complex a(2.5), b(0.2), z(0.8);
  TrendReport rep;
  rep.family = "third_ext_p_to_q";
  rep.threshold = 0.02;

  Complex cq(q);
  SumOutcome psi = sum_bilateral(make_psi11_terms(a, b, cq, z / a, cfg), cfg);
  std::vector<Complex> pre = {b, cq / a};
  rep.limit = qpoch_multi(std::span<const Complex>(pre), cq, cfg).value * psi.value;

  for (Real p : {0.3, 0.4, 0.45, 0.49, 0.499}) {
    SumOutcome out = sum_bilateral(make_f_terms(a * q / p, b, z, p, q, cfg), cfg);
    TrendStep st;
    st.control = p;
    st.value = out.value;
    st.gap = rel_gap(out.value, rep.limit);
    rep.steps.push_back(st);
  }
  rep.final_gap = rep.steps.back().gap;
  bool shrinking = true;
  for (std::size_t i = 1; i < rep.steps.size(); ++i)
    shrinking = shrinking && rep.steps[i].gap < rep.steps[i - 1].gap;
  rep.pass = rep.final_gap < rep.threshold && shrinking;
  rep.note = "control is the second base p approaching q = 0.5 from below";
  return rep;
}

}  // namespace

const std::vector<std::string>& trend_families() {
  static const std::vector<std::string> names = {"sn_to_askey", "alpha_psi_to_qbeta",
                                                 "third_ext_p_to_q"};
  return names;
}

TrendReport run_trend(const std::string& family, const EvalConfig& cfg) {
  if (family == "sn_to_askey") return trend_sn_to_integral(cfg);
  if (family == "alpha_psi_to_qbeta") return trend_lattice_sum_to_integral(cfg);
  if (family == "third_ext_p_to_q") return trend_kernel_base_merge(cfg);
  fail(ErrorKind::UnknownIdentity, "unknown trend family '" + family + "'");
}

}  // namespace qsf
