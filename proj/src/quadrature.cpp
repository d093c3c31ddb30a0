#include "qsf/quadrature.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "qsf/errors.hpp"

namespace qsf {

namespace {

[[noreturn]] void cap_error(const char* rule, long cap, Real gap) {
  std::ostringstream os;
  os << rule << " did not settle at the node cap " << cap
     << " (successive-level disagreement " << gap << ")";
  fail(ErrorKind::NodeCapExceeded, os.str());
}

void check_finite(Complex v, const char* rule) {
  if (!is_finite(v)) {
    std::ostringstream os;
    os << rule << ": integrand evaluated to a non-finite value";
    fail(ErrorKind::IllConditionedContour, os.str());
  }
}

}  // namespace

QuadratureResult periodic_mean(const std::function<Complex(Real)>& F, const EvalConfig& cfg) {
  long M = cfg.quad_nodes;
  Complex mean(0.0);
  for (long j = 0; j < M; ++j) {
    const Real th = -kPi + 2.0 * kPi * static_cast<Real>(j) / static_cast<Real>(M);
    const Complex v = F(th);
    check_finite(v, "periodic trapezoid");
    mean += v;
  }
  mean /= static_cast<Real>(M);

  Real gap = 0.0;
  while (true) {
    // Refine by averaging with the half-shifted grid; every old node is kept.
    Complex shifted(0.0);
    for (long j = 0; j < M; ++j) {
      const Real th = -kPi + 2.0 * kPi * (static_cast<Real>(j) + 0.5) / static_cast<Real>(M);
      const Complex v = F(th);
      check_finite(v, "periodic trapezoid");
      shifted += v;
    }
    shifted /= static_cast<Real>(M);
    const Complex refined = 0.5 * (mean + shifted);
    gap = std::abs(refined - mean);
    mean = refined;
    M *= 2;
    if (gap <= cfg.rel_tol * (std::abs(mean) + 1.0))
      return {mean, gap, M, true};
    if (M * 2 > cfg.quad_node_cap) cap_error("periodic trapezoid", cfg.quad_node_cap, gap);
  }
}

QuadratureResult real_line_trapezoid(const std::function<Complex(Real)>& G,
                                     const EvalConfig& cfg) {
  // Find a window whose endpoints are negligible against the interior peak.
  Real W = 10.0;
  constexpr Real kMaxWindow = 240.0;
  Real peak = 0.0;
  while (true) {
    peak = 0.0;
    const int kScan = 48;
    for (int j = 0; j <= kScan; ++j) {
      const Real v = -W + 2.0 * W * static_cast<Real>(j) / kScan;
      const Complex g = G(v);
      check_finite(g, "real-line trapezoid");
      peak = std::max(peak, std::abs(g));
    }
    const Real edge = std::max(std::abs(G(-W)), std::abs(G(W)));
    if (edge <= 1e-3 * cfg.rel_tol * (peak + 1e-300)) break;
    W *= 1.5;
    if (W > kMaxWindow) {
      std::ostringstream os;
      os << "integrand magnitude " << edge << " at |v| = " << W / 1.5
         << " has not decayed below the window threshold; the transformed integrand "
            "does not fall off";
      fail(ErrorKind::NoDecayDetected, os.str());
    }
  }

  long M = cfg.quad_nodes;
  auto level = [&](long m) {
    const Real h = 2.0 * W / static_cast<Real>(m);
    Complex s = 0.5 * (G(-W) + G(W));
    for (long j = 1; j < m; ++j) {
      const Complex g = G(-W + h * static_cast<Real>(j));
      check_finite(g, "real-line trapezoid");
      s += g;
    }
    return h * s;
  };
  Complex I = level(M);
  while (true) {
    // Doubling the node count: the new value reuses the coarse sum through
    // the standard midpoint refinement.
    const Real h = 2.0 * W / static_cast<Real>(M);
    Complex mids(0.0);
    for (long j = 0; j < M; ++j) {
      const Complex g = G(-W + h * (static_cast<Real>(j) + 0.5));
      check_finite(g, "real-line trapezoid");
      mids += g;
    }
    const Complex refined = 0.5 * I + 0.5 * h * mids;
    const Real gap = std::abs(refined - I);
    I = refined;
    M *= 2;
    if (gap <= cfg.rel_tol * (std::abs(I) + 1.0)) return {I, gap, M, true};
    if (M * 2 > cfg.quad_node_cap) cap_error("real-line trapezoid", cfg.quad_node_cap, gap);
  }
}

QuadratureResult tanh_sinh(const std::function<Complex(Real)>& f, Real a, Real b,
                           const EvalConfig& cfg) {
  const Real half = 0.5 * (b - a);
  constexpr Real kUMax = 3.7;  // endpoint offsets bottom out near 5e-28 of the interval

  auto node = [&](Real u, Real& x, Real& w) {
    const Real s = 0.5 * kPi * std::sinh(u);
    const Real c = std::cosh(s);
    // Abscissa written as an offset from the nearer endpoint, using
    // 1 - |tanh(s)| = 2/(exp(2|s|)+1). The naive mid + half*tanh(s) rounds
    // onto the endpoint itself once u passes ~3.2, which turns an integrable
    // endpoint singularity into an infinity.
    const Real d = 2.0 * half / (std::exp(2.0 * std::abs(s)) + 1.0);
    x = u >= 0.0 ? b - d : a + d;
    w = half * 0.5 * kPi * std::cosh(u) / (c * c);
  };

  auto sum_level = [&](Real h, bool odd_only) {
    // odd_only sums just the nodes new to this level (midpoints of the
    // previous grid); the full sum is used once for the coarsest level.
    Complex s(0.0);
    const long j0 = odd_only ? 1 : 0;
    const long step = odd_only ? 2 : 1;
    for (long j = j0;; j += step) {
      const Real u = h * static_cast<Real>(j);
      if (u > kUMax) break;
      Real x, w;
      node(u, x, w);
      Complex t = f(x) * w;
      if (j != 0) {
        Real xm, wm;
        node(-u, xm, wm);
        t += f(xm) * wm;
      }
      check_finite(t, "tanh-sinh");
      s += t;
    }
    return s;
  };

  Real h = 0.5;
  Complex S = sum_level(h, false);
  Complex I = h * S;
  long nodes = static_cast<long>(2.0 * kUMax / h) + 1;
  while (true) {
    h *= 0.5;
    S += sum_level(h, true);
    const Complex refined = h * S;
    const Real gap = std::abs(refined - I);
    I = refined;
    nodes = 2 * nodes + 1;
    if (gap <= cfg.rel_tol * (std::abs(I) + 1.0)) return {I, gap, nodes, true};
    if (2 * nodes > cfg.quad_node_cap) cap_error("tanh-sinh", cfg.quad_node_cap, gap);
  }
}

void require_contour_clear(const std::function<Complex(Real)>& den, Real guard) {
  Real worst = 1e300;
  Real worst_th = 0.0;
  for (int j = 0; j < 64; ++j) {
    const Real th = -kPi + 2.0 * kPi * static_cast<Real>(j) / 64.0;
    const Real m = std::abs(den(th));
    if (m < worst) {
      worst = m;
      worst_th = th;
    }
  }
  if (worst < guard) {
    std::ostringstream os;
    os << "contour denominator modulus " << worst << " at angle " << worst_th
       << " is below the conditioning guard " << guard;
    fail(ErrorKind::IllConditionedContour, os.str());
  }
}

}  // namespace qsf
