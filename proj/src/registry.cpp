#include <algorithm>
#include <cstdio>
#include <cmath>
#include <initializer_list>
#include <span>
#include <vector>

#include "qsf/classical.hpp"
#include "qsf/errors.hpp"
#include "qsf/gamma.hpp"
#include "qsf/identities.hpp"
#include "qsf/qpoch.hpp"
#include "qsf/quadrature.hpp"
#include "qsf/series.hpp"
#include "qsf/terms.hpp"
#include "qsf/theta.hpp"

namespace qsf {

namespace {

// ---- point access -----------------------------------------------------------

Complex want(const Point& pt, const char* k) {
  auto it = pt.find(k);
  if (it == pt.end()) fail(ErrorKind::ConstraintViolation, std::string("missing parameter '") + k + "'");
  return it->second;
}

Real want_real(const Point& pt, const char* k) {
  Complex v = want(pt, k);
  if (v.imag() != 0.0)
    fail(ErrorKind::ConstraintViolation, std::string("parameter '") + k + "' must be real");
  return v.real();
}

long want_int(const Point& pt, const char* k, long lo, long hi) {
  Real x = want_real(pt, k);
  long n = std::lround(x);
  if (std::abs(x - static_cast<Real>(n)) > 1e-9 || n < lo || n > hi)
    fail(ErrorKind::ConstraintViolation, std::string("parameter '") + k + "' must be an integer in [" +
                                             std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return n;
}

void need(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::ConstraintViolation, what);
}

// A base in (0,1), kept away from both ends where every product degenerates.
Real base_real(const Point& pt, const char* k) {
  Real q = want_real(pt, k);
  need(q > 0.02 && q < 0.97, std::string("parameter '") + k + "' must lie well inside (0,1)");
  return q;
}

// ---- lattice proximity ------------------------------------------------------

// True when w sits within multiplicative distance `margin` of a point of the
// positive-real power lattice {base^e}. With all_integers = false only the
// nonpositive exponents count: those are where (w; base)_inf vanishes. With
// all_integers = true every integer exponent counts, which is the right
// screen for finite products (x; base)_n of either sign of n and for bases
// that may fall under or over 1.
bool near_power_lattice(Complex w, Real base, Real margin, bool all_integers) {
  Real r = std::abs(w);
  if (!(r > 0.0)) return false;
  Real L = std::log(1.0 / base);  // positive for base in (0,1)
  Real e = -std::log(r) / L;      // w ~ base^e in modulus
  Real k = std::round(e);
  if (!all_integers && k > 0.5) return false;
  Real ang = std::arg(w);
  return std::hypot((e - k) * L, ang) < margin;
}

void need_off_vanishing(Complex w, Real base, const char* what) {
  need(!near_power_lattice(w, base, 0.04, false),
       std::string(what) + " lies too close to the power lattice of the base (a product side would vanish)");
}

void need_off_lattice(Real x, Real base, Real margin, const char* what) {
  need(x > 0.0 && !near_power_lattice(Complex(x), base, margin, true),
       std::string(what) + " lies too close to a power of the base");
}

// ---- evaluation helpers -----------------------------------------------------

Complex prod_over(const std::vector<Complex>& num, const std::vector<Complex>& den, Complex q,
                  const EvalConfig& cfg, Sides& s) {
  Complex v(1.0);
  if (!num.empty()) {
    SeriesEvaluation e = qpoch_multi(std::span<const Complex>(num), q, cfg);
    v *= e.value;
    s.terms += e.terms_used;
  }
  if (!den.empty()) {
    SeriesEvaluation e = qpoch_multi(std::span<const Complex>(den), q, cfg, true);
    v /= e.value;
    s.terms += e.terms_used;
  }
  return v;
}

Complex run_sum(const TermGenerator& g, const EvalConfig& cfg, Sides& s, Real* peak = nullptr) {
  SumOutcome out = g.bilateral ? sum_bilateral(g, cfg) : sum_unilateral(g, cfg);
  s.terms += out.terms_used;
  if (peak) *peak = std::max(*peak, out.max_partial);
  return out.value;
}

Complex run_quad(const QuadratureResult& r, Sides& s) {
  s.nodes += r.nodes;
  return r.value;
}

Complex unit(Real angle) { return std::polar(1.0, angle); }

// The S_1 closed form shared by the lattice-refined sum row, the integral
// limit row, and the trend family: a pure product in the four parameters.
Complex s1_closed(Complex b, Complex c, Complex d, Complex e, Real q, const EvalConfig& cfg,
                  Sides& s) {
  Complex q3 = Complex(q * q * q);
  return prod_over({b * c / q, b * d / q, b * e / q, c * d / q, c * e / q, d * e / q, Complex(q)},
                   {b * c * d * e / q3}, Complex(q), cfg, s);
}

void admissible_s1(const Point& pt, long N_for_ratio) {
  Real q = base_real(pt, "q");
  Complex b = want(pt, "b"), c = want(pt, "c"), d = want(pt, "d"), e = want(pt, "e");
  for (const char* k : {"b", "c", "d", "e"}) {
    Real v = want_real(pt, k);
    need(v > 0.03 && v < 0.92, std::string("parameter '") + k + "' must lie in (0.03, 0.92)");
  }
  Real rho = std::abs(b * c * d * e) / (q * q * q);
  need(std::pow(rho, 1.0 / static_cast<Real>(N_for_ratio)) < 0.93,
       "|bcde/q^3|^{1/N} must stay below 0.93 so the lattice sum converges at desk budget");
  // Products bc/q .. de/q sit in the S_1 numerator; those that can exceed 1
  // must keep clear of the points q^{-k} where the closed form vanishes.
  for (Complex x : {b * e / q, c * e / q, d * e / q, b * c / q, b * d / q, c * d / q})
    need_off_vanishing(x, q, "a pairwise product over q");
}

// ---- registry ---------------------------------------------------------------

std::vector<IdentityDescriptor> build_registry() {
  std::vector<IdentityDescriptor> rows;

  // R1: bilateral series against its four-over-four product form.
  rows.push_back(IdentityDescriptor{
      "ramanujan_1psi1",
      "bilateral basic hypergeometric summation",
      "Ramanujan's bilateral summation",
      {"a", "b", "q", "z"},
      "0 < q < 1; |b/a| < |z| < 1 with interior margin; a, b, z complex off the positive real axis",
      1e-9,
      {},
      [](Rng& r) {
        Point pt;
        Real q = r.uniform(0.25, 0.7);
        Complex a = r.ring_point(1.2, 2.8, 0.2);
        Complex z = r.ring_point(0.25, 0.88, 0.2);
        Real bmax = std::min(0.9, 0.85 * std::abs(a) * std::abs(z));
        Complex b = r.ring_point(0.02, bmax, 0.2);
        pt["a"] = a;
        pt["b"] = b;
        pt["q"] = Complex(q);
        pt["z"] = z;
        return pt;
      },
      [](const Point& pt) {
        Real q = base_real(pt, "q");
        (void)q;
        Complex a = want(pt, "a"), b = want(pt, "b"), z = want(pt, "z");
        need(std::abs(b / a) < 0.99 * std::abs(z), "|b/a| < |z| violated (convergence ring)");
        need(std::abs(z) < 0.99, "|z| < 1 violated (convergence ring)");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Complex a = want(pt, "a"), b = want(pt, "b"), z = want(pt, "z");
        Complex q = Complex(want_real(pt, "q"));
        Sides s;
        Real peak = 0.0;
        s.lhs = run_sum(make_psi11_terms(a, b, q, z, cfg), cfg, s, &peak);
        s.rhs = prod_over({q, b / a, a * z, q / (a * z)}, {b, q / a, z, b / (a * z)}, q, cfg, s);
        // The sum cancels well below its partial sums when a numerator factor
        // on the product side sits close to a lattice zero.
        s.scale = peak;
        return s;
      },
      nullptr});

  // R2: the unilateral limit of R1 at b = q.
  rows.push_back(IdentityDescriptor{
      "q_binomial",
      "q-binomial summation",
      "q-binomial theorem",
      {"a", "q", "z"},
      "0 < q < 1; |z| < 1 with interior margin",
      1e-9,
      {},
      [](Rng& r) {
        Point pt;
        pt["a"] = r.ring_point(0.3, 2.5, 0.2);
        pt["q"] = Complex(r.uniform(0.25, 0.7));
        pt["z"] = r.ring_point(0.05, 0.88, 0.2);
        return pt;
      },
      [](const Point& pt) {
        Real q = base_real(pt, "q");
        Complex a = want(pt, "a"), z = want(pt, "z");
        need(std::abs(z) < 0.99, "|z| < 1 violated (convergence disk)");
        need_off_vanishing(a * z, q, "az");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Complex a = want(pt, "a"), z = want(pt, "z");
        Complex q = Complex(want_real(pt, "q"));
        Sides s;
        s.lhs = run_sum(make_q_binomial_terms(a, q, z, cfg), cfg, s);
        s.rhs = prod_over({a * z}, {z}, q, cfg, s);
        return s;
      },
      nullptr});

  // R3: the bilateral sum refined to the lattice q^{1/N}.
  rows.push_back(IdentityDescriptor{
      "first_extension",
      "fractional-lattice bilateral summation",
      "fractional-lattice extension of the bilateral summation",
      {"N", "a", "b", "q", "z"},
      "0 < q < 1; N a positive integer; |b/a|^{1/N} < |z| < 1 with interior margin",
      1e-9,
      {},
      [](Rng& r) {
        Point pt;
        static const long choices[] = {1, 2, 3, 5};
        long N = choices[r.uniform_int(0, 3)];
        // Draw the refined base p and set q = p^N. Drawing q directly pushes
        // p toward 1 for large N and the p-base products collapse below
        // double-precision resolution.
        Real p = r.uniform(0.3, 0.62);
        Real q = std::pow(p, static_cast<Real>(N));
        Complex a = r.ring_point(0.35, 0.8, 0.2);
        Real wmax = N >= 4 ? 0.15 : 0.4;
        Complex w = r.ring_point(0.05, wmax, 0.2);
        Real lo = std::min(0.85, 1.12 * std::pow(std::abs(w), 1.0 / static_cast<Real>(N)));
        Complex z = r.ring_point(lo, 0.88, 0.2);
        pt["N"] = Complex(static_cast<Real>(N));
        pt["a"] = a;
        pt["b"] = a * w;
        pt["q"] = Complex(q);
        pt["z"] = z;
        return pt;
      },
      [](const Point& pt) {
        long N = want_int(pt, "N", 1, 64);
        Real q = base_real(pt, "q");
        Complex a = want(pt, "a"), b = want(pt, "b"), z = want(pt, "z");
        need(std::pow(std::abs(b / a), 1.0 / static_cast<Real>(N)) < 0.99 * std::abs(z),
             "|b/a|^{1/N} < |z| violated (convergence ring)");
        need(std::abs(z) < 0.99, "|z| < 1 violated (convergence ring)");
        Real p = std::pow(q, 1.0 / static_cast<Real>(N));
        need_off_vanishing(Complex(q) / ipow(z, N), q, "q/z^N");
        need_off_vanishing(Complex(p) / (a * z), p, "p/(az)");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        long N = want_int(pt, "N", 1, 64);
        Real q = want_real(pt, "q");
        Complex a = want(pt, "a"), b = want(pt, "b"), z = want(pt, "z");
        Real p = std::pow(q, 1.0 / static_cast<Real>(N));
        Complex cq(q), cp(p);
        Sides s;
        Real peak = 0.0;
        s.lhs = run_sum(make_first_extension_terms(a, b, q, N, z, cfg), cfg, s, &peak);
        Complex zN = ipow(z, N);
        s.rhs = prod_over({b / a, cq / zN}, {cq, b / (a * zN)}, cq, cfg, s) *
                prod_over({cp, cp, a * z, cp / (a * z)}, {a, cp / a, z, cp / z}, cp, cfg, s);
        // The sum can cancel far below its largest partial sum when the
        // product side sits near a zero; judge against the working scale.
        s.scale = peak;
        return s;
      },
      nullptr});

  // R4: the lattice residue sum in closed product form (note the sign).
  rows.push_back(IdentityDescriptor{
      "m_sum",
      "lattice residue summation",
      "residue sum over the fractional lattice",
      {"a", "p", "z"},
      "0 < p < 1; a real positive off the powers of p; |Arg(-z)| < pi",
      1e-9,
      {},
      [](Rng& r) {
        Point pt;
        pt["a"] = Complex(r.log_uniform(0.15, 4.0));
        pt["p"] = Complex(r.uniform(0.3, 0.7));
        pt["z"] = r.ring_point(0.2, 0.85, 0.25);
        return pt;
      },
      [](const Point& pt) {
        Real p = base_real(pt, "p");
        Real a = want_real(pt, "a");
        need(a > 0.0, "a must be a positive real");
        need_off_lattice(a, p, 0.05, "a");
        Complex z = want(pt, "z");
        need(std::abs(std::arg(-z)) < kPi - 0.05, "-z must stay off the negative real axis");
        need(std::abs(z) > 1e-6, "z must be nonzero");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Real a = want_real(pt, "a");
        Real p = want_real(pt, "p");
        Complex z = want(pt, "z");
        Complex cp(p), ca(a);
        Sides s;
        s.lhs = run_sum(make_msum_terms(a, z, p, cfg), cfg, s);
        s.rhs = -prod_over({cp, cp, ca * z, cp / (ca * z)}, {ca, cp / ca, z, cp / z}, cp, cfg, s);
        return s;
      },
      nullptr});

  // R5: N-term cyclotomic relation between products on the q- and p-lattices.
  rows.push_back(IdentityDescriptor{
      "product_relation_N",
      "cyclotomic product relation",
      "cyclotomic product relation",
      {"N", "a", "q", "z"},
      "0 < q < 1; N a positive integer; a, z complex off the positive real axis, |a| < 1, |z| < 1",
      1e-9,
      {},
      [](Rng& r) {
        Point pt;
        long N = r.uniform_int(1, 3);
        // Same base-collapse consideration as the fractional-lattice sum:
        // draw p and derive q so both lattices stay well resolved.
        Real p = r.uniform(0.3, 0.55);
        pt["N"] = Complex(static_cast<Real>(N));
        pt["q"] = Complex(std::pow(p, static_cast<Real>(N)));
        pt["a"] = r.ring_point(0.45, 0.85, 0.2);
        pt["z"] = r.ring_point(0.3, 0.88, 0.25);
        return pt;
      },
      [](const Point& pt) {
        long N = want_int(pt, "N", 1, 16);
        Real q = base_real(pt, "q");
        Complex a = want(pt, "a"), z = want(pt, "z");
        need(std::abs(a) < 0.95, "|a| < 1 required");
        need(std::abs(z) < 0.95, "|z| < 1 required");
        Real p = std::pow(q, 1.0 / static_cast<Real>(N));
        need_off_vanishing(Complex(q) / ipow(z, N), q, "q/z^N");
        need_off_vanishing(Complex(p) / (a * z), p, "p/(az)");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        long N = want_int(pt, "N", 1, 16);
        Real q = want_real(pt, "q");
        Complex a = want(pt, "a"), z = want(pt, "z");
        Real p = std::pow(q, 1.0 / static_cast<Real>(N));
        Complex cq(q), cp(p);
        Complex zN = ipow(z, N);
        Sides s;
        Complex sum(0.0);
        Real peak = 0.0;
        for (long k = 0; k < N; ++k) {
          Real t = static_cast<Real>(k) / static_cast<Real>(N);
          Complex qk(std::pow(q, t));
          Complex q1k(std::pow(q, 1.0 - t));
          Complex term = ipow(z, k) *
                 prod_over({a * qk * zN, q1k / (a * zN)}, {a * qk, q1k / a}, cq, cfg, s);
          peak = std::max(peak, std::abs(term));
          sum += term;
        }
        s.lhs = sum;
        s.rhs = prod_over({zN, cq / zN}, {cq, cq}, cq, cfg, s) *
                prod_over({cp, cp, a * z, cp / (a * z)}, {a, cp / a, z, cp / z}, cp, cfg, s);
        // The k-summands can nearly cancel at zeros of the right side.
        s.scale = peak;
        return s;
      },
      nullptr});

  // R6: the two-term half-base product identity (the N = 2 case spelled out).
  rows.push_back(IdentityDescriptor{
      "n2_product_identity",
      "two-term half-base product identity",
      "two-term half-base product identity",
      {"a", "q", "z"},
      "0 < q < 1; a, z complex off the positive real axis",
      1e-9,
      {},
      [](Rng& r) {
        Point pt;
        pt["q"] = Complex(r.uniform(0.25, 0.6));
        pt["a"] = r.ring_point(0.4, 0.85, 0.2);
        pt["z"] = r.ring_point(0.3, 0.88, 0.25);
        return pt;
      },
      [](const Point& pt) {
        Real q = base_real(pt, "q");
        Complex a = want(pt, "a"), z = want(pt, "z");
        Real rq = std::sqrt(q);
        need_off_vanishing(Complex(q) / (a * z * z), q, "q/(az^2)");
        need_off_vanishing(Complex(rq) / (a * z * z), q, "sqrt(q)/(az^2)");
        need_off_vanishing(-Complex(rq) / z, rq, "-sqrt(q)/z");
        need_off_vanishing(Complex(rq) / (a * z), rq, "sqrt(q)/(az)");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Real q = want_real(pt, "q");
        Complex a = want(pt, "a"), z = want(pt, "z");
        Real rq = std::sqrt(q);
        Complex cq(q), crq(rq);
        Sides s;
        Complex z2 = z * z;
        Complex even = prod_over({a * crq, crq / a, a * z2, cq / (a * z2)}, {}, cq, cfg, s);
        Complex odd = z * prod_over({a, cq / a, a * z2 * crq, crq / (a * z2)}, {}, cq, cfg, s);
        s.lhs = even + odd;
        SeriesEvaluation sq = qpoch_infinite(crq, cq, cfg);
        s.terms += sq.terms_used;
        s.rhs = sq.value * sq.value *
                prod_over({-z, -crq / z, a * z, crq / (a * z)}, {}, crq, cfg, s);
        // The even/odd halves cancel near zeros of the right side, so the
        // reachable accuracy is relative to the halves, not to the sum.
        s.scale = std::max(std::abs(even), std::abs(odd));
        return s;
      },
      nullptr});

  // R7: theta multiplication at nome vs nome^2.
  rows.push_back(IdentityDescriptor{
      "theta_addition_2tau",
      "theta addition at doubled nome",
      "theta addition at doubled nome",
      {"nome", "x", "y"},
      "0 < nome < 1 (real); x, y real arguments",
      1e-10,
      {},
      [](Rng& r) {
        Point pt;
        pt["nome"] = Complex(r.uniform(0.1, 0.6));
        pt["x"] = Complex(r.uniform(0.1, 1.2));
        pt["y"] = Complex(r.uniform(0.1, 1.2));
        return pt;
      },
      [](const Point& pt) {
        Real nm = want_real(pt, "nome");
        need(nm > 0.01 && nm < 0.75, "nome must lie in (0.01, 0.75)");
        want_real(pt, "x");
        want_real(pt, "y");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Real nm = want_real(pt, "nome");
        Real x = want_real(pt, "x"), y = want_real(pt, "y");
        Real n2 = nm * nm;
        Sides s;
        s.lhs = theta(3, Complex(x), nm, cfg) * theta(4, Complex(y), nm, cfg);
        s.rhs = theta(4, Complex(x + y), n2, cfg) * theta(4, Complex(y - x), n2, cfg) +
                theta(1, Complex(x + y), n2, cfg) * theta(1, Complex(y - x), n2, cfg);
        return s;
      },
      nullptr});

  // R8: the x-independent theta ratio.
  rows.push_back(IdentityDescriptor{
      "landen",
      "Landen theta transformation",
      "Landen transformation",
      {"nome", "x"},
      "0 < nome < 1 (real); x real",
      1e-10,
      {},
      [](Rng& r) {
        Point pt;
        pt["nome"] = Complex(r.uniform(0.1, 0.6));
        pt["x"] = Complex(r.uniform(0.1, 1.2));
        return pt;
      },
      [](const Point& pt) {
        Real nm = want_real(pt, "nome");
        need(nm > 0.01 && nm < 0.75, "nome must lie in (0.01, 0.75)");
        want_real(pt, "x");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Real nm = want_real(pt, "nome");
        Real x = want_real(pt, "x");
        Real n2 = nm * nm;
        Sides s;
        s.lhs = theta(3, Complex(x), nm, cfg) * theta(4, Complex(x), nm, cfg) /
                theta(4, Complex(2.0 * x), n2, cfg);
        s.rhs = theta(3, Complex(0.0), nm, cfg) * theta(4, Complex(0.0), nm, cfg) /
                theta(4, Complex(0.0), n2, cfg);
        return s;
      },
      nullptr});

  // R9: the N-term quotient relation between thetas at nome and nome^N. The
  // k-th summand shifts the argument by k log(1/nome) up the imaginary axis.
  rows.push_back(IdentityDescriptor{
      "theta_relation_N",
      "N-term theta-quotient relation",
      "N-term theta-quotient relation",
      {"N", "nome", "x", "y"},
      "0 < nome < 1 (real); N in {2, 3}; x, y real with x, y, Ny, x+y off the period lattice",
      1e-10,
      {},
      [](Rng& r) {
        Point pt;
        long N = r.uniform_int(2, 3);
        pt["N"] = Complex(static_cast<Real>(N));
        pt["nome"] = Complex(r.uniform(0.15, 0.5));
        pt["x"] = Complex(r.uniform(0.15, 1.35));
        pt["y"] = Complex(r.uniform(0.15, N == 3 ? 0.95 : 1.35));
        return pt;
      },
      [](const Point& pt) {
        long N = want_int(pt, "N", 2, 8);
        Real nm = want_real(pt, "nome");
        need(nm > 0.05 && nm < 0.6, "nome must lie in (0.05, 0.6)");
        Real x = want_real(pt, "x"), y = want_real(pt, "y");
        for (Real v : {x, y, static_cast<Real>(N) * y, x + y}) {
          Real d = std::abs(v - kPi * std::round(v / kPi));
          need(d > 0.1, "an argument sits within 0.1 of a real theta zero");
        }
      },
      [](const Point& pt, const EvalConfig& cfg) {
        long N = want_int(pt, "N", 2, 8);
        Real nm = want_real(pt, "nome");
        Real x = want_real(pt, "x"), y = want_real(pt, "y");
        Real nN = std::pow(nm, static_cast<Real>(N));
        Real omega = std::log(1.0 / nm);
        Sides s;
        Complex acc(0.0);
        for (long k = 0; k < N; ++k) {
          Complex shift(0.0, static_cast<Real>(k) * omega);
          acc += unit(2.0 * static_cast<Real>(k) * y) *
                 theta(1, Complex(x + static_cast<Real>(N) * y) + shift, nN, cfg) /
                 theta(1, Complex(x) + shift, nN, cfg);
        }
        s.lhs = acc;
        Real ratio = theta1_prime_zero(nm, cfg) / theta1_prime_zero(nN, cfg);
        s.rhs = ratio * theta(1, Complex(static_cast<Real>(N) * y), nN, cfg) *
                theta(1, Complex(x + y), nm, cfg) /
                (theta(1, Complex(x), nm, cfg) * theta(1, Complex(y), nm, cfg));
        return s;
      },
      nullptr});

  // R10: the y-weighted fractional-lattice bilateral sum.
  rows.push_back(IdentityDescriptor{
      "y_identity",
      "weighted fractional-lattice bilateral sum",
      "weighted fractional-lattice bilateral sum",
      {"N", "a", "b", "q", "x", "y"},
      "0 < q < 1; N a positive integer; |y| |x|^{1/N} < 1 and |b/(ax)|^{1/N} < |y| with margin",
      1e-9,
      {},
      [](Rng& r) {
        Point pt;
        long N = r.uniform_int(1, 2);
        Real q = r.uniform(0.3, 0.6);
        Complex a = r.ring_point(1.4, 2.4, 0.2);
        Complex x = r.ring_point(0.35, 0.6, 0.2);
        Complex y = r.ring_point(0.45, 0.88, 0.2);
        Real bmax = std::abs(a * x) * std::pow(0.85 * std::abs(y), static_cast<Real>(N));
        Complex b = r.ring_point(0.2 * bmax, bmax, 0.2);
        pt["N"] = Complex(static_cast<Real>(N));
        pt["a"] = a;
        pt["b"] = b;
        pt["q"] = Complex(q);
        pt["x"] = x;
        pt["y"] = y;
        return pt;
      },
      [](const Point& pt) {
        long N = want_int(pt, "N", 1, 16);
        Real q = base_real(pt, "q");
        Real Nr = static_cast<Real>(N);
        Complex a = want(pt, "a"), b = want(pt, "b"), x = want(pt, "x"), y = want(pt, "y");
        need(std::abs(y) * std::pow(std::abs(x), 1.0 / Nr) < 0.95,
             "|y| |x|^{1/N} < 1 violated (upper convergence edge)");
        need(std::pow(std::abs(b / (a * x)), 1.0 / Nr) < 0.95 * std::abs(y),
             "|b/(ax)|^{1/N} < |y| violated (lower convergence edge)");
        Real p = std::pow(q, 1.0 / Nr);
        need_off_vanishing(-a * x, p, "-ax");
        need_off_vanishing(-Complex(p) / (a * x), p, "-p/(ax)");
        need_off_vanishing(-a * x * y, p, "-axy");
        need_off_vanishing(-Complex(p) / (a * x * y), p, "-p/(axy)");
        need_off_vanishing(Complex(q) / ipow(y, N), q, "q/y^N");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        long N = want_int(pt, "N", 1, 16);
        Real q = want_real(pt, "q");
        Complex a = want(pt, "a"), b = want(pt, "b"), x = want(pt, "x"), y = want(pt, "y");
        Real p = std::pow(q, 1.0 / static_cast<Real>(N));
        Complex cq(q), cp(p);
        Complex yN = ipow(y, N);
        Sides s;
        Real peak = 0.0;
        s.lhs = run_sum(make_second_extension_terms(a, b, x, q, N, y, cfg), cfg, s, &peak);
        s.rhs = prod_over({b / a, yN, cq / yN}, {cq, -x * yN, -b / (a * x * yN)}, cq, cfg, s) *
                prod_over({cp, cp, -a * x * y, -cp / (a * x * y)},
                          {-a * x, -cp / (a * x), y, cp / y}, cp, cfg, s);
        s.scale = peak;
        return s;
      },
      nullptr});

  // R11: the lattice-weight normalized sum collapsing to a two-over-two
  // product; the factory's x slot takes -x/a to produce the x-basis form.
  rows.push_back(IdentityDescriptor{
      "alpha_psi_sum",
      "fractional-lattice psi-type summation",
      "fractional-lattice psi-type summation",
      {"N", "a", "b", "q", "x"},
      "0 < q < 1; N a positive integer; |b| < |x| < |a| with per-lattice margins",
      1e-9,
      {},
      [](Rng& r) {
        Point pt;
        long N = r.uniform_int(1, 3);
        Real edge = std::pow(0.85, static_cast<Real>(N));
        Complex a = r.ring_point(1.8, 2.8, 0.2);
        Complex w1 = r.ring_point(std::max(0.05, 0.3 * edge), edge, 0.2);
        Complex w2 = r.ring_point(std::max(0.05, 0.3 * edge), edge, 0.2);
        pt["N"] = Complex(static_cast<Real>(N));
        pt["a"] = a;
        pt["x"] = a * w1;
        pt["b"] = a * w1 * w2;
        pt["q"] = Complex(r.uniform(0.3, 0.6));
        return pt;
      },
      [](const Point& pt) {
        long N = want_int(pt, "N", 1, 16);
        Real q = base_real(pt, "q");
        Real Nr = static_cast<Real>(N);
        Complex a = want(pt, "a"), b = want(pt, "b"), x = want(pt, "x");
        need(std::pow(std::abs(x / a), 1.0 / Nr) < 0.97, "|x| < |a| violated (upper edge)");
        need(std::pow(std::abs(b / x), 1.0 / Nr) < 0.97, "|b| < |x| violated (lower edge)");
        Real p = std::pow(q, 1.0 / Nr);
        need(!near_power_lattice(x, p, 0.04, true),
             "x lies too close to the fractional power lattice of q (vanishing denominators)");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        long N = want_int(pt, "N", 1, 16);
        Real q = want_real(pt, "q");
        Complex a = want(pt, "a"), b = want(pt, "b"), x = want(pt, "x");
        Complex cq(q);
        Sides s;
        Real alpha = 1.0 / static_cast<Real>(N);
        s.lhs = alpha *
                run_sum(make_second_extension_terms(a, b, -x / a, q, N, Complex(1.0), cfg), cfg, s);
        s.rhs = prod_over({cq, b / a}, {x / a, b / x}, cq, cfg, s);
        return s;
      },
      nullptr});

  // R12: half-line integral of a product ratio against dt/t.
  rows.push_back(IdentityDescriptor{
      "qbeta_1",
      "q-beta integral, first form",
      "q-beta integral, first form",
      {"a", "b", "q"},
      "0 < q < 1; real 0 < b < 1 < a",
      1e-7,
      {},
      [](Rng& r) {
        Point pt;
        pt["a"] = Complex(r.log_uniform(1.4, 3.2));
        pt["b"] = Complex(r.log_uniform(0.1, 0.8));
        pt["q"] = Complex(r.uniform(0.3, 0.65));
        return pt;
      },
      [](const Point& pt) {
        Real q = base_real(pt, "q");
        (void)q;
        Real a = want_real(pt, "a"), b = want_real(pt, "b");
        need(a > 1.25, "a must exceed 1 with margin (decay of the integrand at 0)");
        need(b > 0.0 && b < 0.85, "b must lie in (0, 1) with margin (decay at infinity)");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Real a = want_real(pt, "a"), b = want_real(pt, "b"), q = want_real(pt, "q");
        Complex cq(q);
        Real ptol = cfg.inner().rel_tol;
        Real guard = cfg.ill_cond_guard;
        Sides s;
        auto G = [=](Real v) -> Complex {
          Complex t(std::exp(v));
          LogProduct L = log_qpoch_ratio(b * t, -t, cq, ptol, guard);
          L += log_qpoch_ratio(cq / (a * t), -cq / t, cq, ptol, guard);
          if (L.zero) return Complex(0.0);
          return std::exp(L.log);
        };
        s.lhs = run_quad(real_line_trapezoid(G, cfg), s);
        s.rhs = std::log(1.0 / q) *
                prod_over({cq, Complex(b / a)}, {Complex(-1.0 / a), Complex(-b)}, cq, cfg, s);
        return s;
      },
      nullptr});

  // R13: the companion integral with a free exponent c.
  rows.push_back(IdentityDescriptor{
      "qbeta_2",
      "q-beta integral, second form",
      "q-beta integral, second form",
      {"a", "b", "c", "q"},
      "0 < q < 1; real a < c < b with margin; c off the integers",
      1e-7,
      {},
      [](Rng& r) {
        Point pt;
        Real a = r.uniform(0.2, 1.2);
        Real c = a + r.uniform(0.35, 1.8);
        Real b = c + r.uniform(0.35, 1.8);
        pt["a"] = Complex(a);
        pt["b"] = Complex(b);
        pt["c"] = Complex(c);
        pt["q"] = Complex(r.uniform(0.3, 0.6));
        return pt;
      },
      [](const Point& pt) {
        Real q = base_real(pt, "q");
        (void)q;
        Real a = want_real(pt, "a"), b = want_real(pt, "b"), c = want_real(pt, "c");
        need(c - a > 0.3, "c must exceed a by at least 0.3 (decay of the integrand at 0)");
        need(b - c > 0.3, "b must exceed c by at least 0.3 (decay at infinity)");
        need(std::abs(c - std::round(c)) > 0.1, "c must keep away from the integers (sine pole)");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Real a = want_real(pt, "a"), b = want_real(pt, "b"), c = want_real(pt, "c");
        Real q = want_real(pt, "q");
        Complex cq(q);
        Real qb = std::pow(q, b), q1a = std::pow(q, 1.0 - a);
        Real ptol = cfg.inner().rel_tol;
        Real guard = cfg.ill_cond_guard;
        Sides s;
        auto G = [=](Real v) -> Complex {
          Complex t(std::exp(v));
          LogProduct L = log_qpoch_ratio(-qb * t, -t, cq, ptol, guard);
          L += log_qpoch_ratio(-q1a / t, -cq / t, cq, ptol, guard);
          if (L.zero) return Complex(0.0);
          return std::exp(L.log + Complex(c * v));
        };
        s.lhs = run_quad(real_line_trapezoid(G, cfg), s);
        s.rhs = kPi / sinpi(Complex(c)) *
                prod_over({Complex(std::pow(q, b - a)), Complex(std::pow(q, c)),
                           Complex(std::pow(q, 1.0 - c))},
                          {cq, Complex(std::pow(q, b - c)), Complex(std::pow(q, c - a))}, cq, cfg,
                          s);
        return s;
      },
      nullptr});

  // R14: the very-well-poised six-pair bilateral summation. All parameters
  // real here, so every base must keep clear of the full q-power lattice.
  rows.push_back(IdentityDescriptor{
      "bailey_6psi6",
      "very-well-poised bilateral summation",
      "Bailey's very-well-poised bilateral summation",
      {"a", "b", "c", "d", "e", "q"},
      "0 < q < 1; real positive parameters with |q a^2/(bcde)| < 1 and margin",
      1e-9,
      {},
      [](Rng& r) {
        Point pt;
        pt["a"] = Complex(r.uniform(0.08, 0.22));
        pt["b"] = Complex(r.uniform(0.3, 0.65));
        pt["c"] = Complex(r.uniform(0.3, 0.65));
        pt["d"] = Complex(r.uniform(0.3, 0.65));
        pt["e"] = Complex(r.uniform(0.3, 0.65));
        pt["q"] = Complex(r.uniform(0.4, 0.62));
        return pt;
      },
      [](const Point& pt) {
        Real q = base_real(pt, "q");
        Real a = want_real(pt, "a"), b = want_real(pt, "b"), c = want_real(pt, "c");
        Real d = want_real(pt, "d"), e = want_real(pt, "e");
        for (Real v : {a, b, c, d, e}) need(v > 0.0, "parameters must be positive reals");
        need(q * a * a / (b * c * d * e) < 0.88, "|q a^2/(bcde)| < 1 violated (convergence ring)");
        Real aq = a * q;
        const struct { Real v; const char* what; } checks[] = {
            {std::sqrt(a), "sqrt(a)"}, {a, "a"},          {b, "b"},
            {c, "c"},                  {d, "d"},          {e, "e"},
            {aq / b, "aq/b"},          {aq / c, "aq/c"},  {aq / d, "aq/d"},
            {aq / e, "aq/e"},          {aq / (b * c), "aq/(bc)"}, {aq / (b * d), "aq/(bd)"},
            {aq / (b * e), "aq/(be)"}, {aq / (c * d), "aq/(cd)"}, {aq / (c * e), "aq/(ce)"},
            {aq / (d * e), "aq/(de)"}};
        for (const auto& ck : checks) need_off_lattice(ck.v, q, 0.03, ck.what);
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Real a = want_real(pt, "a"), b = want_real(pt, "b"), c = want_real(pt, "c");
        Real d = want_real(pt, "d"), e = want_real(pt, "e"), q = want_real(pt, "q");
        Complex cq(q);
        Complex aq(a * q);
        Sides s;
        s.lhs = run_sum(make_psi66_terms(Complex(a), Complex(b), Complex(c), Complex(d),
                                         Complex(e), q, cfg),
                        cfg, s);
        s.rhs = prod_over({aq, aq / (b * c), aq / (b * d), aq / (b * e), aq / (c * d),
                           aq / (c * e), aq / (d * e), cq, cq / a},
                          {aq / b, aq / c, aq / d, aq / e, cq / b, cq / c, cq / d, cq / e,
                           Complex(q * a * a / (b * c * d * e))},
                          cq, cfg, s);
        return s;
      },
      nullptr});

  // R15: the lattice-refined very-well-poised sum S_N against the closed S_1.
  rows.push_back(IdentityDescriptor{
      "sn_equals_s1",
      "lattice-refined very-well-poised sum",
      "lattice-refined very-well-poised summation",
      {"N", "a", "b", "c", "d", "e", "q"},
      "0 < q < 1; N a positive integer; real positive b..e with |bcde/q^3|^{1/N} < 1 and margin; "
      "a positive off the half-lattice of q^{1/N}",
      1e-9,
      {{"a", Complex(0.72)}},
      [](Rng& r) {
        Point pt;
        long N = r.uniform_int(1, 4);
        Real q = r.uniform(0.4, 0.65);
        Real b = r.log_uniform(0.3, 0.62);
        Real c = r.log_uniform(0.3, 0.62);
        Real d = r.log_uniform(0.3, 0.62);
        Real target =
            q * q * q * std::pow(0.88, static_cast<Real>(N)) * r.log_uniform(0.05, 0.9);
        Real e = target / (b * c * d);
        pt["N"] = Complex(static_cast<Real>(N));
        pt["a"] = Complex(r.log_uniform(0.35, 0.9));
        pt["b"] = Complex(b);
        pt["c"] = Complex(c);
        pt["d"] = Complex(d);
        pt["e"] = Complex(e);
        pt["q"] = Complex(q);
        return pt;
      },
      [](const Point& pt) {
        long N = want_int(pt, "N", 1, 32);
        admissible_s1(pt, N);
        Real q = want_real(pt, "q");
        Real a = want_real(pt, "a");
        need(a > 0.0, "a must be a positive real");
        // Denominator factors vanish exactly when a lands on the half-integer
        // refinement of the q^{1/N} lattice.
        Real half_base = std::pow(q, 1.0 / (2.0 * static_cast<Real>(N)));
        need_off_lattice(a, half_base, 0.015, "a");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        long N = want_int(pt, "N", 1, 32);
        Real q = want_real(pt, "q");
        Complex a = want(pt, "a"), b = want(pt, "b"), c = want(pt, "c"), d = want(pt, "d"),
                e = want(pt, "e");
        Sides s;
        s.lhs = run_sum(make_sn_terms(a, b, c, d, e, q, N, cfg), cfg, s);
        s.rhs = s1_closed(b, c, d, e, q, cfg, s);
        return s;
      },
      [](EvalConfig& cfg) {
        // The value is often order 1e-4 while the stopping rule goes absolute
        // for small sums; tighten so delivered accuracy stays relative.
        cfg.rel_tol = std::min(cfg.rel_tol, 1e-13);
      }});

  // R16: the continuous limit of R15, an integral over the whole line.
  rows.push_back(IdentityDescriptor{
      "askey",
      "integral limit of the lattice-refined sum",
      "Askey's integral evaluation",
      {"b", "c", "d", "e", "q"},
      "0 < q < 1; real positive b..e with |bcde/q^3| < 0.8",
      1e-7,
      {},
      [](Rng& r) {
        Point pt;
        Real q = r.uniform(0.42, 0.6);
        Real b = r.log_uniform(0.3, 0.6);
        Real c = r.log_uniform(0.3, 0.6);
        Real d = r.log_uniform(0.3, 0.6);
        Real e = q * q * q * r.log_uniform(0.08, 0.75) / (b * c * d);
        pt["b"] = Complex(b);
        pt["c"] = Complex(c);
        pt["d"] = Complex(d);
        pt["e"] = Complex(e);
        pt["q"] = Complex(q);
        return pt;
      },
      [](const Point& pt) {
        admissible_s1(pt, 1);
        Real q = want_real(pt, "q");
        Complex prod = want(pt, "b") * want(pt, "c") * want(pt, "d") * want(pt, "e");
        need(std::abs(prod) / (q * q * q) < 0.8,
             "|bcde/q^3| < 0.8 required so the integrand decays inside the window");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Real q = want_real(pt, "q");
        Complex b = want(pt, "b"), c = want(pt, "c"), d = want(pt, "d"), e = want(pt, "e");
        Complex cq(q);
        Real rq = std::sqrt(q);
        Real omega = std::log(1.0 / q);
        Real ptol = cfg.inner().rel_tol;
        Real guard = cfg.ill_cond_guard;
        const Complex I(0.0, 1.0);
        Sides s;
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
        s.lhs = run_quad(real_line_trapezoid(F, cfg), s) / omega;
        s.rhs = s1_closed(b, c, d, e, q, cfg, s);
        return s;
      },
      nullptr});

  // R17: the unilateral very-well-poised two-base sum in closed form.
  rows.push_back(IdentityDescriptor{
      "stanton_bibasic",
      "two-base very-well-poised summation",
      "bibasic very-well-poised summation",
      {"a", "b", "p", "q", "theta"},
      "0 < p < q < 1 with gap; real 0 < a < 1, b moderate; theta in (0, pi)",
      1e-9,
      {},
      [](Rng& r) {
        Point pt;
        Real q = r.uniform(0.45, 0.7);
        pt["a"] = Complex(r.uniform(0.3, 0.8));
        pt["b"] = Complex(r.uniform(0.2, 0.7));
        pt["p"] = Complex(r.uniform(0.15, q - 0.12));
        pt["q"] = Complex(q);
        pt["theta"] = Complex(r.uniform(0.3, 2.8));
        return pt;
      },
      [](const Point& pt) {
        Real q = base_real(pt, "q");
        Real p = base_real(pt, "p");
        need(q - p > 0.08, "q - p must exceed 0.08 (two-base separation)");
        Real a = want_real(pt, "a");
        need(a > 0.0 && a < 0.9, "a must lie in (0, 0.9)");
        Real b = want_real(pt, "b");
        need(b > 0.0 && b < 1.5, "b must lie in (0, 1.5)");
        Real th = want_real(pt, "theta");
        need(th > 0.15 && th < kPi - 0.15, "theta must lie inside (0, pi) with margin");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Real a = want_real(pt, "a"), b = want_real(pt, "b");
        Real p = want_real(pt, "p"), q = want_real(pt, "q");
        Real th = want_real(pt, "theta");
        Complex cq(q), cp(p);
        Complex ei = unit(th), emi = unit(-th);
        Sides s;
        s.lhs = prod_over({cq, cq * a * a}, {cq * a * ei, cq * a * emi}, cq, cfg, s) *
                prod_over({b * ei, b * emi}, {}, cp, cfg, s);
        s.rhs = run_sum(make_stanton_terms(Complex(a), Complex(b), th, p, q, cfg), cfg, s);
        return s;
      },
      nullptr});

  // The next five rows exercise the two-base kernel
  //   f(a, b, z) = sum_n (b q^n, q^{1-n}/a; p)_inf (-z)^n q^{n(n-1)/2}.

  // R18: inversion symmetry of the kernel.
  rows.push_back(IdentityDescriptor{
      "f_simple_transform",
      "kernel inversion transformation",
      "inversion transformation of the two-base kernel",
      {"a", "b", "p", "q", "z"},
      "0 < p < q < 1 with gap; z nonzero",
      1e-9,
      {},
      [](Rng& r) {
        Point pt;
        Real q = r.uniform(0.4, 0.65);
        pt["a"] = r.ring_point(1.5, 3.0, 0.2);
        pt["b"] = r.ring_point(0.08, 0.5, 0.2);
        pt["p"] = Complex(r.uniform(0.12, q - 0.1));
        pt["q"] = Complex(q);
        pt["z"] = r.ring_point(0.5, 1.6, 0.25);
        return pt;
      },
      [](const Point& pt) {
        Real q = base_real(pt, "q");
        Real p = base_real(pt, "p");
        need(q - p > 0.08, "q - p must exceed 0.08 (two-base separation)");
        need(std::abs(want(pt, "z")) > 1e-6, "z must be nonzero");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Complex a = want(pt, "a"), b = want(pt, "b"), z = want(pt, "z");
        Real p = want_real(pt, "p"), q = want_real(pt, "q");
        Sides s;
        Real peak = 0.0;
        s.lhs = run_sum(make_f_terms(a, b, z, p, q, cfg), cfg, s, &peak);
        Complex other = run_sum(make_f_terms(1.0 / b, 1.0 / a, 1.0 / z, p, q, cfg), cfg, s, &peak);
        s.rhs = -z * other;
        s.scale = peak * std::max(1.0, std::abs(z));
        return s;
      },
      nullptr});

  // R19: the shift transformation in the third argument.
  rows.push_back(IdentityDescriptor{
      "f_y_transform",
      "kernel shift transformation",
      "shift transformation of the two-base kernel",
      {"a", "b", "p", "q", "y", "z"},
      "0 < p < q < 1 with gap; y real positive; z, z/y off the q lattice",
      1e-9,
      {},
      [](Rng& r) {
        Point pt;
        Real q = r.uniform(0.4, 0.65);
        pt["a"] = r.ring_point(1.5, 3.0, 0.2);
        pt["b"] = r.ring_point(0.08, 0.5, 0.2);
        pt["p"] = Complex(r.uniform(0.12, q - 0.1));
        pt["q"] = Complex(q);
        pt["y"] = Complex(r.log_uniform(0.6, 1.7));
        pt["z"] = r.ring_point(0.5, 1.6, 0.25);
        return pt;
      },
      [](const Point& pt) {
        Real q = base_real(pt, "q");
        Real p = base_real(pt, "p");
        need(q - p > 0.08, "q - p must exceed 0.08 (two-base separation)");
        Real y = want_real(pt, "y");
        need(y > 0.05, "y must be a positive real");
        Complex z = want(pt, "z");
        need(std::abs(z) > 1e-6, "z must be nonzero");
        need(std::abs(std::arg(z)) > 0.15, "z must keep off the positive real axis");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Complex a = want(pt, "a"), b = want(pt, "b"), z = want(pt, "z");
        Real y = want_real(pt, "y");
        Real p = want_real(pt, "p"), q = want_real(pt, "q");
        Complex cq(q);
        Sides s;
        Real peak = 0.0;
        s.lhs = run_sum(make_f_terms(a, b, z, p, q, cfg), cfg, s, &peak);
        Complex pref =
            prod_over({z, cq / z}, {z / y, cq * y / z}, cq, cfg, s);
        Complex shifted = run_sum(make_f_terms(a / y, b / y, z / y, p, q, cfg), cfg, s, &peak);
        s.rhs = pref * shifted;
        s.scale = peak * std::max(1.0, std::abs(pref));
        return s;
      },
      nullptr});

  // R20: homogeneity, stated cross-multiplied so neither side divides by a
  // possibly small product.
  rows.push_back(IdentityDescriptor{
      "f_two_variable",
      "kernel scaling invariance",
      "two-variable reduction of the two-base kernel",
      {"a", "b", "lambda", "p", "q", "z"},
      "0 < p < q < 1 with gap; 0.5 <= lambda <= 2 real; z, lambda z off the positive real axis",
      1e-9,
      {},
      [](Rng& r) {
        Point pt;
        Real q = r.uniform(0.4, 0.65);
        pt["a"] = r.ring_point(1.5, 3.0, 0.2);
        pt["b"] = r.ring_point(0.08, 0.5, 0.2);
        pt["lambda"] = Complex(r.log_uniform(0.55, 1.9));
        pt["p"] = Complex(r.uniform(0.12, q - 0.1));
        pt["q"] = Complex(q);
        pt["z"] = r.ring_point(0.5, 1.6, 0.25);
        return pt;
      },
      [](const Point& pt) {
        Real q = base_real(pt, "q");
        Real p = base_real(pt, "p");
        need(q - p > 0.08, "q - p must exceed 0.08 (two-base separation)");
        Real lam = want_real(pt, "lambda");
        need(lam >= 0.5 && lam <= 2.0, "lambda must lie in [0.5, 2]");
        Complex z = want(pt, "z");
        need(std::abs(std::arg(z)) > 0.15, "z must keep off the positive real axis");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Complex a = want(pt, "a"), b = want(pt, "b"), z = want(pt, "z");
        Real lam = want_real(pt, "lambda");
        Real p = want_real(pt, "p"), q = want_real(pt, "q");
        Complex cq(q);
        Sides s;
        Real peak = 0.0;
        Complex f1 = run_sum(make_f_terms(a, b, z, p, q, cfg), cfg, s, &peak);
        Complex f2 = run_sum(make_f_terms(lam * a, lam * b, lam * z, p, q, cfg), cfg, s, &peak);
        Complex p1 = prod_over({z, cq / z}, {}, cq, cfg, s);
        Complex p2 = prod_over({lam * z, cq / (lam * z)}, {}, cq, cfg, s);
        s.lhs = f1 * p2;
        s.rhs = f2 * p1;
        s.scale = peak * std::max(std::abs(p1), std::abs(p2));
        return s;
      },
      nullptr});

  // R21: the kernel's zero set, checked against the largest-partial-sum floor.
  rows.push_back(IdentityDescriptor{
      "f_zeros",
      "kernel zero set",
      "zero set of the two-base kernel",
      {"a", "b", "c", "m", "p", "q"},
      "0 < p < q < 1 with gap; m integer in [-1, 2]; c real > 1",
      1e-9,
      {{"a", Complex(2.4)}, {"b", Complex(0.3)}, {"m", Complex(0.0)}},
      [](Rng& r) {
        Point pt;
        Real q = r.uniform(0.4, 0.65);
        pt["a"] = r.ring_point(1.5, 3.0, 0.2);
        pt["b"] = r.ring_point(0.08, 0.5, 0.2);
        pt["c"] = Complex(r.log_uniform(1.2, 2.4));
        pt["m"] = Complex(static_cast<Real>(r.uniform_int(-1, 2)));
        pt["p"] = Complex(r.uniform(0.12, q - 0.1));
        pt["q"] = Complex(q);
        return pt;
      },
      [](const Point& pt) {
        Real q = base_real(pt, "q");
        Real p = base_real(pt, "p");
        need(q - p > 0.08, "q - p must exceed 0.08 (two-base separation)");
        want_int(pt, "m", -1, 2);
        Real c = want_real(pt, "c");
        need(c > 1.05, "c must exceed 1");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Complex a = want(pt, "a"), b = want(pt, "b");
        Real c = want_real(pt, "c");
        long m = want_int(pt, "m", -1, 2);
        Real p = want_real(pt, "p"), q = want_real(pt, "q");
        Sides s;
        Real peak = 0.0;
        Complex at_power = run_sum(make_f_terms(a, b, ipow(Complex(q), m), p, q, cfg), cfg, s, &peak);
        Complex at_one =
            run_sum(make_f_terms(Complex(c), Complex(1.0 / c), Complex(1.0), p, q, cfg), cfg, s,
                    &peak);
        s.lhs = Complex(std::max(std::abs(at_power), std::abs(at_one)));
        s.rhs = Complex(0.0);
        s.scale = peak;
        char buf[96];
        std::snprintf(buf, sizeof(buf), "residual at z=q^m: %.3e, residual at (c, 1/c, 1): %.3e",
                      std::abs(at_power), std::abs(at_one));
        s.note = buf;
        return s;
      },
      nullptr});

  // R22: the kernel at the geometric mean of its first two arguments.
  rows.push_back(IdentityDescriptor{
      "f_sqrt_ab",
      "kernel at the geometric mean",
      "geometric-mean evaluation of the two-base kernel",
      {"a", "b", "p", "q"},
      "0 < p < q < 1 with gap; a, b real positive with ab away from 1; sqrt(ab) off the q lattice",
      1e-9,
      {},
      [](Rng& r) {
        Point pt;
        Real q = r.uniform(0.4, 0.65);
        pt["a"] = Complex(r.log_uniform(1.5, 2.9));
        pt["b"] = Complex(r.log_uniform(0.12, 0.65));
        pt["p"] = Complex(r.uniform(0.12, q - 0.1));
        pt["q"] = Complex(q);
        return pt;
      },
      [](const Point& pt) {
        Real q = base_real(pt, "q");
        Real p = base_real(pt, "p");
        need(q - p > 0.08, "q - p must exceed 0.08 (two-base separation)");
        Real a = want_real(pt, "a"), b = want_real(pt, "b");
        need(a > 0.0 && b > 0.0, "a and b must be positive reals");
        need(std::abs(a * b - 1.0) > 0.1, "ab must keep away from 1 (the kernel vanishes there)");
        need_off_lattice(std::sqrt(a * b), q, 0.04, "sqrt(ab)");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Real a = want_real(pt, "a"), b = want_real(pt, "b");
        Real p = want_real(pt, "p"), q = want_real(pt, "q");
        Complex cq(q);
        Complex w(std::sqrt(a * b));
        Sides s;
        Real peak = 0.0;
        s.lhs = run_sum(make_f_terms(Complex(a), Complex(b), w, p, q, cfg), cfg, s, &peak);
        Complex pref = prod_over({w, cq / w}, {cq, cq}, cq, cfg, s);
        Complex tail = run_sum(make_sqrt_ab_rhs_terms(Complex(a), Complex(b), p, q, cfg), cfg, s,
                               &peak);
        s.rhs = pref * tail;
        s.scale = peak * std::max(1.0, std::abs(pref));
        return s;
      },
      nullptr});

  // R23: the cube of Euler's product as a weighted triangular-number series.
  rows.push_back(IdentityDescriptor{
      "euler_cube",
      "cube of Euler's product",
      "cube of Euler's product",
      {"q"},
      "0 < q < 1; the series side cancels against its own partial sums as q -> 1, so points "
      "there are judged against the largest-partial-sum floor",
      1e-9,
      {},
      [](Rng& r) {
        Point pt;
        pt["q"] = Complex(r.uniform(0.08, 0.78));
        return pt;
      },
      [](const Point& pt) { base_real(pt, "q"); },
      [](const Point& pt, const EvalConfig& cfg) {
        Real q = want_real(pt, "q");
        Sides s;
        SeriesEvaluation e = qpoch_infinite(Complex(q), Complex(q), cfg);
        s.terms += e.terms_used;
        s.lhs = e.value * e.value * e.value;
        Real peak = 0.0;
        s.rhs = run_sum(make_euler_cube_terms(q), cfg, s, &peak);
        // The alternating series cancels from partial sums of order one down
        // to q-power size, so the achievable accuracy is absolute against the
        // largest partial sum, not relative to the value.
        s.scale = peak;
        return s;
      },
      nullptr});

  // R24: the closed two-base summation (the kernel at a = b up to a base
  // shift), with a product side mixing three bases.
  rows.push_back(IdentityDescriptor{
      "summation_19",
      "closed two-base summation",
      "closed bibasic summation",
      {"a", "p", "q", "z"},
      "0 < p < q < 1 with gap; a, z complex, z off the positive real axis",
      1e-9,
      {},
      [](Rng& r) {
        Point pt;
        Real q = r.uniform(0.45, 0.7);
        pt["a"] = r.ring_point(0.4, 1.2, 0.2);
        pt["p"] = Complex(r.uniform(0.15, q - 0.08));
        pt["q"] = Complex(q);
        pt["z"] = r.ring_point(0.4, 1.3, 0.2);
        return pt;
      },
      [](const Point& pt) {
        Real q = base_real(pt, "q");
        Real p = base_real(pt, "p");
        need(q - p > 0.06, "q - p must exceed 0.06 (two-base separation)");
        Complex a = want(pt, "a"), z = want(pt, "z");
        need(std::abs(z) > 1e-6, "z must be nonzero");
        need(std::abs(std::arg(z)) > 0.15, "z must keep off the positive real axis");
        need(!near_power_lattice(-a / z, p / q, 0.04, true),
             "-a/z lies too close to the power lattice of p/q (a product side would vanish)");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Complex a = want(pt, "a"), z = want(pt, "z");
        Real p = want_real(pt, "p"), q = want_real(pt, "q");
        Real pq = p / q;
        Complex cq(q), cp(p), cpq(pq);
        Sides s;
        Real peak = 0.0;
        s.lhs = run_sum(make_f_terms(a * q / p, a, z, p, q, cfg), cfg, s, &peak);
        SeriesEvaluation eq = qpoch_infinite(cq, cq, cfg);
        SeriesEvaluation epq = qpoch_infinite(cpq, cpq, cfg);
        SeriesEvaluation ep = qpoch_infinite(cp, cp, cfg, true);
        s.terms += eq.terms_used + epq.terms_used + ep.terms_used;
        s.rhs = eq.value * epq.value / ep.value *
                prod_over({-a / z, -cp * z / (a * q)}, {}, cpq, cfg, s) *
                prod_over({z, cq / z}, {}, cq, cfg, s);
        s.scale = peak;
        return s;
      },
      nullptr});

  // R25: a pair of infinite products recovered as a unit-circle contour mean.
  rows.push_back(IdentityDescriptor{
      "psi11_int_rep",
      "contour representation of a product pair",
      "contour representation of a product pair",
      {"a", "b", "n", "p", "q", "y"},
      "0 < p < 1, 0 < q < 1; real 0 < b < y < a with ratio margins; n integer in [-2, 2]",
      1e-7,
      {},
      [](Rng& r) {
        Point pt;
        Real a = r.log_uniform(1.6, 3.0);
        Real b = r.log_uniform(0.12, 0.5);
        Real lo = std::min(1.15 * b, 0.85 * a);
        Real y = r.log_uniform(std::max(lo, 0.5), 0.9 * a);
        pt["a"] = Complex(a);
        pt["b"] = Complex(b);
        pt["n"] = Complex(static_cast<Real>(r.uniform_int(-2, 2)));
        pt["p"] = Complex(r.uniform(0.25, 0.5));
        pt["q"] = Complex(r.uniform(0.4, 0.75));
        pt["y"] = Complex(y);
        return pt;
      },
      [](const Point& pt) {
        Real p = base_real(pt, "p");
        Real q = base_real(pt, "q");
        long n = want_int(pt, "n", -2, 2);
        Real a = want_real(pt, "a"), b = want_real(pt, "b"), y = want_real(pt, "y");
        need(a > 0 && b > 0 && y > 0, "a, b, y must be positive reals");
        need(y / a < 0.93, "y/a must stay below 0.93 (contour clearance)");
        need(b / y < 0.93, "b/y must stay below 0.93 (contour clearance)");
        Real qn = std::pow(q, static_cast<Real>(n));
        need_off_lattice(b * qn, p, 0.05, "b q^n");
        need_off_lattice(p / (a * qn), p, 0.05, "p q^{-n}/a");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Real a = want_real(pt, "a"), b = want_real(pt, "b"), y = want_real(pt, "y");
        Real p = want_real(pt, "p"), q = want_real(pt, "q");
        long n = want_int(pt, "n", -2, 2);
        Real qn = std::pow(q, static_cast<Real>(n));
        Complex cp(p);
        Real ptol = cfg.inner().rel_tol;
        Sides s;
        s.lhs = prod_over({Complex(b * qn), Complex(p / (a * qn))}, {}, cp, cfg, s);
        auto den = [=](Real th) -> Complex {
          LogProduct L = log_qpoch(y * unit(th) / a, cp, ptol);
          L += log_qpoch(b * unit(-th) / y, cp, ptol);
          if (L.zero) return Complex(0.0);
          return std::exp(L.log);
        };
        require_contour_clear(den, cfg.ill_cond_guard);
        auto g = [=](Real th) -> Complex {
          Complex ei = unit(th), emi = unit(-th);
          LogProduct num = log_qpoch(y * qn * ei, cp, ptol);
          num += log_qpoch(p * emi / (y * qn), cp, ptol);
          LogProduct dnm = log_qpoch(y * ei / a, cp, ptol);
          dnm += log_qpoch(b * emi / y, cp, ptol);
          if (dnm.zero) fail(ErrorKind::IllConditionedContour, "denominator vanished on the contour");
          if (num.zero) return Complex(0.0);
          return std::exp(num.log - dnm.log);
        };
        Complex mean = run_quad(periodic_mean(g, cfg), s);
        s.rhs = prod_over({cp, Complex(b / a)}, {}, cp, cfg, s) * mean;
        return s;
      },
      nullptr});

  // R26: the kernel as a two-base contour integral. The contour radius y is a
  // free choice; the sweep samples it and the cross-checks vary it.
  rows.push_back(IdentityDescriptor{
      "third_extension",
      "kernel as a two-base contour integral",
      "two-base integral representation",
      {"a", "b", "p", "q", "y", "z"},
      "0 < p < q < 1 with gap; real 0 < b < y < a with ratio margins; z off the positive real axis",
      1e-7,
      {},
      [](Rng& r) {
        Point pt;
        Real q = r.uniform(0.45, 0.7);
        Real p = r.uniform(0.15, q - 0.08);
        Real a = r.log_uniform(1.8, 3.2);
        Real b = r.log_uniform(0.08, 0.4);
        Real y = r.log_uniform(std::max(b / 0.88, 0.45), 0.88 * a);
        pt["a"] = Complex(a);
        pt["b"] = Complex(b);
        pt["p"] = Complex(p);
        pt["q"] = Complex(q);
        pt["y"] = Complex(y);
        pt["z"] = r.ring_point(0.45, 1.35, 0.2);
        return pt;
      },
      [](const Point& pt) {
        Real q = base_real(pt, "q");
        Real p = base_real(pt, "p");
        need(q - p > 0.06, "q - p must exceed 0.06 (two-base separation)");
        Real a = want_real(pt, "a"), b = want_real(pt, "b"), y = want_real(pt, "y");
        need(a > 0 && b > 0 && y > 0, "a, b, y must be positive reals");
        need(y / a < 0.93, "y/a must stay below 0.93 (contour clearance)");
        need(b / y < 0.93, "b/y must stay below 0.93 (contour clearance)");
        Complex z = want(pt, "z");
        need(std::abs(z) > 1e-6, "z must be nonzero");
        need(std::abs(std::arg(z)) > 0.15, "z must keep off the positive real axis");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Real a = want_real(pt, "a"), b = want_real(pt, "b"), y = want_real(pt, "y");
        Real p = want_real(pt, "p"), q = want_real(pt, "q");
        Complex z = want(pt, "z");
        Real pq = p / q;
        Complex cq(q), cp(p), cpq(pq);
        Real ptol = cfg.inner().rel_tol;
        Sides s;
        Real peak = 0.0;
        s.lhs = run_sum(make_f_terms(a * q / p, b, z, p, q, cfg), cfg, s, &peak);
        auto den = [=](Real th) -> Complex {
          LogProduct L = log_qpoch(-y * unit(th) / a, cp, ptol);
          L += log_qpoch(-b * unit(-th) / y, cp, ptol);
          if (L.zero) return Complex(0.0);
          return std::exp(L.log);
        };
        require_contour_clear(den, cfg.ill_cond_guard);
        auto g = [=](Real th) -> Complex {
          Complex ei = unit(th), emi = unit(-th);
          LogProduct num = log_qpoch(y * ei / z, cpq, ptol);
          num += log_qpoch(cp * z * emi / (q * y), cpq, ptol);
          LogProduct dnm = log_qpoch(-y * ei / a, cp, ptol);
          dnm += log_qpoch(-b * emi / y, cp, ptol);
          if (dnm.zero) fail(ErrorKind::IllConditionedContour, "denominator vanished on the contour");
          if (num.zero) return Complex(0.0);
          return std::exp(num.log - dnm.log);
        };
        Complex mean = run_quad(periodic_mean(g, cfg), s);
        SeriesEvaluation eq = qpoch_infinite(cq, cq, cfg);
        SeriesEvaluation epq = qpoch_infinite(cpq, cpq, cfg);
        SeriesEvaluation eba = qpoch_infinite(Complex(b / a), cp, cfg);
        s.terms += eq.terms_used + epq.terms_used + eba.terms_used;
        s.rhs = eq.value * epq.value * eba.value * prod_over({z, cq / z}, {}, cq, cfg, s) * mean;
        s.scale = peak;
        return s;
      },
      nullptr});

  // R27: the bilateral gamma-ratio summation on a fractional lattice.
  rows.push_back(IdentityDescriptor{
      "dougall_alpha",
      "bilateral gamma-ratio summation",
      "Dougall's bilateral sum on a fractional lattice",
      {"a", "alpha", "b", "c", "d"},
      "real a..d with a+b+c+d > 3 and margin; alpha in {1, 1/2, 1/3}",
      1e-8,
      {},
      [](Rng& r) {
        Point pt;
        static const Real alphas[] = {1.0, 0.5, 1.0 / 3.0};
        pt["a"] = Complex(r.uniform(1.6, 2.6));
        pt["alpha"] = Complex(alphas[r.uniform_int(0, 2)]);
        pt["b"] = Complex(r.uniform(1.6, 2.6));
        pt["c"] = Complex(r.uniform(1.6, 2.6));
        pt["d"] = Complex(r.uniform(1.6, 2.6));
        return pt;
      },
      [](const Point& pt) {
        Real al = want_real(pt, "alpha");
        long k = std::lround(1.0 / al);
        need(k >= 1 && k <= 3 && std::abs(al * static_cast<Real>(k) - 1.0) < 1e-9,
             "alpha must be 1, 1/2, or 1/3");
        Real sum = want_real(pt, "a") + want_real(pt, "b") + want_real(pt, "c") +
                   want_real(pt, "d");
        need(sum > 3.1, "a+b+c+d must exceed 3 with margin (tail decay)");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Real a = want_real(pt, "a"), b = want_real(pt, "b");
        Real c = want_real(pt, "c"), d = want_real(pt, "d");
        Real al = want_real(pt, "alpha");
        Sides s;
        s.lhs = al * run_sum(make_dougall_terms(a, b, c, d, al), cfg, s);
        s.rhs = dougall_rhs(a, b, c, d);
        return s;
      },
      nullptr});

  // R28: the generalized binomial expansion on a fractional lattice.
  rows.push_back(IdentityDescriptor{
      "binomial_alpha",
      "fractional-lattice binomial expansion",
      "generalized binomial expansion",
      {"a", "alpha", "c", "x"},
      "Re a > 0; alpha in {1, 1/2, 1/4}; real c; |x| < pi with margin",
      1e-8,
      {},
      [](Rng& r) {
        Point pt;
        static const Real alphas[] = {1.0, 0.5, 0.25};
        pt["a"] = Complex(r.uniform(2.0, 3.3), r.uniform(-0.5, 0.5));
        pt["alpha"] = Complex(alphas[r.uniform_int(0, 2)]);
        pt["c"] = Complex(r.uniform(0.05, 0.95));
        pt["x"] = Complex(r.uniform(-2.2, 2.2));
        return pt;
      },
      [](const Point& pt) {
        Real al = want_real(pt, "alpha");
        long k = std::lround(1.0 / al);
        need((k == 1 || k == 2 || k == 4) && std::abs(al * static_cast<Real>(k) - 1.0) < 1e-9,
             "alpha must be 1, 1/2, or 1/4");
        Complex a = want(pt, "a");
        need(a.real() > 0.3, "Re a must be positive with margin (tail decay)");
        Real x = want_real(pt, "x");
        need(std::abs(x) < 2.6, "|x| must stay below 2.6 (value floor of the closed form)");
        want_real(pt, "c");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Complex a = want(pt, "a");
        Real al = want_real(pt, "alpha");
        Real c = want_real(pt, "c"), x = want_real(pt, "x");
        Sides s;
        s.lhs = al * run_sum(make_binomial_terms(a, c, al, x), cfg, s);
        s.rhs = binomial_rhs(a, x);
        return s;
      },
      [](EvalConfig& cfg) {
        cfg.rel_tol = std::max(cfg.rel_tol, 3e-10);
        cfg.max_terms = std::max(cfg.max_terms, 2000000L);
      }});

  // R29: the unit-lattice case with a free real offset.
  rows.push_back(IdentityDescriptor{
      "binomial_riemann",
      "unit-lattice binomial expansion",
      "bilateral binomial expansion on the unit lattice",
      {"a", "c", "x"},
      "Re a > 0; real c; |x| < pi with margin",
      1e-8,
      {},
      [](Rng& r) {
        Point pt;
        pt["a"] = Complex(r.uniform(1.8, 3.3), r.uniform(-0.5, 0.5));
        pt["c"] = Complex(r.uniform(0.05, 0.95));
        pt["x"] = Complex(r.uniform(-2.2, 2.2));
        return pt;
      },
      [](const Point& pt) {
        Complex a = want(pt, "a");
        need(a.real() > 0.3, "Re a must be positive with margin (tail decay)");
        Real x = want_real(pt, "x");
        need(std::abs(x) < 2.6, "|x| must stay below 2.6 (value floor of the closed form)");
        want_real(pt, "c");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Complex a = want(pt, "a");
        Real c = want_real(pt, "c"), x = want_real(pt, "x");
        Sides s;
        s.lhs = run_sum(make_binomial_terms(a, c, 1.0, x), cfg, s);
        s.rhs = binomial_rhs(a, x);
        return s;
      },
      [](EvalConfig& cfg) {
        cfg.rel_tol = std::max(cfg.rel_tol, 3e-10);
        cfg.max_terms = std::max(cfg.max_terms, 2000000L);
      }});

  // R30: cardinal-series reconstruction of a band-limited profile. kind 0 is
  // the sinc profile (only meaningful on the unit lattice, where the sum
  // collapses to the sample at the origin); kind 1 is the cosine-power
  // profile with algebraic tail, the genuinely slow case.
  rows.push_back(IdentityDescriptor{
      "sampling",
      "cardinal-series reconstruction",
      "sampling reconstruction identity",
      {"alpha", "b", "kind", "y"},
      "kind in {0: sinc, 1: cosine-power}; alpha = 1/k with k in {1} for sinc, {1, 2, 4} for "
      "cosine-power; b in (0.45, 4) for the cosine-power profile; y in (0, 1)",
      1e-8,
      {},
      [](Rng& r) {
        Point pt;
        long kind = r.uniform_int(0, 1);
        if (kind == 0) {
          pt["alpha"] = Complex(1.0);
          pt["b"] = Complex(0.0);
        } else {
          static const Real alphas[] = {1.0, 0.5, 0.25};
          pt["alpha"] = Complex(alphas[r.uniform_int(0, 2)]);
          pt["b"] = Complex(r.uniform(0.6, 3.8));
        }
        pt["kind"] = Complex(static_cast<Real>(kind));
        pt["y"] = Complex(r.uniform(0.05, 0.95));
        return pt;
      },
      [](const Point& pt) {
        long kind = want_int(pt, "kind", 0, 1);
        Real al = want_real(pt, "alpha");
        long k = std::lround(1.0 / al);
        need(k >= 1 && k <= 64 && std::abs(al * static_cast<Real>(k) - 1.0) < 1e-9,
             "alpha must be the reciprocal of a positive integer");
        if (kind == 0) {
          need(k == 1, "the sinc profile is registered on the unit lattice only");
        } else {
          need(k == 1 || k == 2 || k == 4, "alpha must be 1, 1/2, or 1/4");
          Real b = want_real(pt, "b");
          need(b > 0.45 && b < 4.0, "b must lie in (0.45, 4) (tail decay vs budget)");
        }
        Real y = want_real(pt, "y");
        need(y > 0.01 && y < 0.99, "y must lie inside (0, 1)");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        long kind = want_int(pt, "kind", 0, 1);
        Real al = want_real(pt, "alpha");
        Real y = want_real(pt, "y");
        BandLimitedTestCase prof =
            kind == 0 ? sinc_profile() : cos_power_profile(want_real(pt, "b"));
        Sides s;
        s.lhs = run_sum(make_sampling_terms(prof, al, y), cfg, s);
        s.rhs = Complex(prof.g(y) / al);
        s.note = prof.id;
        return s;
      },
      [](EvalConfig& cfg) {
        cfg.rel_tol = std::max(cfg.rel_tol, 2e-9);
        cfg.max_terms = std::max(cfg.max_terms, 6000000L);
      }});

  // R31: the cosine-power beta integral against its gamma closed form.
  rows.push_back(IdentityDescriptor{
      "beta_integral_classical",
      "cosine-power beta integral",
      "cosine-power beta integral",
      {"a", "b"},
      "real b > -1 with margin; (b - a)/2 off the negative integers",
      1e-7,
      {},
      [](Rng& r) {
        Point pt;
        pt["a"] = Complex(r.uniform(0.3, 3.0));
        pt["b"] = Complex(r.uniform(0.5, 4.0));
        return pt;
      },
      [](const Point& pt) {
        Real a = want_real(pt, "a"), b = want_real(pt, "b");
        need(b > -0.9, "b must exceed -1 (integrability at pi/2)");
        need(std::abs(b - a + 2.0) > 0.1 && std::abs(b - a + 4.0) > 0.1,
             "(b-a)/2 + 1 must keep away from the gamma poles");
      },
      [](const Point& pt, const EvalConfig& cfg) {
        Real a = want_real(pt, "a"), b = want_real(pt, "b");
        Sides s;
        auto [integral, closed] = beta_integral_check(a, b, cfg);
        s.lhs = integral;
        s.rhs = closed;
        return s;
      },
      nullptr});

  return rows;
}

}  // namespace

const std::vector<IdentityDescriptor>& registry() {
  static const std::vector<IdentityDescriptor> rows = build_registry();
  return rows;
}

}  // namespace qsf
