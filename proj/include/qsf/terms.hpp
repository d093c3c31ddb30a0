#pragma once

#include <string>

#include "qsf/config.hpp"
#include "qsf/series.hpp"

namespace qsf {

// Term-generator factories for every series the library sums. Each factory
// validates its convergence domain up front (with a 1% interior margin on
// strict inequalities: parameters too close to the boundary converge too
// slowly for desk-scale budgets) and returns a pure generator; all internal
// products are evaluated through the log-space helpers in qpoch.hpp so deep
// indices cannot overflow.

// Bilateral sum with term (a;q)_n / (b;q)_n * z^n, convergent for
// |b/a| < |z| < 1.
TermGenerator make_psi11_terms(Complex a, Complex b, Complex q, Complex z,
                               const EvalConfig& cfg);

// Unilateral sum with term (a;q)_n / (q;q)_n * z^n, |z| < 1.
TermGenerator make_q_binomial_terms(Complex a, Complex q, Complex z, const EvalConfig& cfg);

// Bilateral sum with term (b p^n;q)_inf / (a p^n;q)_inf * z^n where
// p = q^(1/N); convergent for |b/a|^(1/N) < |z| < 1, real q in (0,1).
TermGenerator make_first_extension_terms(Complex a, Complex b, Real q, long N, Complex z,
                                         const EvalConfig& cfg);

// Bilateral sum with term
//   (b q^{an}, q^{1-an}/a;q)_inf / (-a x q^{an}, -q^{1-an}/(a x);q)_inf * y^n
// with a(lpha) = 1/N. The x-basis variant used by the alpha-psi row is reached
// by substituting x -> -x/a, which turns the denominator arguments into
// (x q^{an}, q^{1-an}/x).
TermGenerator make_second_extension_terms(Complex a, Complex b, Complex x, Real q, long N,
                                          Complex y, const EvalConfig& cfg);

// Very-well-poised bilateral sum: term
//   (q sqrt(a), -q sqrt(a), b, c, d, e;q)_n / (sqrt(a), -sqrt(a), aq/b, aq/c, aq/d, aq/e;q)_n
//   * (q a^2/(b c d e))^n,
// convergent for |q a^2/(b c d e)| < 1.
TermGenerator make_psi66_terms(Complex a, Complex b, Complex c, Complex d, Complex e, Real q,
                               const EvalConfig& cfg);

// The S_N summand (eight infinite-product ratios at u = q^{n/N}), including
// the leading 1/N prefactor folded into every term.
TermGenerator make_sn_terms(Complex a, Complex b, Complex c, Complex d, Complex e, Real q,
                            long N, const EvalConfig& cfg);

// Bilateral sum with term (b q^n, q^{1-n}/a;p)_inf * (-z)^n * q^{n(n-1)/2}.
// Requires real 0 < p < q < 1, or p = q with |b| < |z| < |a|.
TermGenerator make_f_terms(Complex a, Complex b, Complex z, Real p, Real q,
                           const EvalConfig& cfg);

// Bilateral sum over m with term
//   pi * (-z)^{s_m} / (Omega * sin(pi ln a / Omega + 2 pi^2 i m / Omega)),
// s_m = (ln a + 2 pi i m)/Omega, Omega = ln(1/p). Requires a real > 0, p in
// (0,1), and |Arg(-z)| < pi so the terms decay.
TermGenerator make_msum_terms(Real a, Complex z, Real p, const EvalConfig& cfg);

// Unilateral very-well-poised bibasic summand:
//   (1-a^2 q^{2k})/(1-a^2) * (a^2, a e^{i t}, a e^{-i t};q)_k /
//   (q, q a e^{i t}, q a e^{-i t};q)_k * (-1)^k q^{k(k+1)/2}
//   * (a b q^k, b q^{-k}/a;p)_inf.
TermGenerator make_stanton_terms(Complex a, Complex b, Real theta, Real p, Real q,
                                 const EvalConfig& cfg);

// Unilateral series for (q;q)_inf^3: term (-1)^k (2k+1) q^{k(k+1)/2}.
TermGenerator make_euler_cube_terms(Real q);

// Unilateral right-hand side of the f(a,b,sqrt(ab)) identity: term
//   (r q^{k+1}, r q^{-k};p)_inf * (-1)^k (2k+1) q^{k(k+1)/2}, r = sqrt(b/a)
// (the series index n >= 1 of the display is shifted to k = n-1 >= 0).
TermGenerator make_sqrt_ab_rhs_terms(Complex a, Complex b, Real p, Real q,
                                     const EvalConfig& cfg);

// Classical gamma-ratio summands. Dougall: term
//   1/[Gamma(a+an) Gamma(b-an) Gamma(c+an) Gamma(d-an)], alpha = a(lpha),
// decaying like |n|^{2-Re(a+b+c+d)}; requires a+b+c+d > 3 (real parameters).
TermGenerator make_dougall_terms(Real a, Real b, Real c, Real d, Real alpha);

// Generalized binomial: term
//   Gamma(a+1)/[Gamma(a-c-an+1) Gamma(c+an+1)] * e^{i(c+an)x},
// Re a > 0, x in (-pi, pi) held as an angle. Complex a supported.
TermGenerator make_binomial_terms(Complex a, Real c, Real alpha, Real x);

// Sampling-theorem summand sinc(pi(y-an)) * g(an) for a registered
// band-limited profile (see classical.hpp). alpha must be 1/N for integer N
// so the trigonometric lattice values come from a cyclic table.
struct BandLimitedTestCase;
TermGenerator make_sampling_terms(const BandLimitedTestCase& g, Real alpha, Real y);

}  // namespace qsf
