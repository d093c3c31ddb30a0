#include "qsf/terms.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "qsf/classical.hpp"
#include "qsf/errors.hpp"
#include "qsf/gamma.hpp"
#include "qsf/qpoch.hpp"
#include "qsf/scalar.hpp"

namespace qsf {
namespace {

// Strict inequalities in the convergence domains get a 1% interior margin:
// closer to the boundary the engine would need more terms than the desk
// budgets allow, so reject early with a message naming the predicate.
constexpr Real kEdge = 0.995;

void need(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::DomainViolation, what);
}

std::string ratio_msg(const char* series, const char* which, Real r) {
  std::ostringstream os;
  os << series << ": " << which << " term ratio " << r << " is not below " << kEdge
     << "; parameters sit on or too close to the convergence boundary";
  return os.str();
}

void need_ratio(const char* series, const char* which, Real r) {
  need(r <= kEdge, ratio_msg(series, which, r));
}

void need_base(const char* series, Real q) {
  std::ostringstream os;
  os << series << ": base q must lie in (0, " << kEdge << "], got " << q;
  need(q > 0.0 && q <= kEdge, os.str());
}

bool is_nonpositive_integer(Real x) { return x <= 0.0 && x == std::floor(x); }

Real product_tol(const EvalConfig& cfg) {
  // Inner products are truncated an order tighter than the surrounding sum so
  // their truncation error never dominates the engine's own estimate.
  return std::max(0.01 * cfg.rel_tol, 5e-16);
}

}  // namespace

TermGenerator make_psi11_terms(Complex a, Complex b, Complex q, Complex z,
                               const EvalConfig& cfg) {
  need(std::abs(q) <= kEdge, "bilateral basic series: need |q| < 1");
  need(a != Complex(0.0), "bilateral basic series: a must be nonzero");
  need(z != Complex(0.0), "bilateral basic series: argument z must be nonzero");
  need_ratio("bilateral basic series", "positive-direction", std::abs(z));
  need_ratio("bilateral basic series", "negative-direction", std::abs(b / a) / std::abs(z));

  const Complex lnz = std::log(z);
  const Real guard = cfg.ill_cond_guard;
  TermGenerator gen;
  gen.bilateral = true;
  gen.name = "bilateral basic hypergeometric series";
  gen.term = [=](long n) -> Complex {
    const PochPair pairs[] = {{a, b}};
    const LogProduct L = finite_ratio_log(pairs, q, n, guard);
    if (L.zero) return Complex(0.0);
    return std::exp(L.log + static_cast<Real>(n) * lnz);
  };
  return gen;
}

TermGenerator make_q_binomial_terms(Complex a, Complex q, Complex z, const EvalConfig& cfg) {
  need(std::abs(q) <= kEdge, "q-binomial series: need |q| < 1");
  need_ratio("q-binomial series", "tail", std::abs(z));

  const Complex lnz = (z == Complex(0.0)) ? Complex(0.0) : std::log(z);
  const Real guard = cfg.ill_cond_guard;
  TermGenerator gen;
  gen.bilateral = false;
  gen.name = "q-binomial series";
  gen.term = [=](long n) -> Complex {
    if (z == Complex(0.0)) return n == 0 ? Complex(1.0) : Complex(0.0);
    const PochPair pairs[] = {{a, q}};
    const LogProduct L = finite_ratio_log(pairs, q, n, guard);
    if (L.zero) return Complex(0.0);
    return std::exp(L.log + static_cast<Real>(n) * lnz);
  };
  return gen;
}

TermGenerator make_first_extension_terms(Complex a, Complex b, Real q, long N, Complex z,
                                         const EvalConfig& cfg) {
  need_base("interpolated bilateral series", q);
  need(N >= 1, "interpolated bilateral series: N must be a positive integer");
  need(a != Complex(0.0), "interpolated bilateral series: a must be nonzero");
  need(z != Complex(0.0), "interpolated bilateral series: argument z must be nonzero");
  const Real al = 1.0 / static_cast<Real>(N);
  need_ratio("interpolated bilateral series", "positive-direction", std::abs(z));
  need_ratio("interpolated bilateral series", "negative-direction",
             std::pow(std::abs(b / a), al) / std::abs(z));

  const Real lnq = std::log(q);
  const Complex lnz = std::log(z);
  const Real ptol = product_tol(cfg);
  const Real guard = cfg.ill_cond_guard;
  TermGenerator gen;
  gen.bilateral = true;
  gen.name = "interpolated bilateral series";
  gen.term = [=](long n) -> Complex {
    const Real u = std::exp(lnq * al * static_cast<Real>(n));  // q^{n/N}
    const LogProduct L = log_qpoch_ratio(b * u, a * u, q, ptol, guard);
    if (L.zero) return Complex(0.0);
    return std::exp(L.log + static_cast<Real>(n) * lnz);
  };
  return gen;
}

TermGenerator make_second_extension_terms(Complex a, Complex b, Complex x, Real q, long N,
                                          Complex y, const EvalConfig& cfg) {
  need_base("weighted interpolated series", q);
  need(N >= 1, "weighted interpolated series: N must be a positive integer");
  need(a != Complex(0.0) && x != Complex(0.0),
       "weighted interpolated series: a and x must be nonzero");
  need(y != Complex(0.0), "weighted interpolated series: weight y must be nonzero");
  const Real al = 1.0 / static_cast<Real>(N);
  const Complex den_base = -a * x;  // the denominator products run over this base
  need_ratio("weighted interpolated series", "positive-direction",
             std::abs(y) * std::pow(std::abs(x), al));
  need_ratio("weighted interpolated series", "negative-direction",
             std::pow(std::abs(b / den_base), al) / std::abs(y));

  const Real lnq = std::log(q);
  const Complex lny = std::log(y);
  const Real ptol = product_tol(cfg);
  const Real guard = cfg.ill_cond_guard;
  TermGenerator gen;
  gen.bilateral = true;
  gen.name = "weighted interpolated series";
  gen.term = [=](long n) -> Complex {
    const Real u = std::exp(lnq * al * static_cast<Real>(n));        // q^{n/N}
    const Real w = std::exp(lnq * (1.0 - al * static_cast<Real>(n)));  // q^{1-n/N}
    LogProduct L = log_qpoch_ratio(b * u, den_base * u, q, ptol, guard);
    L += log_qpoch_ratio(w / a, w / den_base, q, ptol, guard);
    if (L.zero) return Complex(0.0);
    return std::exp(L.log + static_cast<Real>(n) * lny);
  };
  return gen;
}

TermGenerator make_psi66_terms(Complex a, Complex b, Complex c, Complex d, Complex e, Real q,
                               const EvalConfig& cfg) {
  need_base("very-well-poised bilateral series", q);
  need(a != Complex(0.0) && b != Complex(0.0) && c != Complex(0.0) && d != Complex(0.0) &&
           e != Complex(0.0),
       "very-well-poised bilateral series: all parameters must be nonzero");
  const Complex arg = q * a * a / (b * c * d * e);
  need_ratio("very-well-poised bilateral series", "argument", std::abs(arg));

  const Complex ra = std::sqrt(a);
  const Complex lnarg = std::log(arg);
  const Real guard = cfg.ill_cond_guard;
  TermGenerator gen;
  gen.bilateral = true;
  gen.name = "very-well-poised bilateral series";
  gen.term = [=](long n) -> Complex {
    const PochPair pairs[] = {{q * ra, ra},       {-q * ra, -ra},    {b, a * q / b},
                              {c, a * q / c},     {d, a * q / d},    {e, a * q / e}};
    const LogProduct L = finite_ratio_log(pairs, Complex(q), n, guard);
    if (L.zero) return Complex(0.0);
    return std::exp(L.log + static_cast<Real>(n) * lnarg);
  };
  return gen;
}

TermGenerator make_sn_terms(Complex a, Complex b, Complex c, Complex d, Complex e, Real q,
                            long N, const EvalConfig& cfg) {
  need_base("averaged quadratic series", q);
  need(N >= 1, "averaged quadratic series: N must be a positive integer");
  need(a != Complex(0.0), "averaged quadratic series: a must be nonzero");
  const Real al = 1.0 / static_cast<Real>(N);
  const Real q3 = q * q * q;
  need_ratio("averaged quadratic series", "tail",
             std::pow(std::abs(b * c * d * e) / q3, al));

  const Real rq = std::sqrt(q);
  const Real lnq = std::log(q);
  const Real ptol = product_tol(cfg);
  const Real guard = cfg.ill_cond_guard;
  TermGenerator gen;
  gen.bilateral = true;
  gen.name = "averaged quadratic series";
  gen.term = [=](long n) -> Complex {
    const Real u = std::exp(lnq * al * static_cast<Real>(n));  // q^{n/N}
    const Complex au = a * u;
    // Each numerator product is paired with the denominator product of the
    // same asymptotic size in u, so only the balanced exponent is ever
    // exponentiated.
    LogProduct L = log_qpoch_ratio(a * b * u, a * q * u, q, ptol, guard);
    L += log_qpoch_ratio(a * c * u, -a * q * u, q, ptol, guard);
    L += log_qpoch_ratio(a * d * u, a * rq * u, q, ptol, guard);
    L += log_qpoch_ratio(a * e * u, -a * rq * u, q, ptol, guard);
    L += log_qpoch_ratio(b / au, q / au, q, ptol, guard);
    L += log_qpoch_ratio(c / au, -q / au, q, ptol, guard);
    L += log_qpoch_ratio(d / au, rq / au, q, ptol, guard);
    L += log_qpoch_ratio(e / au, -rq / au, q, ptol, guard);
    if (L.zero) return Complex(0.0);
    return al * std::exp(L.log);
  };
  return gen;
}

TermGenerator make_f_terms(Complex a, Complex b, Complex z, Real p, Real q,
                           const EvalConfig& cfg) {
  need_base("bibasic theta-weighted series", q);
  need(p > 0.0 && p <= q, "bibasic theta-weighted series: need 0 < p <= q");
  need(a != Complex(0.0), "bibasic theta-weighted series: a must be nonzero");
  need(z != Complex(0.0), "bibasic theta-weighted series: argument z must be nonzero");
  // Decay regimes: for p strictly inside q the quadratic weight q^{n(n-1)/2}
  // beats the product growth and any nonzero z works; as p -> q that margin
  // vanishes and the classical annulus takes over.
  if (std::log(q) / std::log(p) > 0.999) {
    need_ratio("bibasic theta-weighted series (p = q regime)", "positive-direction",
               std::abs(z) / std::abs(a));
    need_ratio("bibasic theta-weighted series (p = q regime)", "negative-direction",
               std::abs(b) / std::abs(z));
  }

  const Real lnq = std::log(q);
  const Complex lnmz = std::log(-z);
  const Real ptol = product_tol(cfg);
  TermGenerator gen;
  gen.bilateral = true;
  gen.name = "bibasic theta-weighted series";
  gen.term = [=](long n) -> Complex {
    const Real qn = std::exp(lnq * static_cast<Real>(n));
    const Real q1mn = std::exp(lnq * (1.0 - static_cast<Real>(n)));
    LogProduct L = log_qpoch(b * qn, p, ptol);
    L += log_qpoch(q1mn / a, p, ptol);
    if (L.zero) return Complex(0.0);
    return std::exp(L.log + static_cast<Real>(n) * lnmz + tri(n) * lnq);
  };
  return gen;
}

TermGenerator make_msum_terms(Real a, Complex z, Real p, const EvalConfig& cfg) {
  (void)cfg;
  need_base("residue comb series", p);
  need(a > 0.0, "residue comb series: a must be real and positive");
  need(z != Complex(0.0), "residue comb series: argument z must be nonzero");
  const Real phi = std::arg(-z);
  need(std::abs(phi) <= kPi - 0.01,
       "residue comb series: -z must stay off the negative real axis (|arg(-z)| < pi)");
  const Real Om = std::log(1.0 / p);
  const Real v = std::log(a) / std::log(p);
  need(std::abs(v - std::round(v)) >= 0.02,
       "residue comb series: a lies on (or within 2% of) a power of p, where the sine in "
       "the denominator vanishes");

  const Complex lnmz = std::log(-z);
  const Real lead = std::log(kPi / Om);
  TermGenerator gen;
  gen.bilateral = true;
  gen.name = "residue comb series";
  gen.term = [=](long m) -> Complex {
    const Complex s(std::log(a) / Om, 2.0 * kPi * static_cast<Real>(m) / Om);
    const Complex w(kPi * std::log(a) / Om, 2.0 * kPi * kPi * static_cast<Real>(m) / Om);
    return std::exp(Complex(lead, 0.0) + s * lnmz - log_sin(w));
  };
  return gen;
}

TermGenerator make_stanton_terms(Complex a, Complex b, Real theta, Real p, Real q,
                                 const EvalConfig& cfg) {
  need_base("bibasic very-well-poised series", q);
  need(p > 0.0 && p < 1.0, "bibasic very-well-poised series: need p in (0,1)");
  need(std::log(q) / std::log(p) <= kEdge,
       "bibasic very-well-poised series: need p < q with margin, or the second-base "
       "products outgrow the quadratic weight");
  need(std::abs(a) <= kEdge, "bibasic very-well-poised series: need |a| < 1");
  need(a != Complex(0.0), "bibasic very-well-poised series: a must be nonzero");

  const Complex a2 = a * a;
  const Complex ei = std::polar(1.0, theta);
  const Complex ae = a * ei;
  const Complex aei = a / ei;
  const Real lnq = std::log(q);
  const Real ptol = product_tol(cfg);
  const Real guard = cfg.ill_cond_guard;
  TermGenerator gen;
  gen.bilateral = false;
  gen.name = "bibasic very-well-poised series";
  gen.term = [=](long k) -> Complex {
    const Real qk = std::exp(lnq * static_cast<Real>(k));
    const Real qmk = std::exp(-lnq * static_cast<Real>(k));
    const PochPair pairs[] = {{a2, Complex(q)}, {ae, q * ae}, {aei, q * aei}};
    LogProduct L = finite_ratio_log(pairs, Complex(q), k, guard);
    L += log_qpoch(a * b * qk, p, ptol);
    L += log_qpoch((b / a) * qmk, p, ptol);
    if (L.zero) return Complex(0.0);
    const Complex vwp = (1.0 - a2 * qk * qk) / (1.0 - a2);
    const Real sgn = (k & 1) ? -1.0 : 1.0;
    return sgn * vwp * std::exp(L.log + tri(k + 1) * lnq);
  };
  return gen;
}

TermGenerator make_euler_cube_terms(Real q) {
  need_base("cubed Euler product series", q);
  const Real lnq = std::log(q);
  TermGenerator gen;
  gen.bilateral = false;
  gen.name = "cubed Euler product series";
  gen.term = [=](long k) -> Complex {
    const Real sgn = (k & 1) ? -1.0 : 1.0;
    return Complex(sgn * static_cast<Real>(2 * k + 1) * std::exp(tri(k + 1) * lnq), 0.0);
  };
  return gen;
}

TermGenerator make_sqrt_ab_rhs_terms(Complex a, Complex b, Real p, Real q,
                                     const EvalConfig& cfg) {
  need_base("balanced-point expansion", q);
  need(p > 0.0 && p < 1.0, "balanced-point expansion: need p in (0,1)");
  need(std::log(q) / std::log(p) <= kEdge,
       "balanced-point expansion: need p < q with margin");
  need(a != Complex(0.0), "balanced-point expansion: a must be nonzero");

  const Complex r = std::sqrt(b / a);
  const Real lnq = std::log(q);
  const Real ptol = product_tol(cfg);
  TermGenerator gen;
  gen.bilateral = false;
  gen.name = "balanced-point expansion";
  gen.term = [=](long k) -> Complex {
    const Real qk1 = std::exp(lnq * static_cast<Real>(k + 1));
    const Real qmk = std::exp(-lnq * static_cast<Real>(k));
    LogProduct L = log_qpoch(r * qk1, p, ptol);
    L += log_qpoch(r * qmk, p, ptol);
    if (L.zero) return Complex(0.0);
    const Real sgn = (k & 1) ? -1.0 : 1.0;
    return sgn * static_cast<Real>(2 * k + 1) * std::exp(L.log + tri(k + 1) * lnq);
  };
  return gen;
}

TermGenerator make_dougall_terms(Real a, Real b, Real c, Real d, Real alpha) {
  need(alpha > 0.0 && alpha <= 1.0, "bilateral gamma-ratio series: alpha must lie in (0,1]");
  need(a + b + c + d >= 3.0 + 0.03,
       "bilateral gamma-ratio series: need a+b+c+d > 3 (with margin) for the tail to decay");

  TermGenerator gen;
  gen.bilateral = true;
  gen.name = "bilateral gamma-ratio series";
  gen.term = [=](long n) -> Complex {
    const Real an = alpha * static_cast<Real>(n);
    const Real args[4] = {a + an, b - an, c + an, d - an};
    Real L = 0.0, sgn = 1.0;
    for (Real x : args) {
      if (is_nonpositive_integer(x)) return Complex(0.0);  // reciprocal gamma zero
      const SignedLogGamma g = log_gamma_signed(x);
      L += g.log_abs;
      sgn *= g.sign;
    }
    return Complex(sgn * std::exp(-L), 0.0);
  };
  return gen;
}

TermGenerator make_binomial_terms(Complex a, Real c, Real alpha, Real x) {
  need(alpha > 0.0 && alpha <= 1.0, "binomial interpolation series: alpha must lie in (0,1]");
  need(a.real() >= 0.01,
       "binomial interpolation series: need Re a > 0 for the terms to decay");
  need(std::abs(x) <= kPi - 0.01,
       "binomial interpolation series: the angle x must stay inside (-pi, pi)");

  const Complex ga1 = gamma(a + Complex(1.0));
  TermGenerator gen;
  gen.bilateral = true;
  gen.name = "binomial interpolation series";
  gen.term = [=](long n) -> Complex {
    const Real y = c + alpha * static_cast<Real>(n);
    const Complex phase = std::polar(1.0, y * x);
    if (std::abs(y) <= 60.0) {
      return ga1 * reciprocal_gamma(a - y + Complex(1.0)) *
             reciprocal_gamma(Complex(y + 1.0, 0.0)) * phase;
    }
    if (y > 0.0) {
      // Reflect 1/Gamma(a-y+1) so both log-gamma arguments sit far in the
      // right half plane.
      const Complex w = a - y + Complex(1.0);
      const Complex L = log_gamma(Complex(y, 0.0) - a) - log_gamma(Complex(y + 1.0, 0.0));
      return ga1 * sinpi(w) * std::exp(L) * phase / kPi;
    }
    // y far negative: reflect the real factor 1/Gamma(y+1) instead.
    const Complex L = log_gamma(Complex(-y, 0.0)) - log_gamma(Complex(1.0 - y, 0.0) + a);
    return ga1 * Complex(sinpi(y + 1.0), 0.0) * std::exp(L) * phase / kPi;
  };
  return gen;
}

TermGenerator make_sampling_terms(const BandLimitedTestCase& g, Real alpha, Real y) {
  need(alpha > 0.0, "cardinal interpolation series: alpha must be positive");
  const Real Nr = 1.0 / alpha;
  const long N = std::lround(Nr);
  need(N >= 1 && N <= 64 && std::abs(Nr - static_cast<Real>(N)) <= 1e-9,
       "cardinal interpolation series: alpha must be 1/N for an integer N <= 64");

  // sin(pi n / N) and cos(pi n / N) are periodic in n with period 2N; filling
  // the second half by sign flip keeps the lattice zeros exact.
  const long L = 2 * N;
  std::vector<Real> st(L), ct(L);
  for (long i = 0; i < N; ++i) {
    st[i] = std::sin(kPi * static_cast<Real>(i) / static_cast<Real>(N));
    ct[i] = std::cos(kPi * static_cast<Real>(i) / static_cast<Real>(N));
  }
  for (long i = N; i < L; ++i) {
    st[i] = -st[i - N];
    ct[i] = -ct[i - N];
  }
  const Real sy = std::sin(kPi * y);
  const Real cy = std::cos(kPi * y);
  const bool fast_sinc = (g.id == "sinc");
  const std::function<Real(Real)> gf = g.g;
  const Real al = 1.0 / static_cast<Real>(N);

  TermGenerator gen;
  gen.bilateral = true;
  gen.name = "cardinal interpolation series";
  gen.term = [=](long n) -> Complex {
    const long i = ((n % L) + L) % L;
    const Real d = y - al * static_cast<Real>(n);
    const Real snc = (d == 0.0) ? 1.0 : (sy * ct[i] - cy * st[i]) / (kPi * d);
    Real gv;
    if (fast_sinc) {
      gv = (n == 0) ? 1.0 : st[i] / (kPi * al * static_cast<Real>(n));
    } else {
      gv = gf(al * static_cast<Real>(n));
    }
    return Complex(snc * gv, 0.0);
  };
  return gen;
}

}  // namespace qsf
