#include "qsf/qpoch.hpp"

#include <sstream>

#include "qsf/errors.hpp"

namespace qsf {

namespace {

std::string describe_factor(Complex a, Complex q, long k, Complex factor) {
  std::ostringstream os;
  os << "factor (1 - a q^" << k << ") = " << factor << " with a = " << a << ", q = " << q;
  return os.str();
}

}  // namespace

Complex qpoch_finite(Complex a, Complex q, long n, Real guard) {
  if (n >= 0) {
    Complex acc(1.0), c = a;
    for (long k = 0; k < n; ++k) {
      acc *= (Complex(1.0) - c);
      c *= q;
    }
    return acc;
  }
  // (a;q)_{-m} = 1 / prod_{k=1}^{m} (1 - a q^{-k})
  long m = -n;
  if (q == Complex(0.0)) fail(ErrorKind::DomainViolation, "negative order needs q != 0");
  Complex acc(1.0), c = a;
  for (long k = 1; k <= m; ++k) {
    c /= q;
    Complex factor = Complex(1.0) - c;
    // These factors sit in a denominator by construction, so near-vanishing is
    // as fatal as exact vanishing.
    if (std::abs(factor) < guard)
      fail(ErrorKind::DivisionByVanishingFactor, describe_factor(a, q, -k, factor));
    acc *= factor;
  }
  return Complex(1.0) / acc;
}

SeriesEvaluation qpoch_infinite(Complex a, Complex q, const EvalConfig& cfg, bool denominator) {
  cfg.validate();
  Real qa = std::abs(q);
  if (qa >= 1.0)
    fail(ErrorKind::DomainViolation, "infinite product needs |q| < 1, got |q| = " + std::to_string(qa));

  SeriesEvaluation out;
  if (a == Complex(0.0)) {
    out.value = Complex(1.0);
    out.converged = true;
    return out;
  }

  // Truncating after K factors leaves a relative defect bounded by
  // sum_{k>=K} |a q^k| / (1 - |a q^k|); once |a q^K| is small the sum is about
  // |a q^K| / (1 - |q|). Run until that bound drops under a quarter of rel_tol.
  const Real target = 0.25 * cfg.rel_tol * (1.0 - qa);
  Complex acc(1.0), c = a;
  long k = 0;
  for (;; ++k) {
    if (k > cfg.max_terms && k > 100000)
      fail(ErrorKind::BudgetExceeded, "infinite product did not settle; |q| too close to 1?");
    if (std::abs(c) < target) break;
    Complex factor = Complex(1.0) - c;
    if (factor == Complex(0.0)) {
      if (denominator)
        fail(ErrorKind::DivisionByVanishingFactor, describe_factor(a, q, k, factor));
      // Exact zero factor: the whole product is exactly zero.
      out.value = Complex(0.0);
      out.err_estimate = 0.0;
      out.terms_used = k + 1;
      out.converged = true;
      return out;
    }
    if (std::abs(factor) < cfg.ill_cond_guard) {
      // Not exactly zero but close enough that relative accuracy is gone.
      fail(denominator ? ErrorKind::DivisionByVanishingFactor : ErrorKind::IllConditioned,
           describe_factor(a, q, k, factor));
    }
    acc *= factor;
    c *= q;
  }

  Real rem = std::abs(c) / (1.0 - qa);  // bound on the log of the dropped tail
  out.value = acc;
  out.err_estimate = 2.0 * rem * (std::abs(acc) + 1.0);
  out.terms_used = k;
  out.converged = true;
  return out;
}

LogProduct log_qpoch(Complex c, Complex q, Real tol) {
  Real qa = std::abs(q);
  if (qa >= 1.0) fail(ErrorKind::DomainViolation, "log_qpoch needs |q| < 1");
  LogProduct out;
  const Real target = 0.25 * tol * (1.0 - qa);
  long k = 0;
  while (std::abs(c) >= target) {
    Complex factor = Complex(1.0) - c;
    if (factor == Complex(0.0)) {
      out.zero = true;
      return out;
    }
    out.log += std::log(factor);
    c *= q;
    if (++k > 2000000) fail(ErrorKind::BudgetExceeded, "log_qpoch did not settle");
  }
  return out;
}

LogProduct log_qpoch_ratio(Complex cn, Complex cd, Complex q, Real tol, Real guard) {
  Real qa = std::abs(q);
  if (qa >= 1.0) fail(ErrorKind::DomainViolation, "log_qpoch_ratio needs |q| < 1");
  LogProduct out;
  const Complex cd0 = cd;
  const Real target = 0.25 * tol * (1.0 - qa);
  long k = 0;
  while (std::abs(cn) >= target || std::abs(cd) >= target) {
    Complex fn = Complex(1.0) - cn;
    Complex fd = Complex(1.0) - cd;
    if (std::abs(fd) < guard || fd == Complex(0.0))
      fail(ErrorKind::DivisionByVanishingFactor, describe_factor(cd0, q, k, fd));
    if (fn == Complex(0.0)) {
      out.zero = true;
      return out;
    }
    out.log += std::log(fn / fd);
    cn *= q;
    cd *= q;
    if (++k > 2000000) fail(ErrorKind::BudgetExceeded, "log_qpoch_ratio did not settle");
  }
  return out;
}

LogProduct finite_ratio_log(std::span<const PochPair> pairs, Complex q, long n, Real guard) {
  LogProduct out;
  if (n == 0) return out;
  if (n > 0) {
    for (const PochPair& pr : pairs) {
      Complex cn = pr.num, cd = pr.den;
      for (long k = 0; k < n; ++k) {
        Complex fn = Complex(1.0) - cn;
        Complex fd = Complex(1.0) - cd;
        if (std::abs(fd) < guard || fd == Complex(0.0))
          fail(ErrorKind::DivisionByVanishingFactor, describe_factor(pr.den, q, k, fd));
        if (fn == Complex(0.0)) {
          out.zero = true;
          return out;
        }
        out.log += std::log(fn / fd);
        cn *= q;
        cd *= q;
      }
    }
    return out;
  }
  // (x;q)_{-m} = 1/((x q^{-m};q)_m): the num arguments now generate dividing
  // factors and vice versa.
  long m = -n;
  for (const PochPair& pr : pairs) {
    Complex cn = pr.num, cd = pr.den;
    for (long k = 1; k <= m; ++k) {
      cn /= q;
      cd /= q;
      Complex fn = Complex(1.0) - cd;  // multiplies
      Complex fd = Complex(1.0) - cn;  // divides
      if (std::abs(fd) < guard || fd == Complex(0.0))
        fail(ErrorKind::DivisionByVanishingFactor, describe_factor(pr.num, q, -k, fd));
      if (fn == Complex(0.0)) {
        out.zero = true;
        return out;
      }
      out.log += std::log(fn / fd);
    }
  }
  return out;
}

SeriesEvaluation qpoch_multi(std::span<const Complex> args, Complex q, const EvalConfig& cfg,
                             bool denominator) {
  SeriesEvaluation out;
  out.value = Complex(1.0);
  out.converged = true;
  Real rel_err_sq = 0.0;
  for (Complex a : args) {
    SeriesEvaluation one = qpoch_infinite(a, q, cfg, denominator);
    if (one.value == Complex(0.0)) {
      // Exact zero wins outright; the error of the other factors is moot.
      one.terms_used += out.terms_used;
      return one;
    }
    Real r = one.err_estimate / (std::abs(one.value) + 1.0);
    rel_err_sq += r * r;
    out.value *= one.value;
    out.terms_used += one.terms_used;
  }
  out.err_estimate = std::sqrt(rel_err_sq) * (std::abs(out.value) + 1.0);
  return out;
}

}  // namespace qsf
