#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace qsf {

// All evaluation routines run on this scalar pair. Everything downstream
// (series engine, quadrature, registry) goes through these aliases and the
// helpers below, so swapping in a wider type later means touching this header
// and the few std:: calls it wraps, not the call sites.
using Real = double;
using Complex = std::complex<Real>;

inline constexpr Real kEps = std::numeric_limits<Real>::epsilon();
inline constexpr Real kPi = 3.14159265358979323846264338327950288;

inline Real abs2(Complex z) { return z.real() * z.real() + z.imag() * z.imag(); }

// Principal-branch power z^w, with the usual convention 0^0 = 1 and 0^w = 0
// for w != 0. std::pow already picks the principal branch; the special cases
// avoid nan from log(0).
inline Complex cpow(Complex z, Complex w) {
  if (z == Complex(0.0)) {
    if (w == Complex(0.0)) return Complex(1.0);
    return Complex(0.0);
  }
  return std::pow(z, w);
}

// Integer powers stay exact for exact inputs and cost O(log n).
inline Complex ipow(Complex z, long n) {
  if (n < 0) return Complex(1.0) / ipow(z, -n);
  Complex acc(1.0), base = z;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

// q^{n(n-1)/2} and friends need the triangular exponent as a Real without
// intermediate overflow for |n| up to ~3e9.
inline Real tri(long n) { return 0.5 * static_cast<Real>(n) * static_cast<Real>(n - 1); }

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace qsf
