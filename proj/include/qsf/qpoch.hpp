#pragma once

#include <span>

#include "qsf/config.hpp"
#include "qsf/scalar.hpp"

namespace qsf {

// Finite product (a;q)_n = prod_{k=0}^{n-1} (1 - a q^k). Negative order uses
// the standard extension (a;q)_{-m} = 1 / ((a q^{-m}; q)_m), which divides by
// factors (1 - a q^{-k}); an exactly vanishing one raises
// DivisionByVanishingFactor and one with modulus below guard raises
// IllConditioned. No constraint on |q| (finite products are polynomial).
Complex qpoch_finite(Complex a, Complex q, long n, Real guard = 1e-8);

// Infinite product (a;q)_inf, |q| < 1 required. An exactly vanishing factor
// (a = q^{-k}) short-circuits to an exact zero with zero error. When the
// result feeds a denominator, set denominator = true: exact zeros then raise
// DivisionByVanishingFactor and near-zeros (below cfg.ill_cond_guard) raise
// IllConditioned instead of silently losing precision.
SeriesEvaluation qpoch_infinite(Complex a, Complex q, const EvalConfig& cfg,
                                bool denominator = false);

// Product of (a_i;q)_inf over the argument list, with per-factor error
// estimates combined in quadrature.
SeriesEvaluation qpoch_multi(std::span<const Complex> args, Complex q, const EvalConfig& cfg,
                             bool denominator = false);

// Log-space product evaluation. Several summands and integrands in this
// library are balanced ratios of q-Pochhammer products whose individual
// factors overflow double range (arguments like q^{1-n}/a grow without bound
// in n) while the ratio stays modest. These helpers accumulate logarithms of
// paired factors so only the combined exponent is ever exponentiated. The
// `zero` flag marks an exactly vanishing numerator factor (the product is an
// exact zero, not a rounding artifact).
struct LogProduct {
  Complex log{};
  bool zero = false;

  LogProduct& operator+=(const LogProduct& o) {
    log += o.log;
    zero = zero || o.zero;
    return *this;
  }
};

// Sum of Ln(1 - c q^k), k >= 0, truncated once |c q^k| drops below
// 0.25 * tol * (1 - |q|).
LogProduct log_qpoch(Complex c, Complex q, Real tol);

// Sum of Ln((1 - cn q^k) / (1 - cd q^k)) over k >= 0. The two arguments must
// grow or shrink together for the pairing to help; every call site pairs a
// numerator argument with the denominator argument of the same asymptotic
// size. Vanishing denominator factors raise DivisionByVanishingFactor (near
// misses under guard included).
LogProduct log_qpoch_ratio(Complex cn, Complex cd, Complex q, Real tol, Real guard);

// Finite-order analogue: sum over pairs of Ln[(num;q)_n / (den;q)_n] for one
// shared integer order n of either sign. Negative orders use
// (x;q)_{-m} = 1/((x q^{-m};q)_m), which swaps which factors divide.
struct PochPair {
  Complex num, den;
};
LogProduct finite_ratio_log(std::span<const PochPair> pairs, Complex q, long n, Real guard);

}  // namespace qsf
