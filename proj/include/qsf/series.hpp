#pragma once

#include <functional>
#include <string>

#include "qsf/config.hpp"
#include "qsf/scalar.hpp"

namespace qsf {

// A term source indexed over the integers (bilateral) or the naturals
// (unilateral). term(n) must be a pure function of n; the engine decides which
// indices to visit and in what order.
struct TermGenerator {
  std::function<Complex(long)> term;
  bool bilateral = true;
  std::string name;  // shows up in error messages and diagnostics
};

// SeriesEvaluation plus the convergence diagnostics of the bilateral engine.
// max_partial is the largest partial-sum modulus seen on the way; identities
// whose two sides cancel to zero are judged against this scale rather than the
// (vanishing) final value.
struct SumOutcome : SeriesEvaluation {
  Real tail_ratio_pos = 0.0;
  Real tail_ratio_neg = 0.0;
  Real max_partial = 0.0;
};

// Sums t(0) + [t(1) + t(-1)] + [t(2) + t(-2)] + ... symmetrically outward.
// Stops at the first K where, for four consecutive steps, both frontier terms
// are small against the running sum and the geometric tail bounds
// |t(+-K)| r / (1 - r) (r the local term ratio, required < 1) together stay
// under a quarter of the stopping threshold rel_tol * (|S| + 1). The reported
// err_estimate doubles the final tail bound: for slowly decaying constant-sign
// tails the local-ratio bound can undershoot the true remainder by a modest
// factor, and doubling keeps the converged guarantee honest for every term
// family this library generates (checked property-style in the tests).
// Raises NoDecay when max_terms runs out before the rule fires; the message
// says whether terms were still shrinking (budget too small) or genuinely not
// decaying (parameters outside the convergence region).
SumOutcome sum_bilateral(const TermGenerator& gen, const EvalConfig& cfg);

// Same contract over n >= 0 only.
SumOutcome sum_unilateral(const TermGenerator& gen, const EvalConfig& cfg);

}  // namespace qsf
