#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qsf/config.hpp"
#include "qsf/rng.hpp"
#include "qsf/scalar.hpp"

namespace qsf {

// A parameter assignment for one identity check. Integer-valued parameters
// (lattice orders N, exponents m) ride along as complex numbers with zero
// imaginary part. std::map keeps keys sorted, which pins down serialization
// order without any extra bookkeeping.
using Point = std::map<std::string, Complex>;

// What an identity evaluator hands back: both sides, the budget it actually
// spent, and an optional magnitude scale. The scale is the largest partial
// sum (or comparable internal magnitude) seen while evaluating; identities
// whose sides cancel to zero are judged against it instead of against the
// vanishing values themselves. Evaluators that cannot produce a vanishing
// side leave it at zero.
struct Sides {
  Complex lhs{};
  Complex rhs{};
  long terms = 0;
  long nodes = 0;
  Real scale = 0.0;
  std::string note;
};

// One registered identity: how to describe it, sample it, screen a point,
// and evaluate both sides. Descriptors are immutable after registration and
// safe to share across threads.
struct IdentityDescriptor {
  std::string id;
  std::string title;
  std::string anchor;  // the classical name the identity goes by
  std::vector<std::string> params;
  std::string constraints;  // human-readable domain description
  Real default_tol = 1e-9;
  // Values filled in for declared parameters the caller omitted (used by the
  // CLI so the common cross-section of an identity can be checked without
  // spelling out every free parameter).
  Point defaults;
  std::function<Point(Rng&)> draw;
  // Throws ConstraintViolation naming the violated predicate; used both to
  // screen user-supplied points and to reject samples.
  std::function<void(const Point&)> admissible;
  std::function<Sides(const Point&, const EvalConfig&)> eval;
  // Optional per-row budget adjustment (slowly converging rows raise
  // max_terms and loosen the inner stopping target).
  std::function<void(EvalConfig&)> tune;
};

// Outcome of checking one identity at one point. The pass rule folds the
// zero-side floor into one expression:
//   scale   = max(|lhs|, |rhs|, Sides::scale, 1e-300)
//   rel_err = |lhs - rhs| / scale,   pass = rel_err <= tol
// which is equivalent to "relative error <= tol OR absolute error <= tol
// times the largest-partial-sum floor".
struct CheckResult {
  std::string identity;
  std::uint64_t seed = 0;
  Point point;
  Complex lhs{};
  Complex rhs{};
  Real abs_err = 0.0;
  Real rel_err = 0.0;
  Real tol = 0.0;
  bool pass = false;
  long terms = 0;
  long nodes = 0;
  std::string notes;    // evaluator note, or the error text when errored
  bool errored = false; // the point failed to evaluate (constraint or engine)
};

const std::vector<IdentityDescriptor>& registry();

// Throws UnknownIdentity.
const IdentityDescriptor& find_identity(const std::string& id);

// Applies the row's budget adjustments to a base configuration. Callers that
// let users override individual fields apply those overrides after this.
EvalConfig tuned_config(const IdentityDescriptor& d, EvalConfig base);

// Deterministic draw: the point depends only on (d.id, seed, index), not on
// any draw made for another index or another identity. Rejection-samples the
// descriptor's admissibility predicate up to 1000 times, then throws
// SamplerExhausted.
Point sample_point(const IdentityDescriptor& d, std::uint64_t seed, long index);

// Evaluates both sides at the point (after filling defaults and screening
// admissibility) and applies the pass rule above. tol <= 0 means the row's
// default tolerance. Engine errors are captured in the result, not thrown.
CheckResult check_point(const IdentityDescriptor& d, const Point& pt, const EvalConfig& cfg,
                        Real tol);

// count independently sampled checks. workers > 1 evaluates points
// concurrently; results are written by index, so the report is identical
// whatever the worker count.
std::vector<CheckResult> sweep_identity(const IdentityDescriptor& d, std::uint64_t seed,
                                        long count, const EvalConfig& cfg, Real tol,
                                        int workers = 1);

}  // namespace qsf
