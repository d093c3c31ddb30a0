#pragma once

#include <stdexcept>
#include <string>

namespace qsf {

// Single exception type for the whole library. The kind is machine-checkable
// (the CLI maps it to exit codes, tests assert on it); what() carries the
// human-readable context assembled at the throw site.
enum class ErrorKind {
  DomainViolation,            // parameters outside a convergence region or branch constraint
  ConstraintViolation,        // a sampled/supplied point breaks a registry constraint predicate
  DivisionByVanishingFactor,  // a factor that is divided by is exactly or nearly zero
  IllConditioned,             // a product factor came closer to zero than the configured guard
  IllConditionedContour,      // contour integrand denominator nearly vanishes on the path
  NoDecay,                    // series stopping rule did not fire within the term budget
  NoDecayDetected,            // half-line integrand failed to decay inside the window limit
  BudgetExceeded,             // product/theta term budget exhausted
  NodeCapExceeded,            // quadrature refinement hit the node cap without settling
  PoleAtNonpositiveInteger,   // gamma evaluated exactly at 0, -1, -2, ...
  SamplerExhausted,           // rejection sampling failed to find an admissible point
  UnknownIdentity,            // registry lookup with an id that is not registered
  BadConfig,                  // invalid evaluation or run configuration
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace qsf
