#include "qsf/errors.hpp"

namespace qsf {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DomainViolation: return "domain violation";
    case ErrorKind::ConstraintViolation: return "constraint violation";
    case ErrorKind::DivisionByVanishingFactor: return "division by vanishing factor";
    case ErrorKind::IllConditioned: return "ill-conditioned product";
    case ErrorKind::IllConditionedContour: return "ill-conditioned contour";
    case ErrorKind::NoDecay: return "no decay within term budget";
    case ErrorKind::NoDecayDetected: return "no decay inside integration window";
    case ErrorKind::BudgetExceeded: return "budget exceeded";
    case ErrorKind::NodeCapExceeded: return "node cap exceeded";
    case ErrorKind::PoleAtNonpositiveInteger: return "pole at nonpositive integer";
    case ErrorKind::SamplerExhausted: return "sampler exhausted";
    case ErrorKind::UnknownIdentity: return "unknown identity";
    case ErrorKind::BadConfig: return "bad configuration";
  }
  return "unknown error";
}

}  // namespace qsf
