#include "qsf/identities.hpp"

#include <algorithm>
#include <cmath>

#include "qsf/errors.hpp"

namespace qsf {

const IdentityDescriptor& find_identity(const std::string& id) {
  for (const IdentityDescriptor& d : registry())
    if (d.id == id) return d;
  fail(ErrorKind::UnknownIdentity, "no registered identity named '" + id + "'");
}

EvalConfig tuned_config(const IdentityDescriptor& d, EvalConfig base) {
  if (d.tune) d.tune(base);
  base.validate();
  return base;
}

CheckResult check_point(const IdentityDescriptor& d, const Point& supplied, const EvalConfig& cfg,
                        Real tol) {
  CheckResult r;
  r.identity = d.id;
  r.tol = tol > 0.0 ? tol : d.default_tol;

  Point pt = supplied;
  for (const auto& [k, v] : d.defaults)
    if (!pt.count(k)) pt[k] = v;
  r.point = pt;

  try {
    for (const std::string& name : d.params)
      if (!pt.count(name))
        fail(ErrorKind::ConstraintViolation, d.id + ": missing parameter '" + name + "'");
    for (const auto& [k, v] : pt) {
      (void)v;
      if (std::find(d.params.begin(), d.params.end(), k) == d.params.end())
        fail(ErrorKind::ConstraintViolation, d.id + ": unknown parameter '" + k + "'");
    }
    d.admissible(pt);
    Sides s = d.eval(pt, cfg);
    r.lhs = s.lhs;
    r.rhs = s.rhs;
    r.terms = s.terms;
    r.nodes = s.nodes;
    r.notes = s.note;
    r.abs_err = std::abs(s.lhs - s.rhs);
    Real scale = std::max({std::abs(s.lhs), std::abs(s.rhs), s.scale, 1e-300});
    r.rel_err = r.abs_err / scale;
    r.pass = r.rel_err <= r.tol;
  } catch (const Error& e) {
    r.errored = true;
    r.pass = false;
    r.notes = e.what();
  }
  return r;
}

}  // namespace qsf
