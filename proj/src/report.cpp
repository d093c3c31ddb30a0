#include "qsf/report.hpp"

#include <cmath>
#include <cstdio>

namespace qsf {

namespace {

std::string real_to_string(Real x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

}  // namespace

std::string format_complex(Complex v, int digits) {
  std::string re = real_to_string(v.real(), digits);
  if (v.imag() == 0.0) return re;
  Real im = v.imag();
  std::string s = re;
  s += std::signbit(im) ? "-" : "+";
  s += real_to_string(std::abs(im), digits);
  s += "i";
  return s;
}

ordered_json complex_to_json(Complex v) { return ordered_json::array({v.real(), v.imag()}); }

ordered_json check_to_json(const CheckResult& r) {
  ordered_json point = ordered_json::object();
  for (const auto& [k, v] : r.point) point[k] = complex_to_json(v);
  ordered_json rec = ordered_json::object();
  rec["identity"] = r.identity;
  rec["seed"] = r.seed;
  rec["point"] = point;
  rec["lhs"] = complex_to_json(r.lhs);
  rec["rhs"] = complex_to_json(r.rhs);
  rec["abs_err"] = r.abs_err;
  rec["rel_err"] = r.rel_err;
  rec["tol"] = r.tol;
  rec["pass"] = r.pass;
  rec["budget"] = ordered_json{{"terms", r.terms}, {"nodes", r.nodes}};
  rec["notes"] = r.notes;
  if (r.errored) rec["error"] = true;
  return rec;
}

ordered_json report_to_json(const std::vector<CheckResult>& results, const EvalConfig& cfg,
                            std::uint64_t seed, Real tol) {
  long pass = 0, fail = 0, error = 0;
  ordered_json records = ordered_json::array();
  for (const CheckResult& r : results) {
    if (r.errored) ++error;
    else if (r.pass) ++pass;
    else ++fail;
    records.push_back(check_to_json(r));
  }
  ordered_json rep = ordered_json::object();
  rep["config"] = ordered_json{{"rel_tol", cfg.rel_tol},
                               {"max_terms", cfg.max_terms},
                               {"quad_nodes", cfg.quad_nodes},
                               {"quad_node_cap", cfg.quad_node_cap},
                               {"ill_cond_guard", cfg.ill_cond_guard}};
  rep["seed"] = seed;
  rep["tol"] = tol;
  rep["summary"] = ordered_json{{"count", static_cast<long>(results.size())},
                                {"pass", pass},
                                {"fail", fail},
                                {"error", error}};
  rep["records"] = records;
  return rep;
}

ordered_json trend_to_json(const TrendReport& rep) {
  ordered_json steps = ordered_json::array();
  for (const TrendStep& st : rep.steps) {
    steps.push_back(ordered_json{
        {"control", st.control}, {"value", complex_to_json(st.value)}, {"gap", st.gap}});
  }
  ordered_json out = ordered_json::object();
  out["family"] = rep.family;
  out["limit"] = complex_to_json(rep.limit);
  out["steps"] = steps;
  out["final_gap"] = rep.final_gap;
  out["threshold"] = rep.threshold;
  out["pass"] = rep.pass;
  out["notes"] = rep.note;
  return out;
}

}  // namespace qsf
