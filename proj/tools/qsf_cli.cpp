// Command-line surface: list the identity registry, evaluate the building
// blocks, verify single points, run seeded sweeps, and drive the limit-trend
// families. Exit codes are a stable contract: 0 pass, 1 fail, 2 error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsf/classical.hpp"
#include "qsf/config.hpp"
#include "qsf/errors.hpp"
#include "qsf/gamma.hpp"
#include "qsf/identities.hpp"
#include "qsf/qpoch.hpp"
#include "qsf/report.hpp"
#include "qsf/series.hpp"
#include "qsf/terms.hpp"
#include "qsf/theta.hpp"
#include "qsf/trend.hpp"

namespace {

using namespace qsf;

// ---- complex literals -------------------------------------------------------

Real parse_real_strict(const std::string& s, const std::string& token) {
  try {
    std::size_t used = 0;
    Real v = std::stod(s, &used);
    if (used != s.size())
      fail(ErrorKind::ConstraintViolation, "trailing characters in number '" + token + "'");
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorKind::ConstraintViolation, "cannot parse number in '" + token + "'");
  }
}

// Accepted forms: "1.5", "-2", "1.5+0.25i", "1.5-0.25i", "0.3i". No spaces.
Complex parse_complex(const std::string& s, const std::string& token) {
  if (s.empty()) fail(ErrorKind::ConstraintViolation, "empty value in '" + token + "'");
  if (s.back() != 'i') return Complex(parse_real_strict(s, token));
  std::string body = s.substr(0, s.size() - 1);
  if (body.empty()) return Complex(0.0, 1.0);
  // Split at the last +/- that is not a leading sign and not part of an
  // exponent; everything before it is the real part.
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return Complex(0.0, parse_real_strict(body, token));
  std::string re = body.substr(0, split);
  std::string im = body.substr(split);  // keeps the sign
  if (im == "+" || im == "-") im += "1";
  return Complex(parse_real_strict(re, token), parse_real_strict(im, token));
}

Point parse_kv(const std::vector<std::string>& tokens) {
  Point pt;
  for (const std::string& t : tokens) {
    std::size_t eq = t.find('=');
    if (eq == std::string::npos || eq == 0)
      fail(ErrorKind::ConstraintViolation, "expected key=value, got '" + t + "'");
    std::string key = t.substr(0, eq);
    if (pt.count(key)) fail(ErrorKind::ConstraintViolation, "duplicate parameter '" + key + "'");
    pt[key] = parse_complex(t.substr(eq + 1), t);
  }
  return pt;
}

// ---- shared run configuration ----------------------------------------------

struct RunFlags {
  Real tol = 0.0;  // 0 means each row's default tolerance
  std::uint64_t seed = 1;
  long count = 10;
  long max_terms = 0;    // 0 keeps the engine default
  long quad_nodes = 0;   // 0 keeps the engine default node cap
  std::string out;
  std::string format = "table";
  int workers = 1;
};

EvalConfig base_config(const RunFlags& f) {
  EvalConfig cfg;
  if (f.max_terms > 0) cfg.max_terms = f.max_terms;
  if (f.quad_nodes > 0) {
    cfg.quad_node_cap = f.quad_nodes;
    if (cfg.quad_node_cap < cfg.quad_nodes) cfg.quad_nodes = 32;
  }
  cfg.validate();
  return cfg;
}

bool structured(const RunFlags& f) { return f.format == "structured"; }

void emit(const RunFlags& f, const ordered_json& doc, const std::string& table_text) {
  if (!f.out.empty()) {
    std::ofstream os(f.out);
    if (!os) fail(ErrorKind::BadConfig, "cannot open output file '" + f.out + "'");
    os << doc.dump(2) << "\n";
  }
  if (structured(f)) {
    if (f.out.empty()) std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << table_text;
  }
}

// ---- eval dispatch ----------------------------------------------------------

struct EvalOutput {
  Complex value{};
  Real err_estimate = -1.0;  // negative: not applicable
  long terms = -1;
  long nodes = -1;
  std::string note;
};

class Args {
 public:
  Args(const std::string& fn, Point pt) : fn_(fn), pt_(std::move(pt)) {}

  Complex c(const char* k) {
    seen_.push_back(k);
    auto it = pt_.find(k);
    if (it == pt_.end())
      fail(ErrorKind::ConstraintViolation,
           "function '" + fn_ + "' needs parameter '" + std::string(k) + "'");
    return it->second;
  }

  Real r(const char* k) {
    Complex v = c(k);
    if (v.imag() != 0.0)
      fail(ErrorKind::ConstraintViolation, "parameter '" + std::string(k) + "' must be real");
    return v.real();
  }

  long i(const char* k) {
    Real x = r(k);
    long n = std::lround(x);
    if (std::abs(x - static_cast<Real>(n)) > 1e-9)
      fail(ErrorKind::ConstraintViolation, "parameter '" + std::string(k) + "' must be an integer");
    return n;
  }

  void done() const {
    for (const auto& [k, v] : pt_) {
      (void)v;
      if (std::find(seen_.begin(), seen_.end(), k) == seen_.end())
        fail(ErrorKind::ConstraintViolation,
             "function '" + fn_ + "' does not take parameter '" + k + "'");
    }
  }

 private:
  std::string fn_;
  Point pt_;
  std::vector<std::string> seen_;
};

EvalOutput from_series(const SeriesEvaluation& e) {
  EvalOutput o;
  o.value = e.value;
  o.err_estimate = e.err_estimate;
  o.terms = e.terms_used;
  return o;
}

EvalOutput from_sum(const SumOutcome& e) {
  EvalOutput o;
  o.value = e.value;
  o.err_estimate = e.err_estimate;
  o.terms = e.terms_used;
  return o;
}

// The four integral evaluators reuse the registry rows so the quadrature
// setup lives in exactly one place; the printed value is the integral side.
EvalOutput from_row_lhs(const char* id, const Point& pt, const EvalConfig& cfg) {
  const IdentityDescriptor& d = find_identity(id);
  Point full = pt;
  for (const auto& [k, v] : d.defaults)
    if (!full.count(k)) full[k] = v;
  d.admissible(full);
  Sides s = d.eval(full, tuned_config(d, cfg));
  EvalOutput o;
  o.value = s.lhs;
  o.terms = s.terms;
  o.nodes = s.nodes;
  o.note = "closed form: " + format_complex(s.rhs);
  return o;
}

EvalOutput run_eval(const std::string& fn, const Point& pt, const EvalConfig& cfg) {
  Args a(fn, pt);
  EvalOutput o;
  if (fn == "qpoch_infinite") {
    o = from_series(qpoch_infinite(a.c("a"), a.c("q"), cfg));
  } else if (fn == "qpoch_finite") {
    o.value = qpoch_finite(a.c("a"), a.c("q"), a.i("n"));
  } else if (fn == "theta") {
    o.value = theta(static_cast<int>(a.i("j")), a.c("z"), a.r("nome"), cfg);
  } else if (fn == "theta1_prime_zero") {
    o.value = Complex(theta1_prime_zero(a.r("nome"), cfg));
  } else if (fn == "gamma") {
    o.value = gamma(a.c("z"));
  } else if (fn == "reciprocal_gamma") {
    o.value = reciprocal_gamma(a.c("z"));
  } else if (fn == "psi11") {
    o = from_sum(sum_bilateral(make_psi11_terms(a.c("a"), a.c("b"), a.c("q"), a.c("z"), cfg), cfg));
  } else if (fn == "q_binomial") {
    o = from_sum(sum_unilateral(make_q_binomial_terms(a.c("a"), a.c("q"), a.c("z"), cfg), cfg));
  } else if (fn == "f_series") {
    o = from_sum(
        sum_bilateral(make_f_terms(a.c("a"), a.c("b"), a.c("z"), a.r("p"), a.r("q"), cfg), cfg));
  } else if (fn == "psi66") {
    o = from_sum(sum_bilateral(
        make_psi66_terms(a.c("a"), a.c("b"), a.c("c"), a.c("d"), a.c("e"), a.r("q"), cfg), cfg));
  } else if (fn == "sn_sum") {
    o = from_sum(sum_bilateral(make_sn_terms(a.c("a"), a.c("b"), a.c("c"), a.c("d"), a.c("e"),
                                             a.r("q"), a.i("N"), cfg),
                               cfg));
  } else if (fn == "stanton_sum") {
    o = from_sum(sum_unilateral(
        make_stanton_terms(a.c("a"), a.c("b"), a.r("theta"), a.r("p"), a.r("q"), cfg), cfg));
  } else if (fn == "msum") {
    o = from_sum(sum_bilateral(make_msum_terms(a.r("a"), a.c("z"), a.r("p"), cfg), cfg));
  } else if (fn == "dougall_sum") {
    o = from_sum(sum_bilateral(
        make_dougall_terms(a.r("a"), a.r("b"), a.r("c"), a.r("d"), a.r("alpha")), cfg));
  } else if (fn == "binomial_sum") {
    o = from_sum(
        sum_bilateral(make_binomial_terms(a.c("a"), a.r("c"), a.r("alpha"), a.r("x")), cfg));
  } else if (fn == "sampling_sum") {
    long kind = a.i("kind");
    BandLimitedTestCase prof = kind == 0 ? sinc_profile() : cos_power_profile(a.r("b"));
    o = from_sum(sum_bilateral(make_sampling_terms(prof, a.r("alpha"), a.r("y")), cfg));
  } else if (fn == "euler_cube") {
    o = from_sum(sum_unilateral(make_euler_cube_terms(a.r("q")), cfg));
  } else if (fn == "qbeta1_integral") {
    a.c("a"), a.c("b"), a.c("q");
    return from_row_lhs("qbeta_1", pt, cfg);
  } else if (fn == "qbeta2_integral") {
    a.c("a"), a.c("b"), a.c("c"), a.c("q");
    return from_row_lhs("qbeta_2", pt, cfg);
  } else if (fn == "askey_integral") {
    a.c("b"), a.c("c"), a.c("d"), a.c("e"), a.c("q");
    return from_row_lhs("askey", pt, cfg);
  } else if (fn == "beta_integral") {
    a.c("a"), a.c("b");
    return from_row_lhs("beta_integral_classical", pt, cfg);
  } else {
    fail(ErrorKind::UnknownIdentity, "unknown eval function '" + fn + "'");
  }
  a.done();
  return o;
}

// ---- printing ---------------------------------------------------------------

std::string point_to_text(const Point& pt) {
  std::string s;
  for (const auto& [k, v] : pt) {
    if (!s.empty()) s += " ";
    s += k + "=" + format_complex(v);
  }
  return s;
}

std::string check_to_text(const CheckResult& r) {
  char buf[256];
  std::string s;
  s += "identity: " + r.identity + "\n";
  s += "point:    " + point_to_text(r.point) + "\n";
  s += "lhs:      " + format_complex(r.lhs) + "\n";
  s += "rhs:      " + format_complex(r.rhs) + "\n";
  std::snprintf(buf, sizeof(buf), "abs_err:  %.3e   rel_err: %.3e   tol: %.1e\n", r.abs_err,
                r.rel_err, r.tol);
  s += buf;
  std::snprintf(buf, sizeof(buf), "budget:   terms=%ld nodes=%ld\n", r.terms, r.nodes);
  s += buf;
  s += "status:   ";
  s += r.errored ? "ERROR" : (r.pass ? "PASS" : "FAIL");
  if (!r.notes.empty()) s += "  (" + r.notes + ")";
  s += "\n";
  return s;
}

std::string trend_to_text(const TrendReport& rep) {
  char buf[256];
  std::string s = "family: " + rep.family + "\n";
  s += "limit:  " + format_complex(rep.limit) + "\n";
  for (const TrendStep& st : rep.steps) {
    std::snprintf(buf, sizeof(buf), "  control=%-8.4g value=%-26s gap=%.3e\n", st.control,
                  format_complex(st.value).c_str(), st.gap);
    s += buf;
  }
  std::snprintf(buf, sizeof(buf), "final_gap: %.3e (threshold %.1e)  %s\n", rep.final_gap,
                rep.threshold, rep.pass ? "PASS" : "FAIL");
  s += buf;
  if (!rep.note.empty()) s += "note: " + rep.note + "\n";
  return s;
}

// ---- subcommand bodies ------------------------------------------------------

int cmd_list(const RunFlags& flags, const std::string& id) {
  const auto& rows = registry();
  if (!id.empty()) {
    const IdentityDescriptor& d = find_identity(id);
    ordered_json j = ordered_json::object();
    j["id"] = d.id;
    j["title"] = d.title;
    j["anchor"] = d.anchor;
    j["params"] = d.params;
    j["constraints"] = d.constraints;
    j["default_tol"] = d.default_tol;
    ordered_json defs = ordered_json::object();
    for (const auto& [k, v] : d.defaults) defs[k] = complex_to_json(v);
    j["defaults"] = defs;
    std::string text;
    text += "id:          " + d.id + "\n";
    text += "title:       " + d.title + "\n";
    text += "anchor:      " + d.anchor + "\n";
    text += "params:      ";
    for (std::size_t i = 0; i < d.params.size(); ++i)
      text += (i ? ", " : "") + d.params[i];
    text += "\n";
    text += "constraints: " + d.constraints + "\n";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1e", d.default_tol);
    text += "default tol: " + std::string(buf) + "\n";
    if (!d.defaults.empty()) text += "defaults:    " + point_to_text(d.defaults) + "\n";
    emit(flags, j, text);
    return 0;
  }
  ordered_json arr = ordered_json::array();
  std::string text;
  for (const IdentityDescriptor& d : rows) {
    ordered_json j = ordered_json::object();
    j["id"] = d.id;
    j["title"] = d.title;
    j["params"] = d.params;
    j["default_tol"] = d.default_tol;
    arr.push_back(j);
    char buf[320];
    std::string params;
    for (std::size_t i = 0; i < d.params.size(); ++i) params += (i ? "," : "") + d.params[i];
    std::snprintf(buf, sizeof(buf), "%-24s %-18s %7.0e  %s\n", d.id.c_str(), params.c_str(),
                  d.default_tol, d.title.c_str());
    text += buf;
  }
  emit(flags, arr, text);
  return 0;
}

int cmd_eval(const RunFlags& flags, const std::string& fn, const std::vector<std::string>& kv) {
  Point pt = parse_kv(kv);
  EvalOutput o = run_eval(fn, pt, base_config(flags));
  ordered_json j = ordered_json::object();
  j["function"] = fn;
  ordered_json jp = ordered_json::object();
  for (const auto& [k, v] : pt) jp[k] = complex_to_json(v);
  j["params"] = jp;
  j["value"] = complex_to_json(o.value);
  std::string text = "value = " + format_complex(o.value) + "\n";
  if (o.err_estimate >= 0.0) {
    j["err_estimate"] = o.err_estimate;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "err_estimate = %.3e\n", o.err_estimate);
    text += buf;
  }
  if (o.terms >= 0) {
    j["terms_used"] = o.terms;
    text += "terms_used = " + std::to_string(o.terms) + "\n";
  }
  if (o.nodes >= 0) {
    j["nodes"] = o.nodes;
    text += "nodes = " + std::to_string(o.nodes) + "\n";
  }
  if (!o.note.empty()) {
    j["note"] = o.note;
    text += o.note + "\n";
  }
  emit(flags, j, text);
  return 0;
}

int cmd_verify(const RunFlags& flags, const std::string& id, const std::vector<std::string>& kv) {
  const IdentityDescriptor& d = find_identity(id);
  Point pt = parse_kv(kv);
  EvalConfig cfg = tuned_config(d, base_config(flags));
  CheckResult r = check_point(d, pt, cfg, flags.tol);
  emit(flags, check_to_json(r), check_to_text(r));
  if (r.errored) return 2;
  return r.pass ? 0 : 1;
}

int cmd_sweep(const RunFlags& flags, const std::vector<std::string>& ids) {
  std::vector<const IdentityDescriptor*> rows;
  if (ids.empty()) {
    for (const IdentityDescriptor& d : registry()) rows.push_back(&d);
  } else {
    for (const std::string& id : ids) rows.push_back(&find_identity(id));
  }
  EvalConfig base = base_config(flags);
  std::vector<CheckResult> all;
  std::string text;
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-24s %6s %6s %6s %6s  %s\n", "identity", "count", "pass",
                "fail", "error", "max rel_err");
  text += buf;
  bool all_pass = true;
  for (const IdentityDescriptor* d : rows) {
    EvalConfig cfg = tuned_config(*d, base);
    std::vector<CheckResult> rs =
        sweep_identity(*d, flags.seed, flags.count, cfg, flags.tol, flags.workers);
    long pass = 0, failed = 0, errored = 0;
    Real worst = 0.0;
    for (const CheckResult& r : rs) {
      if (r.errored) ++errored;
      else if (r.pass) ++pass;
      else ++failed;
      if (!r.errored) worst = std::max(worst, r.rel_err);
      all.push_back(r);
    }
    all_pass = all_pass && errored == 0 && failed == 0;
    std::snprintf(buf, sizeof(buf), "%-24s %6ld %6ld %6ld %6ld  %.3e\n", d->id.c_str(),
                  static_cast<long>(rs.size()), pass, failed, errored, worst);
    text += buf;
  }
  ordered_json rep = report_to_json(all, base, flags.seed, flags.tol);
  emit(flags, rep, text);
  return all_pass ? 0 : 1;
}

int cmd_trend(const RunFlags& flags, const std::string& family) {
  EvalConfig cfg = base_config(flags);
  std::vector<std::string> fams =
      family.empty() ? trend_families() : std::vector<std::string>{family};
  ordered_json arr = ordered_json::array();
  std::string text;
  bool all_pass = true;
  for (const std::string& f : fams) {
    TrendReport rep = run_trend(f, cfg);
    arr.push_back(trend_to_json(rep));
    text += trend_to_text(rep) + "\n";
    all_pass = all_pass && rep.pass;
  }
  emit(flags, fams.size() == 1 ? arr[0] : arr, text);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bilateral q-series, theta, and gamma identity verification toolkit"};
  app.require_subcommand(1);

  RunFlags flags;
  app.add_option("--tol", flags.tol, "pass tolerance; 0 uses each row's default")
      ->envname("QSF_TOL");
  app.add_option("--seed", flags.seed, "sweep seed")->envname("QSF_SEED");
  app.add_option("--count", flags.count, "points per identity in a sweep")->envname("QSF_COUNT");
  app.add_option("--max-terms", flags.max_terms, "series term budget (rows may raise it)")
      ->envname("QSF_MAX_TERMS");
  app.add_option("--quad-nodes", flags.quad_nodes, "quadrature node cap")
      ->envname("QSF_QUAD_NODES");
  app.add_option("--out", flags.out, "write structured output to this file")->envname("QSF_OUT");
  app.add_option("--format", flags.format, "table or structured")
      ->check(CLI::IsMember({"table", "structured"}))
      ->envname("QSF_FORMAT");
  app.add_option("--workers", flags.workers, "sweep evaluation threads (result is independent)")
      ->check(CLI::Range(1, 256))
      ->envname("QSF_WORKERS");
  app.set_config("--config", "", "configuration file with the same keys")->envname("QSF_CONFIG");

  std::string list_id;
  CLI::App* list = app.add_subcommand("list", "show the identity registry");
  list->add_option("--id", list_id, "detail view of one identity");
  list->fallthrough();

  std::string eval_fn;
  std::vector<std::string> eval_kv;
  CLI::App* eval = app.add_subcommand("eval", "evaluate one building-block function");
  eval->add_option("function", eval_fn, "evaluator name")->required();
  eval->add_option("params", eval_kv, "key=value parameters");
  eval->fallthrough();

  std::string verify_id;
  std::vector<std::string> verify_kv;
  CLI::App* verify = app.add_subcommand("verify", "check one identity at one point");
  verify->add_option("id", verify_id, "identity id")->required();
  verify->add_option("params", verify_kv, "key=value parameters");
  verify->fallthrough();

  std::vector<std::string> sweep_ids;
  CLI::App* sweep = app.add_subcommand("sweep", "seeded sweep over sampled points");
  sweep->add_option("ids", sweep_ids, "identity ids (default: all)");
  sweep->fallthrough();

  std::string trend_family;
  CLI::App* trend = app.add_subcommand("trend", "limit-trend study");
  trend->add_option("family", trend_family, "trend family (default: all)");
  trend->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*list) return cmd_list(flags, list_id);
    if (*eval) return cmd_eval(flags, eval_fn, eval_kv);
    if (*verify) return cmd_verify(flags, verify_id, verify_kv);
    if (*sweep) return cmd_sweep(flags, sweep_ids);
    if (*trend) return cmd_trend(flags, trend_family);
  } catch (const qsf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
