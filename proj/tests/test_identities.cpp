#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "qsf/config.hpp"
#include "qsf/errors.hpp"
#include "qsf/identities.hpp"
#include "qsf/series.hpp"
#include "qsf/terms.hpp"

using namespace qsf;

namespace {

Real rel(Complex got, Complex want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

CheckResult run(const std::string& id, const Point& pt) {
  const IdentityDescriptor& d = find_identity(id);
  EvalConfig cfg = tuned_config(d, EvalConfig{});
  return check_point(d, pt, cfg, 0.0);
}

}  // namespace

TEST_CASE("registry lists every identity in its published order") {
  static const char* expected[] = {
      "ramanujan_1psi1", "q_binomial",     "first_extension",
      "m_sum",           "product_relation_N", "n2_product_identity",
      "theta_addition_2tau", "landen",     "theta_relation_N",
      "y_identity",      "alpha_psi_sum",  "qbeta_1",
      "qbeta_2",         "bailey_6psi6",   "sn_equals_s1",
      "askey",           "stanton_bibasic", "f_simple_transform",
      "f_y_transform",   "f_two_variable", "f_zeros",
      "f_sqrt_ab",       "euler_cube",     "summation_19",
      "psi11_int_rep",   "third_extension", "dougall_alpha",
      "binomial_alpha",  "binomial_riemann", "sampling",
      "beta_integral_classical"};
  const auto& rows = registry();
  REQUIRE(rows.size() == 31);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].id == expected[i]);

  CHECK(find_identity("sn_equals_s1").params ==
        std::vector<std::string>{"N", "a", "b", "c", "d", "e", "q"});
  CHECK(find_identity("third_extension").params ==
        std::vector<std::string>{"a", "b", "p", "q", "y", "z"});
  CHECK(find_identity("ramanujan_1psi1").default_tol == 1e-9);
  CHECK(find_identity("landen").default_tol == 1e-10);
  CHECK(find_identity("qbeta_1").default_tol == 1e-7);
  CHECK(find_identity("dougall_alpha").default_tol == 1e-8);
}

TEST_CASE("unknown ids are rejected") {
  bool threw = false;
  try {
    (void)find_identity("definitely_not_here");
  } catch (const Error& e) {
    threw = true;
    CHECK(e.kind() == ErrorKind::UnknownIdentity);
  }
  CHECK(threw);
}

TEST_CASE("every row passes a short sweep at its default tolerance") {
  for (const IdentityDescriptor& d : registry()) {
    INFO("row ", d.id);
    EvalConfig cfg = tuned_config(d, EvalConfig{});
    auto results = sweep_identity(d, 11, 3, cfg, 0.0);
    REQUIRE(results.size() == 3);
    for (const CheckResult& r : results) {
      INFO("notes: ", r.notes, "  rel_err ", r.rel_err);
      CHECK(!r.errored);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("bilateral series row reproduces an external reference value") {
  Point pt{{"a", Complex(2.0)}, {"b", Complex(0.3)}, {"q", Complex(0.5)},
           {"z", Complex(0.6, 0.2)}};
  auto r = run("ramanujan_1psi1", pt);
  CHECK(!r.errored);
  CHECK(r.pass);
  CHECK(rel(r.lhs, Complex(-0.0656284826926802621, -0.211842228967246674)) < 5e-10);
}

TEST_CASE("fractional-lattice row reproduces an external reference value") {
  Point pt{{"N", Complex(2.0)}, {"a", Complex(0.5)}, {"b", Complex(0.1)},
           {"q", Complex(0.4)}, {"z", std::polar(0.62, 0.8)}};
  auto r = run("first_extension", pt);
  CHECK(!r.errored);
  CHECK(r.pass);
  CHECK(rel(r.rhs, Complex(15.342677068841355, 26.1650920443057244)) < 5e-10);
}

TEST_CASE("residue-sum row reproduces an external reference value") {
  Point pt{{"a", Complex(0.7)}, {"p", Complex(0.4)}, {"z", Complex(0.5, 0.35)}};
  auto r = run("m_sum", pt);
  CHECK(!r.errored);
  CHECK(r.pass);
  CHECK(rel(r.rhs, Complex(-2.38581212765727087, -3.57307637760203484)) < 5e-10);
}

TEST_CASE("interpolated bilateral row reproduces an external reference value") {
  Point pt{{"N", Complex(1.0)}, {"a", Complex(2.2)}, {"b", Complex(0.25)},
           {"q", Complex(0.5)}, {"x", Complex(-0.9, 0.3)}};
  auto r = run("alpha_psi_sum", pt);
  CHECK(!r.errored);
  CHECK(r.pass);
  CHECK(rel(r.rhs, Complex(0.0684445168086772498, 0.00502647456461048911)) < 5e-10);
}

TEST_CASE("first integral row reproduces an external reference value") {
  Point pt{{"a", Complex(2.5)}, {"b", Complex(0.3)}, {"q", Complex(0.5)}};
  auto r = run("qbeta_1", pt);
  CHECK(!r.errored);
  CHECK(r.pass);
  CHECK(rel(r.rhs, Complex(0.0441612944988675563)) < 1e-8);
}

TEST_CASE("second integral row reproduces an external reference value") {
  Point pt{{"a", Complex(0.4)}, {"b", Complex(2.1)}, {"c", Complex(1.2)},
           {"q", Complex(0.45)}};
  auto r = run("qbeta_2", pt);
  CHECK(!r.errored);
  CHECK(r.pass);
  CHECK(rel(r.rhs, Complex(1.98212732183478758)) < 1e-8);
}

TEST_CASE("well-poised bilateral row reproduces an external reference value") {
  Point pt{{"a", Complex(0.15)}, {"b", Complex(0.33)}, {"c", Complex(0.41)},
           {"d", Complex(0.52)}, {"e", Complex(0.55)}, {"q", Complex(0.48)}};
  auto r = run("bailey_6psi6", pt);
  CHECK(!r.errored);
  CHECK(r.pass);
  CHECK(rel(r.lhs, Complex(443.23105149117744477)) < 5e-10);
  CHECK(rel(r.rhs, Complex(443.23105149117744477)) < 5e-10);
}

TEST_CASE("bibasic summation row reproduces an external reference value") {
  Point pt{{"a", Complex(0.6)}, {"b", Complex(0.45)}, {"p", Complex(0.3)},
           {"q", Complex(0.55)}, {"theta", Complex(0.9)}};
  auto r = run("stanton_bibasic", pt);
  CHECK(!r.errored);
  CHECK(r.pass);
  CHECK(rel(r.lhs, Complex(0.156809288113261279)) < 5e-10);
}

TEST_CASE("series-integral bridge row reproduces an external reference value") {
  Point pt{{"a", Complex(2.5)}, {"b", Complex(0.22)}, {"n", Complex(1.0)},
           {"p", Complex(0.35)}, {"q", Complex(0.6)}, {"y", Complex(0.8)}};
  auto r = run("psi11_int_rep", pt);
  CHECK(!r.errored);
  CHECK(r.pass);
  CHECK(rel(r.lhs, Complex(0.54376481891593109207)) < 1e-8);
  CHECK(rel(r.rhs, Complex(0.54376481891593109207)) < 1e-7);
}

TEST_CASE("gamma-side bilateral row reproduces its closed form") {
  Point pt{{"a", Complex(2.1)}, {"alpha", Complex(1.0)}, {"b", Complex(1.8)},
           {"c", Complex(2.4)}, {"d", Complex(1.9)}};
  auto r = run("dougall_alpha", pt);
  CHECK(!r.errored);
  CHECK(r.pass);
  CHECK(rel(r.rhs, Complex(1.37042370588201867)) < 1e-12);
}

TEST_CASE("stretched binomial row reproduces its closed form") {
  Point pt{{"a", Complex(2.5)}, {"alpha", Complex(0.25)}, {"c", Complex(0.3)},
           {"x", Complex(1.1)}};
  auto r = run("binomial_alpha", pt);
  CHECK(!r.errored);
  CHECK(r.pass);
  CHECK(rel(r.rhs, Complex(0.738530282298156429, 3.72360709769256553)) < 1e-12);
}

TEST_CASE("defaults fill in omitted parameters") {
  // The refined-lattice sum row publishes a default for a; the CLI example
  // cross-section omits it.
  Point pt{{"N", Complex(3.0)}, {"b", Complex(0.3)}, {"c", Complex(0.4)},
           {"d", Complex(0.5)}, {"e", Complex(0.6)}, {"q", Complex(0.5)}};
  auto r = run("sn_equals_s1", pt);
  CHECK(!r.errored);
  CHECK(r.pass);
  REQUIRE(r.point.count("a") == 1);
  CHECK(r.point.at("a") == Complex(0.72));
  CHECK(rel(r.rhs, Complex(0.00177007940500876911)) < 1e-8);
}

TEST_CASE("constraint screens name the violated predicate") {
  {
    Point pt{{"a", Complex(2.0)}, {"b", Complex(0.3)}, {"q", Complex(0.5)},
             {"z", Complex(1.5)}};
    auto r = run("ramanujan_1psi1", pt);
    CHECK(r.errored);
    CHECK(!r.pass);
    CHECK(r.notes.find("convergence ring") != std::string::npos);
  }
  {
    // sqrt(ab) = 0.5 = q sits exactly on the base lattice.
    Point pt{{"a", Complex(0.5)}, {"b", Complex(0.5)}, {"p", Complex(0.3)},
             {"q", Complex(0.5)}};
    auto r = run("f_sqrt_ab", pt);
    CHECK(r.errored);
    CHECK(r.notes.find("lies too close to a power of the base") != std::string::npos);
  }
  {
    // az = 1 makes the product numerator (az; q)_inf vanish.
    Point pt{{"a", Complex(2.0)}, {"q", Complex(0.5)}, {"z", Complex(0.5)}};
    auto r = run("q_binomial", pt);
    CHECK(r.errored);
    CHECK(r.notes.find("a product side would vanish") != std::string::npos);
  }
  {
    // Direct screening throws the typed error.
    const IdentityDescriptor& d = find_identity("ramanujan_1psi1");
    Point pt{{"a", Complex(2.0)}, {"b", Complex(0.3)}, {"q", Complex(0.5)},
             {"z", Complex(1.5)}};
    bool threw = false;
    try {
      d.admissible(pt);
    } catch (const Error& e) {
      threw = true;
      CHECK(e.kind() == ErrorKind::ConstraintViolation);
    }
    CHECK(threw);
  }
}

TEST_CASE("missing and unknown parameters are reported as constraint errors") {
  const IdentityDescriptor& d = find_identity("qbeta_1");
  EvalConfig cfg = tuned_config(d, EvalConfig{});
  {
    Point pt{{"a", Complex(2.5)}, {"b", Complex(0.3)}};
    auto r = check_point(d, pt, cfg, 0.0);
    CHECK(r.errored);
    CHECK(r.notes.find("missing parameter 'q'") != std::string::npos);
  }
  {
    Point pt{{"a", Complex(2.5)}, {"b", Complex(0.3)}, {"q", Complex(0.5)},
             {"zz", Complex(0.1)}};
    auto r = check_point(d, pt, cfg, 0.0);
    CHECK(r.errored);
    CHECK(r.notes.find("unknown parameter 'zz'") != std::string::npos);
  }
}

TEST_CASE("row budget adjustments raise floors but respect larger requests") {
  const IdentityDescriptor& d = find_identity("sampling");
  EvalConfig base;
  EvalConfig cfg = tuned_config(d, base);
  CHECK(cfg.max_terms >= 6000000L);
  CHECK(cfg.rel_tol >= 2e-9);

  EvalConfig big;
  big.max_terms = 20000000L;
  big.rel_tol = 1e-6;
  EvalConfig kept = tuned_config(d, big);
  CHECK(kept.max_terms == 20000000L);
  CHECK(kept.rel_tol == 1e-6);

  // The refined-lattice sum row tightens instead: its values sit orders of
  // magnitude below one and the stopping rule would otherwise go absolute.
  EvalConfig sn = tuned_config(find_identity("sn_equals_s1"), EvalConfig{});
  CHECK(sn.rel_tol <= 1e-13);
}

TEST_CASE("two-base kernel reproduces a reference value and its zero lattice") {
  EvalConfig cfg;
  cfg.validate();
  {
    SumOutcome out =
        sum_bilateral(make_f_terms(Complex(3.0), Complex(0.1), Complex(-0.8, 0.3), 0.2, 0.5, cfg), cfg);
    CHECK(out.converged);
    CHECK(rel(out.value, Complex(1.66753789012445111, -0.0155936489056969654)) < 5e-10);
  }
  {
    // z = q^0 = 1 is a zero of the kernel; the sum collapses far below its
    // largest partial sum.
    SumOutcome out =
        sum_bilateral(make_f_terms(Complex(3.0), Complex(0.1), Complex(1.0), 0.2, 0.5, cfg), cfg);
    CHECK(out.converged);
    CHECK(out.max_partial > 0.5);
    CHECK(std::abs(out.value) < 1e-9 * out.max_partial);
    CHECK(rel(Complex(out.max_partial), Complex(0.70106739)) < 1e-4);
  }
}

TEST_CASE("deterministic sampling is reproducible and always admissible") {
  for (const IdentityDescriptor& d : registry()) {
    INFO("row ", d.id);
    for (long idx : {0L, 7L}) {
      Point p1 = sample_point(d, 99, idx);
      Point p2 = sample_point(d, 99, idx);
      CHECK(p1 == p2);
      CHECK_NOTHROW(d.admissible(p1));
    }
    // A different index or seed moves the draw.
    CHECK(sample_point(d, 99, 0) != sample_point(d, 99, 1));
    CHECK(sample_point(d, 99, 0) != sample_point(d, 100, 0));
  }
}
