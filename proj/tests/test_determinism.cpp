#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <string>

#include "qsf/config.hpp"
#include "qsf/identities.hpp"
#include "qsf/report.hpp"
#include "qsf/rng.hpp"

using namespace qsf;

TEST_CASE("generator output stream is pinned bit for bit") {
  Rng r(42);
  CHECK(r.next_u64() == 0xbdd732262feb6e95ULL);
  CHECK(r.next_u64() == 0x28efe333b266f103ULL);
  CHECK(r.next_u64() == 0x47526757130f9f52ULL);

  Rng u(1);
  CHECK(u.uniform() == 0.5665615751722809);
  CHECK(u.uniform() == 0.7457817572627011);
}

TEST_CASE("derived draws stay inside their declared ranges") {
  Rng r(7);
  for (int i = 0; i < 500; ++i) {
    Real x = r.uniform(2.0, 5.0);
    CHECK(x >= 2.0);
    CHECK(x < 5.0);
    Real g = r.log_uniform(0.1, 10.0);
    CHECK(g >= 0.1);
    CHECK(g <= 10.0);
    long n = r.uniform_int(-3, 3);
    CHECK(n >= -3);
    CHECK(n <= 3);
    Real a = r.angle_off_axis(0.2);
    CHECK(std::abs(a) >= 0.2);
    CHECK(std::abs(a) <= kPi);
  }
}

TEST_CASE("id folding is stable and separates ids") {
  CHECK(fnv1a("ramanujan_1psi1") == fnv1a("ramanujan_1psi1"));
  CHECK(fnv1a("ramanujan_1psi1") != fnv1a("q_binomial"));
  CHECK(fnv1a("a") != fnv1a("b"));
}

TEST_CASE("repeated sweeps serialize byte for byte") {
  for (const char* id : {"ramanujan_1psi1", "qbeta_1"}) {
    const IdentityDescriptor& d = find_identity(id);
    EvalConfig cfg = tuned_config(d, EvalConfig{});
    auto a = sweep_identity(d, 5, 6, cfg, 0.0);
    auto b = sweep_identity(d, 5, 6, cfg, 0.0);
    CHECK(report_to_json(a, cfg, 5, 0.0).dump(2) == report_to_json(b, cfg, 5, 0.0).dump(2));
  }
}

TEST_CASE("worker count does not change the report") {
  const IdentityDescriptor& d = find_identity("first_extension");
  EvalConfig cfg = tuned_config(d, EvalConfig{});
  auto serial = sweep_identity(d, 3, 8, cfg, 0.0, 1);
  auto parallel = sweep_identity(d, 3, 8, cfg, 0.0, 4);
  CHECK(report_to_json(serial, cfg, 3, 0.0).dump(2) ==
        report_to_json(parallel, cfg, 3, 0.0).dump(2));
}

TEST_CASE("complex values print in the fixed re+imi shape") {
  CHECK(format_complex(Complex(0.5, 0.0)) == "0.5");
  CHECK(format_complex(Complex(0.25, -0.125)) == "0.25-0.125i");
  CHECK(format_complex(Complex(0.0, 1.0)) == "0+1i");
  CHECK(format_complex(Complex(-2.0, 0.3)) == "-2+0.3i");
  // 12 significant digits by default.
  CHECK(format_complex(Complex(1.7724538509055160273, 0.0)) == "1.77245385091");
  CHECK(format_complex(Complex(1.0 / 3.0, 0.0), 6) == "0.333333");
}

TEST_CASE("structured records carry the full check in a fixed layout") {
  const IdentityDescriptor& d = find_identity("q_binomial");
  EvalConfig cfg = tuned_config(d, EvalConfig{});
  Point pt{{"a", Complex(2.0)}, {"q", Complex(0.5)}, {"z", Complex(0.3, 0.1)}};
  CheckResult r = check_point(d, pt, cfg, 0.0);
  REQUIRE(r.pass);

  ordered_json rec = check_to_json(r);
  CHECK(rec["identity"] == "q_binomial");
  CHECK(rec["pass"] == true);
  CHECK(rec["tol"] == 1e-9);
  CHECK(rec["point"]["z"][0] == 0.3);
  CHECK(rec["point"]["z"][1] == 0.1);
  CHECK(rec["lhs"].is_array());
  CHECK(rec["budget"]["terms"].is_number());
  CHECK(!rec.contains("error"));

  auto results = sweep_identity(d, 9, 4, cfg, 0.0);
  ordered_json rep = report_to_json(results, cfg, 9, 0.0);
  CHECK(rep["seed"] == 9);
  CHECK(rep["summary"]["count"] == 4);
  CHECK(rep["summary"]["pass"].get<long>() + rep["summary"]["fail"].get<long>() +
            rep["summary"]["error"].get<long>() ==
        4);
  CHECK(rep["records"].size() == 4);
  CHECK(rep["config"]["rel_tol"] == cfg.rel_tol);
}
