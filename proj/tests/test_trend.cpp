#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qsf/config.hpp"
#include "qsf/errors.hpp"
#include "qsf/report.hpp"
#include "qsf/trend.hpp"

using namespace qsf;

namespace {

EvalConfig base() {
  EvalConfig cfg;
  cfg.validate();
  return cfg;
}

}  // namespace

TEST_CASE("the three limit families are registered in order") {
  const auto& fams = trend_families();
  REQUIRE(fams.size() == 3);
  CHECK(fams[0] == "sn_to_askey");
  CHECK(fams[1] == "alpha_psi_to_qbeta");
  CHECK(fams[2] == "third_ext_p_to_q");
}

TEST_CASE("refined lattice sum approaches the integral limit") {
  TrendReport rep = run_trend("sn_to_askey", base());
  CHECK(rep.threshold == 1e-3);
  CHECK(rep.pass);
  CHECK(rep.final_gap < 1e-6);
  CHECK(!rep.steps.empty());
}

TEST_CASE("interpolated bilateral sum approaches its integral limit") {
  TrendReport rep = run_trend("alpha_psi_to_qbeta", base());
  CHECK(rep.threshold == 1e-6);
  CHECK(rep.pass);
  CHECK(rep.final_gap < 1e-9);
}

TEST_CASE("two-base kernel merges into the single-base series") {
  TrendReport rep = run_trend("third_ext_p_to_q", base());
  CHECK(rep.threshold == 0.02);
  CHECK(rep.pass);
  REQUIRE(rep.steps.size() == 5);
  CHECK(rep.steps.front().control == 0.3);
  CHECK(rep.steps.back().control == 0.499);
  for (std::size_t i = 1; i < rep.steps.size(); ++i)
    CHECK(rep.steps[i].gap < rep.steps[i - 1].gap);
  CHECK(std::abs(rep.limit - Complex(0.012656961315428783)) < 1e-9);
  CHECK(rep.final_gap < 0.02);
}

TEST_CASE("unknown family names are rejected") {
  bool threw = false;
  try {
    (void)run_trend("no_such_family", base());
  } catch (const Error& e) {
    threw = true;
    CHECK(e.kind() == ErrorKind::UnknownIdentity);
  }
  CHECK(threw);
}

TEST_CASE("trend reports serialize deterministically with a fixed layout") {
  TrendReport rep = run_trend("third_ext_p_to_q", base());
  ordered_json j = trend_to_json(rep);
  CHECK(j["family"] == "third_ext_p_to_q");
  CHECK(j["limit"].is_array());
  CHECK(j["steps"].size() == 5);
  CHECK(j["steps"][0].contains("control"));
  CHECK(j["steps"][0].contains("value"));
  CHECK(j["steps"][0].contains("gap"));
  CHECK(j["pass"] == true);
  CHECK(j.contains("threshold"));
  CHECK(j.contains("final_gap"));
  CHECK(j.contains("notes"));

  TrendReport again = run_trend("third_ext_p_to_q", base());
  CHECK(trend_to_json(again).dump(2) == j.dump(2));
}
