#pragma once

// Machine-readable output for verification runs: every record carries the
// sampled point, both side values at full precision, the error split, and the
// budget actually spent, so a run can be replayed or diffed byte for byte.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsf/config.hpp"
#include "qsf/identities.hpp"
#include "qsf/trend.hpp"

namespace qsf {

using ordered_json = nlohmann::ordered_json;

// "re+imi" / "re-imi", no spaces; digits caps the significant digits.
std::string format_complex(Complex v, int digits = 12);

// Full round-trip precision for structured output.
ordered_json complex_to_json(Complex v);

ordered_json check_to_json(const CheckResult& r);

ordered_json report_to_json(const std::vector<CheckResult>& results, const EvalConfig& cfg,
                            std::uint64_t seed, Real tol);

ordered_json trend_to_json(const TrendReport& rep);

}  // namespace qsf
