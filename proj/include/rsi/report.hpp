#pragma once

#include <string>
#include <vector>

#include "rsi/model.hpp"
#include "rsi/verify.hpp"

namespace rsi {

inline constexpr const char* kReportVersion = "1.0";

struct ReportHeader {
  std::uint64_t seed = 0;
  ModelParams params{};
  NumericsConfig numerics{};
  bool timing = false;  // runtime_ms is null otherwise, keeping reports byte-identical
};

/// %.17g, with NaN and infinities written as null.
std::string json_number(double v);
std::string json_string(std::string_view s);

/// Full JSON report, keys in a fixed order, terminated by a newline.
std::string render_json(const ReportHeader& header, const std::vector<ResidualReport>& results);

/// One line per result plus a summary line.
std::string render_text(const std::vector<ResidualReport>& results);

/// True iff every non-skipped result passed.
bool all_passed(const std::vector<ResidualReport>& results);

}  // namespace rsi
