#include "rsi/report.hpp"

#include <cmath>
#include <cstdio>

namespace rsi {

std::string json_number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    auto c = static_cast<unsigned char>(ch);
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

namespace {

std::string params_json(const ModelParams& p) {
  return "{\"g\": " + json_number(p.g) + ", \"beta\": " + json_number(p.beta) +
         ", \"r\": " + json_number(p.r) + ", \"a\": " + json_number(p.a) +
         ", \"m0\": " + json_number(p.m0) + "}";
}

std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string bool_json(bool b) { return b ? "true" : "false"; }

void result_json(std::string& out, const ResidualReport& r, bool timing) {
  const IdentityCase& c = r.identity;
  std::string randomized;
  auto flag = [&](bool on, const char* name) {
    if (!on) return;
    if (!randomized.empty()) randomized += ", ";
    randomized += json_string(name);
  };
  flag(c.random_g, "g");
  flag(c.random_beta, "beta");
  flag(c.random_a, "a");

  out += "    {\n";
  out += "      \"identity\": " + json_string(to_string(c.id)) + ",\n";
  out += "      \"case\": " + json_string(to_string(c.kase)) + ",\n";
  out += "      \"sign\": " + (c.sign == 0 ? std::string("null") : std::to_string(c.sign)) + ",\n";
  out += "      \"config\": " + json_string(c.describe()) + ",\n";
  out += "      \"params\": " + params_json(c.params) + ",\n";
  out += "      \"randomized\": [" + randomized + "],\n";
  out += "      \"expect_fail\": " + bool_json(c.expect_fail) + ",\n";
  out += "      \"max_rel_residual\": " + json_number(r.max_rel_residual) + ",\n";
  out += "      \"tolerance\": " + json_number(c.tolerance) + ",\n";
  out += "      \"passed\": " + bool_json(r.passed) + ",\n";
  out += "      \"skipped\": " + bool_json(r.skipped) + ",\n";
  out += "      \"reason\": " + json_string(r.reason) + ",\n";
  out += "      \"samples\": " + std::to_string(r.samples.size()) + ",\n";
  out += "      \"rejected\": " + std::to_string(r.rejected) + ",\n";
  out += "      \"runtime_ms\": " + (timing ? json_number(r.runtime_ms) : std::string("null")) + ",\n";
  out += "      \"measured_constants\": {";
  for (std::size_t i = 0; i < r.measured_constants.size(); ++i) {
    if (i) out += ", ";
    out += json_string(r.measured_constants[i].first) + ": " +
           json_number(r.measured_constants[i].second);
  }
  out += "},\n";
  out += "      \"residuals\": [";
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    const auto& s = r.samples[i];
    out += i ? ", " : "";
    out += "[" + json_string(hex64(s.digest)) + ", " + json_number(s.abs_residual) + ", " +
           json_number(s.scale) + "]";
  }
  out += "]\n";
  out += "    }";
}

}  // namespace

std::string render_json(const ReportHeader& header, const std::vector<ResidualReport>& results) {
  std::string out = "{\n";
  out += "  \"version\": " + json_string(kReportVersion) + ",\n";
  out += "  \"seed\": " + std::to_string(header.seed) + ",\n";
  out += "  \"params\": " + params_json(header.params) + ",\n";
  out += "  \"numerics\": {\"truncation_L\": " + std::to_string(header.numerics.truncation_L) +
         ", \"quad_abs_tol\": " + json_number(header.numerics.quad_abs_tol) +
         ", \"fd_step\": " + json_number(header.numerics.fd_step) + "},\n";
  out += "  \"results\": [";
  for (std::size_t i = 0; i < results.size(); ++i) {
    out += i ? ",\n" : "\n";
    result_json(out, results[i], header.timing);
  }
  out += results.empty() ? "]\n" : "\n  ]\n";
  out += "}\n";
  return out;
}

std::string render_text(const std::vector<ResidualReport>& results) {
  std::string out;
  int pass = 0, fail = 0, skip = 0;
  char buf[512];
  for (const auto& r : results) {
    const IdentityCase& c = r.identity;
    const char* status = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
    if (r.skipped) ++skip;
    else if (r.passed) ++pass;
    else ++fail;
    std::snprintf(buf, sizeof buf, "%-4s %-24s %-10s %2s %s%-10.3e tol=%-8.1e %s", status,
                  std::string(to_string(c.id)).c_str(), std::string(to_string(c.kase)).c_str(),
                  c.sign > 0 ? "+" : (c.sign < 0 ? "-" : ""), c.expect_fail ? "neg " : "",
                  r.max_rel_residual, c.tolerance, c.describe().c_str());
    out += buf;
    if (!r.reason.empty()) out += "  [" + r.reason + "]";
    out += '\n';
  }
  std::snprintf(buf, sizeof buf, "%d passed, %d failed, %d skipped\n", pass, fail, skip);
  return out + buf;
}

bool all_passed(const std::vector<ResidualReport>& results) {
  for (const auto& r : results)
    if (!r.skipped && !r.passed) return false;
  return true;
}

}  // namespace rsi
