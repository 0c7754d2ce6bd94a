#include "ellmod/report.hpp"

#include <json.hpp>

#include <cstdio>

namespace ellmod {

namespace {

// Fixed-width text rendering, meant for terminals. %.17g keeps text output
// reproducible too, if a little noisy.
std::string format_text(const VerificationReport& r) {
  char buf[512];
  std::string out;
  std::snprintf(buf, sizeof(buf), "suite=%s pass=%s max_error=%.17g tolerance=%.17g seed=%llu samples=%d\n",
                r.suite.c_str(), r.pass ? "yes" : "NO", r.max_error, r.tolerance,
                static_cast<unsigned long long>(r.seed), r.samples);
  out += buf;
  for (const Witness& w : r.witnesses) {
    std::snprintf(buf, sizeof(buf),
                  "  witness value=%.17g at z=%.17g%+.17gi alpha=%.17g%+.17gi s=%.17g%+.17gi\n",
                  w.value, w.point[0], w.point[1], w.point[2], w.point[3], w.point[4],
                  w.point[5]);
    out += buf;
  }
  return out;
}

}  // namespace

std::string emit_report(const VerificationReport& r, ReportFormat format) {
  if (format == ReportFormat::TEXT) return format_text(r);

  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["tolerance"] = r.tolerance;
  j["max_error"] = r.max_error;
  j["pass"] = r.pass;
  nlohmann::ordered_json ws = nlohmann::ordered_json::array();
  for (const Witness& w : r.witnesses) {
    nlohmann::ordered_json jw;
    jw["point"] = w.point;
    jw["value"] = w.value;
    ws.push_back(std::move(jw));
  }
  j["witnesses"] = std::move(ws);
  return j.dump() + "\n";
}

VerificationReport parse_report(const std::string& json_line) {
  const nlohmann::json j = nlohmann::json::parse(json_line);
  VerificationReport r;
  r.suite = j.at("suite").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.samples = j.at("samples").get<int>();
  r.tolerance = j.at("tolerance").get<double>();
  r.max_error = j.at("max_error").get<double>();
  r.pass = j.at("pass").get<bool>();
  for (const auto& jw : j.at("witnesses")) {
    Witness w;
    w.point = jw.at("point").get<std::array<double, 6>>();
    w.value = jw.at("value").get<double>();
    r.witnesses.push_back(w);
  }
  return r;
}

}  // namespace ellmod
