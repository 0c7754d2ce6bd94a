#pragma once

#include "ellmod/point.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ellmod {

// One offending (or extremal) sample: the six real coordinates of the point
// in the order (x, y, Re alpha, Im alpha, sigma, t), and the per-point value
// of whatever quantity the suite maximizes.
struct Witness {
  std::array<double, 6> point{};
  double value = 0.0;
};

inline std::array<double, 6> to_coords(const TotalSpacePoint& p) {
  return {p.x(), p.y(), p.alpha().real(), p.v(), p.sigma(), p.t()};
}

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  int samples = 0;
  double tolerance = 0.0;
  double max_error = 0.0;
  bool pass = false;
  std::vector<Witness> witnesses;  // at most five, worst first
};

enum class ReportFormat { TEXT, JSON };

// JSON serialization is canonical: fixed key order
//   suite, seed, samples, tolerance, max_error, pass, witnesses
// with witnesses as {point: [6 numbers], value}, shortest round-trip number
// formatting, UTF-8, one line, newline terminated. Two equal reports always
// serialize to identical bytes.
std::string emit_report(const VerificationReport& r, ReportFormat format);

// Inverse of the JSON form, for consumers and round-trip tests.
VerificationReport parse_report(const std::string& json_line);

}  // namespace ellmod
