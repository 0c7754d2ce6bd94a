#pragma once

#include "ellmod/report.hpp"
#include "ellmod/sampler.hpp"

#include <string>
#include <vector>

namespace ellmod {

// Keeps the running maximum and the five worst witnesses of a per-point
// quantity. Selection orders by (value descending, insertion index ascending),
// so the result does not depend on the order in which points are fed in.
class WitnessAggregator {
 public:
  void add(int index, const std::array<double, 6>& point, double value);

  double max_value() const { return max_value_; }
  std::vector<Witness> witnesses() const;  // worst first, at most five

  static constexpr int kMaxWitnesses = 5;

 private:
  struct Entry {
    double value;
    int index;
    std::array<double, 6> point;
  };
  std::vector<Entry> worst_;
  double max_value_ = 0.0;
};

// Names of all verification suites, in canonical execution order.
const std::vector<std::string>& suite_names();

// Default tolerance a suite runs at when no override is given.
// Throws UnknownSuiteError for names not in the registry.
double default_tolerance(const std::string& suite);

// Run one suite over the sample set described by cfg. The per-suite semantics:
// every suite computes a per-point error, reports the maximum and the five
// worst points, and passes when max_error <= tolerance. Two suites deviate:
//   non-kahler-total passes when the closed-form coefficient check stays
//     within tolerance AND the recorded defect witnesses exceed 0.09;
//   mirror-nonequivariance is an existence check and passes when the largest
//     commutator displacement exceeds the tolerance (default 1e-3).
VerificationReport run_suite(const std::string& suite, const SamplerConfig& cfg, double tolerance);

// Same, at the suite's default tolerance.
VerificationReport run_suite(const std::string& suite, const SamplerConfig& cfg);

}  // namespace ellmod
