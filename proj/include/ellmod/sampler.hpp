#pragma once

#include "ellmod/point.hpp"
#include "ellmod/types.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace ellmod {

// splitmix64. Chosen because it is trivially portable: two runs with the same
// seed produce identical points on any platform, which makes reports
// reproducible byte for byte.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Log-uniform on [lo, hi], lo > 0. Spreads samples evenly across scales.
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  // Uniform integer in [lo, hi] inclusive. The ranges used here are tiny
  // relative to 2^64, so modulo bias is negligible.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + std::int64_t(next() % std::uint64_t(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

// FUNDAMENTAL draws z = u + w s with (u, w) uniform in the unit cell, so z
// lies in the fundamental domain of the fiber lattice. BOX draws Re z and
// Im z uniformly from the real range, useful for exercising the cover away
// from the fundamental domain.
enum class ZMode { FUNDAMENTAL, BOX };

struct SamplerConfig {
  std::uint64_t seed = 0;
  int samples = 1000;
  double re_lo = -2.0;  // range of Re alpha, Re s (and Re z in BOX mode)
  double re_hi = 2.0;
  double im_lo = 0.1;   // range of Im alpha, Im s, log-uniform
  double im_hi = 5.0;
  ZMode z_mode = ZMode::FUNDAMENTAL;
};

// Draw order per point, fixed as part of the reproducibility contract:
// Re alpha, Im alpha, Re s, Im s, then the two z draws. Every point consumes
// exactly six draws in both z modes.
inline std::vector<TotalSpacePoint> sample_points(const SamplerConfig& cfg) {
  if (cfg.samples < 1) throw ConfigError("sample_points: samples must be >= 1");
  if (!(cfg.im_lo > 0.0)) throw ConfigError("sample_points: im range must be positive");
  if (!(cfg.im_hi >= cfg.im_lo)) throw ConfigError("sample_points: im range is empty");
  if (!(cfg.re_hi >= cfg.re_lo)) throw ConfigError("sample_points: re range is empty");

  SplitMix64 rng(cfg.seed);
  std::vector<TotalSpacePoint> pts;
  pts.reserve(std::size_t(cfg.samples));
  for (int i = 0; i < cfg.samples; ++i) {
    const double re_a = rng.uniform(cfg.re_lo, cfg.re_hi);
    const double im_a = rng.log_uniform(cfg.im_lo, cfg.im_hi);
    const double re_s = rng.uniform(cfg.re_lo, cfg.re_hi);
    const double im_s = rng.log_uniform(cfg.im_lo, cfg.im_hi);
    const Complex alpha(re_a, im_a);
    const Complex s(re_s, im_s);
    Complex z;
    if (cfg.z_mode == ZMode::FUNDAMENTAL) {
      const double u = rng.uniform01();
      const double w = rng.uniform01();
      z = u + w * s;
    } else {
      const double zx = rng.uniform(cfg.re_lo, cfg.re_hi);
      const double zy = rng.uniform(cfg.re_lo, cfg.re_hi);
      z = Complex(zx, zy);
    }
    pts.push_back(make_point(z, alpha, s));
  }
  return pts;
}

}  // namespace ellmod
