#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "qmckit/variant.hpp"

namespace qmckit {

/// Run-wide configuration of the verification harness.
struct RunConfig {
  std::uint64_t seed = 7;
  double q_min = 0.2, q_max = 0.8;
  double exp_min = -0.2, exp_max = 0.9;  // window for lambda
  int samples_per_relation = 20;
  Truncation truncation{1e-12, 20000, 5};
  std::string output_dir = ".";

  void validate() const {
    if (!(q_min > 0.0) || !(q_max < 1.0) || q_min > q_max)
      throw Error(Errc::ConfigError, "q_range must lie inside (0,1)");
    if (samples_per_relation < 1)
      throw Error(Errc::ConfigError, "samples_per_relation must be >= 1");
    if (exp_min > exp_max) throw Error(Errc::ConfigError, "bad exponent range");
    truncation.validate();
  }
};

/// splitmix64 stream; uniform doubles are built from the top 53 bits so the
/// values do not depend on the standard library's distribution code.
struct Rng {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
};

/// Sample-stream RNG keyed by (seed, tag, index); identical regardless of
/// evaluation order or thread count.
Rng make_rng(std::uint64_t seed, std::string_view tag, std::uint64_t index);

/// Random admissible weight parameters: real q in the configured range,
/// real positive alphas/betas with separation, lambda in the exponent window
/// with lambda - mu' in [0.3, 0.7] (so the beta/x families converge and the
/// Appendix A lambda < 1 families stay alive).
QParams sample_qparams(Rng& rng, const RunConfig& cfg);

/// Random variant parameters whose Prop 2.1 image is admissible.
VariantParams sample_variant_params(Rng& rng, const RunConfig& cfg);

/// Positive evaluation point, log-uniform in [lo, hi].
cx sample_x(Rng& rng, double lo = 0.6, double hi = 2.6);

}  // namespace qmckit
