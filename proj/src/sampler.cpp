#include "qmckit/sampler.hpp"

#include <cmath>

namespace qmckit {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
  Rng r{seed ^ (fnv1a(tag) + 0x9e3779b97f4a7c15ull * (index + 1))};
  r.next();
  r.next();
  return r;
}

QParams sample_qparams(Rng& rng, const RunConfig& cfg) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    double q = rng.uniform(cfg.q_min, cfg.q_max);
    double a1 = rng.log_uniform(0.55, 1.6);
    double a2 = rng.log_uniform(0.55, 1.6);
    if (std::abs(a1 - a2) < 0.12 * std::max(a1, a2)) continue;
    double b1 = rng.log_uniform(0.55, 1.6);
    double lam_lo = std::max(cfg.exp_min, -0.2);
    double lam_hi = std::min(cfg.exp_max, 0.9);
    double lam = rng.uniform(lam_lo, lam_hi);
    double mu = lam - rng.uniform(0.3, 0.7);
    double b2 = std::pow(q, mu) * a1 * a2 / b1;
    if (b2 < 0.2 || b2 > 3.2) continue;
    if (std::abs(b1 - b2) < 0.12 * std::max(b1, b2)) continue;
    try {
      return QParams::make(q, lam, a1, a2, b1, b2);
    } catch (const Error&) {
      continue;
    }
  }
  throw Error(Errc::ConfigError, "could not sample admissible weight parameters");
}

VariantParams sample_variant_params(Rng& rng, const RunConfig& cfg) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    double q = rng.uniform(cfg.q_min, cfg.q_max);
    double h1 = rng.uniform(-0.6, 0.8), h2 = rng.uniform(-0.6, 0.8);
    double l1 = rng.uniform(-0.6, 0.6), l2 = rng.uniform(-0.6, 0.6);
    double k1 = rng.uniform(-0.5, 0.5), k2 = rng.uniform(-0.4, 0.4);
    double t1 = rng.log_uniform(0.6, 1.5), t2 = rng.log_uniform(0.6, 1.5);
    // the mapped parameters must keep the beta/x families convergent
    double lam = (h1 + h2 - l1 - l2 - k1 + k2 + 1.0) / 2.0;
    double mu = -k1 + k2;
    if (lam - mu < 0.3 || lam - mu > 0.75) continue;
    try {
      VariantParams vp = VariantParams::make(q, h1, h2, l1, l2, k1, k2, t1, t2);
      (void)qparams_from_variant(vp);  // rejects degenerate alpha/beta pairs
      return vp;
    } catch (const Error&) {
      continue;
    }
  }
  throw Error(Errc::ConfigError, "could not sample admissible variant parameters");
}

cx sample_x(Rng& rng, double lo, double hi) { return cx(rng.log_uniform(lo, hi)); }

}  // namespace qmckit
