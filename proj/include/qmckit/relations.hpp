#pragma once

#include <span>
#include <vector>

#include "qmckit/coefficients.hpp"
#include "qmckit/sampler.hpp"
#include "qmckit/solutions.hpp"

namespace qmckit {

struct RelationReport {
  std::string relation_id;
  int samples = 0;
  double max_rel_residual = 0.0;
  double tolerance = 1e-8;
  int rejected = 0;  // inadmissible draws skipped by the sampler

  struct Failure {
    std::string params;
    cx x{};
    std::string reason;
  };
  std::vector<Failure> failures;

  bool passed() const {
    return failures.empty() && samples > 0 && max_rel_residual <= tolerance;
  }
  void absorb(double residual) {
    ++samples;
    if (residual > max_rel_residual) max_rel_residual = residual;
  }
  void merge(const RelationReport& o);
};

/// |f(qx) - f(x)| <= tol (|f(x)| + eps).
bool check_pseudo_constant(const std::function<cx(cx)>& f, cx x, cx q, double tol);

/// Relative gaps of the Gasper-Rahman / Andrews transformation formulas,
/// |lhs - rhs| / (|lhs| + |rhs|). Preconditions are the books' modulus
/// conditions; violations surface as DivergentSeries.
double gr_iii10_check(cx a, cx b, cx c, cx d, cx e, cx q, const Truncation& t);
double gr_333_check(cx a, cx b, cx c, cx d, cx e, cx q, const Truncation& t);
double gr_331_check(cx a, cx b, cx c, cx d, cx e, cx q, const Truncation& t);
double andrews_check(cx a, cx b, cx bp, cx c, cx q, cx y, cx z, const Truncation& t);

/// x^{-k2} y_x equals a constant multiple of the q-Appell solution; the
/// constant is also checked against its closed form.
RelationReport verify_prop31(const VariantParams& vp, std::span<const cx> xs,
                             const Truncation& t);

/// f32 = S1 y_beta2, f32-check = S1-check y_beta1, f35 = S2(x) y_x.
RelationReport verify_prop32(const QParams& p, std::span<const cx> xs,
                             const Truncation& t);

/// The f33 relation and its two building blocks
/// (f32-check = A11 f33 + A12 y2_10, y_beta2 = y2_10 + K63 y_beta1).
RelationReport verify_prop33(const QParams& p, std::span<const cx> xs,
                             const Truncation& t);

/// The corrected f34/f37/f36 relations with the C1..C3 terms, plus the
/// pseudo-constancy of S2 and S5.
RelationReport verify_prop34(const QParams& p, std::span<const cx> xs,
                             const Truncation& t);

/// The nine linear relations; every J/K coefficient used is also required to
/// pass the pseudo-constancy check at 1e-10, and J11 + J12 = 0.
std::vector<RelationReport> verify_theorem41(const QParams& p,
                                             std::span<const cx> xs,
                                             const Truncation& t);

RelationReport verify_corollary42(const QParams& p, std::span<const cx> xs,
                                  const Truncation& t);

/// J13(x) y_x(x) and the six Appendix A families solve the homogeneous
/// equation.
RelationReport verify_remark41(const QParams& p, std::span<const cx> xs,
                               const Truncation& t);

/// Named verification suites driving the ops above over sampled parameters:
/// series, qmc, solutions, props, theorem41, all.
std::vector<RelationReport> run_suite(const std::string& suite, const RunConfig& cfg);

bool suite_known(const std::string& suite);

}  // namespace qmckit
