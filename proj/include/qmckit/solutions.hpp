#pragma once

#include <optional>
#include <string>

#include "qmckit/variant.hpp"

namespace qmckit {

enum class Family {
  YAlpha1, YAlpha2, YLambda,
  YBeta1, YBeta2, YX,
  A1_1, A1_5, A1_9, A2_2, A2_6, A2_10,
  F32, F33, F34, F35, F36, F37,
  F32Check, F33Check, F34Check, F35Check, F36Check, F37Check,
  GQAppell,
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// A solution family bound to its parameters. GQAppell carries VariantParams;
/// the check-variants evaluate the base formula at beta1 <-> beta2.
struct SolutionFamily {
  Family tag;
  QParams params;
  std::optional<VariantParams> vparams;
};

/// Convergence condition of the family's series at x, plus pole avoidance
/// (every denominator Pochhammer factor stays out of a 1e-8 guard band).
bool in_domain(const SolutionFamily& fam, cx x);

/// Value of the family's closed form at x.
cx eval_solution(const SolutionFamily& fam, cx x, const Truncation& t);

/// The q-Appell double-series solution of the variant equation,
///   x^{-k1} Phi-style double sum in (q^{l1+1/2} t1/x, q^{l2+1/2} t2/x).
cx eval_qappell_solution(const VariantParams& vp, cx x, const Truncation& t);

/// True when the family solves the nonhomogeneous equation (the alpha/lambda
/// specializations); the rest solve the homogeneous one.
bool is_nonhomogeneous_family(Family f);

}  // namespace qmckit
