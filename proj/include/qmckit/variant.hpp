#pragma once

#include <functional>

#include "qmckit/jackson.hpp"
#include "qmckit/poly.hpp"

namespace qmckit {

/// Parameters of the degree-2 variant equation
///   (x - q^{h1+1/2} t1)(x - q^{h2+1/2} t2) g(x/q)
///   + q^{k1+k2} (x - q^{l1-1/2} t1)(x - q^{l2-1/2} t2) g(qx)
///   - [(q^{k1}+q^{k2}) x^2 + E x + p (q^{1/2}+q^{-1/2}) t1 t2] g(x) = 0.
struct VariantParams {
  cx q;
  cx h1, h2, l1, l2, k1, k2;
  cx t1, t2;

  static VariantParams make(cx q, cx h1, cx h2, cx l1, cx l2, cx k1, cx k2,
                            cx t1, cx t2);

  cx p() const { return cpow(q, (h1 + h2 + l1 + l2 + k1 + k2) / 2.0); }
  cx E() const {
    return -p() * ((cpow(q, -h2) + cpow(q, -l2)) * t1 +
                   (cpow(q, -h1) + cpow(q, -l1)) * t2);
  }
};

/// Fujii-Nobukawa form E_2 f(x) = 0, with B normalized to 1.
struct FNParams {
  cx q;
  cx A, B;
  cx a1, a2, b1, b2;
  cx alpha_exp;  // alpha with q^alpha = A/B * a-b structure
  cx lambda0;
};

/// Three-term scalar q-difference operator with polynomial coefficients:
///   down(x) g(x/q) + up(x) g(qx) + mid(x) g(x) - nonhom(x) = 0.
struct ScalarQDiffEq {
  Poly coeff_down, coeff_up, coeff_mid;
  Poly nonhom;  // zero polynomial for the homogeneous equation

  cx residual(const std::function<cx(cx)>& g, cx x, cx q,
              bool include_nonhom = false) const;
  /// |residual| / (1 + largest coefficient-term magnitude at x).
  double residual_scaled(const std::function<cx(cx)>& g, cx x, cx q,
                         bool include_nonhom = false) const;
};

/// The scalar reduction of the convolved system, Eq. for yhat_1, together
/// with its nonhomogeneous term q(1-q)(1-q^lambda) alpha1/(beta1 beta2) x.
ScalarQDiffEq make_special_eq(const QParams& p);

/// The variant equation at vp as a ScalarQDiffEq.
ScalarQDiffEq make_variant_eq(const VariantParams& vp);

/// The FN equation E_2 as a ScalarQDiffEq.
ScalarQDiffEq make_e2_eq(const FNParams& fp);

cx residual_variant(const std::function<cx(cx)>& g, cx x, const VariantParams& vp);
cx residual_special(const std::function<cx(cx)>& yhat, cx x, const QParams& p,
                    bool nonhomogeneous);
cx residual_e2(const std::function<cx(cx)>& f, cx x, const FNParams& fp);

double residual_variant_scaled(const std::function<cx(cx)>& g, cx x,
                               const VariantParams& vp);
double residual_special_scaled(const std::function<cx(cx)>& yhat, cx x,
                               const QParams& p, bool nonhomogeneous);
double residual_e2_scaled(const std::function<cx(cx)>& f, cx x, const FNParams& fp);

/// Parameter map of the gauge g(x) = x^{-k2} yhat_1(x):
///   alpha1 = q^{-l1+1/2}/t1, alpha2 = q^{-l2+3/2}/t2,
///   lambda = (h1+h2-l1-l2-k1+k2+1)/2,
///   beta_i = q^{lambda-h_i+1/2}/t_i.
QParams qparams_from_variant(const VariantParams& vp);

/// FN parameters in the B = 1 gauge:
///   a_i = q^{lambda+1}/beta_i, A = q^lambda, b1 = A/alpha1, b2 = qA/alpha2,
///   q^alpha = q^lambda alpha1 alpha2/(beta1 beta2).
FNParams fnparams_from_qparams(const QParams& p);

}  // namespace qmckit
