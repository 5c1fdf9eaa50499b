#include "qmckit/variant.hpp"

#include <cmath>

namespace qmckit {

VariantParams VariantParams::make(cx q, cx h1, cx h2, cx l1, cx l2, cx k1, cx k2,
                                  cx t1, cx t2) {
  double m = std::abs(q);
  if (!(m > 0.0) || m >= 1.0)
    throw Error(Errc::ModulusOfQOutOfRange, "need 0 < |q| < 1");
  if (t1 == cx(0.0) || t2 == cx(0.0))
    throw Error(Errc::ZeroArgument, "t1, t2 must be nonzero");
  return VariantParams{q, h1, h2, l1, l2, k1, k2, t1, t2};
}

cx ScalarQDiffEq::residual(const std::function<cx(cx)>& g, cx x, cx q,
                           bool include_nonhom) const {
  cx r = coeff_down.eval(x) * g(x / q) + coeff_up.eval(x) * g(q * x) +
         coeff_mid.eval(x) * g(x);
  if (include_nonhom) r -= nonhom.eval(x);
  return r;
}

double ScalarQDiffEq::residual_scaled(const std::function<cx(cx)>& g, cx x, cx q,
                                      bool include_nonhom) const {
  cx td = coeff_down.eval(x) * g(x / q);
  cx tu = coeff_up.eval(x) * g(q * x);
  cx tm = coeff_mid.eval(x) * g(x);
  cx r = td + tu + tm;
  double scale = std::max({std::abs(td), std::abs(tu), std::abs(tm)});
  if (include_nonhom) {
    cx nh = nonhom.eval(x);
    r -= nh;
    scale = std::max(scale, std::abs(nh));
  }
  return std::abs(r) / (1.0 + scale);
}

namespace {

Poly quadratic_from_roots(cx r1, cx r2, cx lead = cx(1.0)) {
  // lead (x - r1)(x - r2)
  return Poly({lead * r1 * r2, -lead * (r1 + r2), lead});
}

}  // namespace

ScalarQDiffEq make_special_eq(const QParams& p) {
  const cx q = p.q;
  const cx a1 = p.alpha1, a2 = p.alpha2, b1 = p.beta1, b2 = p.beta2;
  const cx ql = p.qpow(p.lambda);
  const cx w = a1 * a2 / (b1 * b2);
  ScalarQDiffEq eq;
  eq.coeff_down = quadratic_from_roots(ql * q / b1, ql * q / b2);
  eq.coeff_up = quadratic_from_roots(cx(1.0) / a1, q / a2, w);
  eq.coeff_mid = Poly({-ql * q * (cx(1.0) + q) / (b1 * b2),
                       q * (cx(1.0) / b1 + cx(1.0) / b2) + ql * (q * a1 + a2) / (b1 * b2),
                       -(w + cx(1.0))});
  eq.nonhom = Poly({cx(0.0), q * (cx(1.0) - q) * (cx(1.0) - ql) * a1 / (b1 * b2)});
  return eq;
}

ScalarQDiffEq make_variant_eq(const VariantParams& vp) {
  const cx q = vp.q;
  const cx half(0.5);
  ScalarQDiffEq eq;
  eq.coeff_down = quadratic_from_roots(cpow(q, vp.h1 + half) * vp.t1,
                                       cpow(q, vp.h2 + half) * vp.t2);
  eq.coeff_up = quadratic_from_roots(cpow(q, vp.l1 - half) * vp.t1,
                                     cpow(q, vp.l2 - half) * vp.t2,
                                     cpow(q, vp.k1 + vp.k2));
  const cx pc = vp.p();
  eq.coeff_mid = Poly({-pc * (cpow(q, half) + cpow(q, -half)) * vp.t1 * vp.t2,
                       -vp.E(), -(cpow(q, vp.k1) + cpow(q, vp.k2))});
  return eq;
}

ScalarQDiffEq make_e2_eq(const FNParams& fp) {
  const cx q = fp.q;
  const cx A = fp.A, B = fp.B;
  const cx qa = cpow(q, fp.alpha_exp);
  ScalarQDiffEq eq;
  eq.coeff_down = quadratic_from_roots(fp.a1 / B, fp.a2 / B);
  eq.coeff_up = quadratic_from_roots(fp.b1 / A, fp.b2 / A, qa * A / B);
  eq.coeff_mid = Poly({-fp.a1 * fp.a2 * (cx(1.0) + q) / (q * B * B),
                       (fp.a1 + fp.a2) / B + qa * (fp.b1 + fp.b2) / B,
                       -(A / B + qa)});
  return eq;
}

cx residual_variant(const std::function<cx(cx)>& g, cx x, const VariantParams& vp) {
  return make_variant_eq(vp).residual(g, x, vp.q);
}

cx residual_special(const std::function<cx(cx)>& yhat, cx x, const QParams& p,
                    bool nonhomogeneous) {
  return make_special_eq(p).residual(yhat, x, p.q, nonhomogeneous);
}

cx residual_e2(const std::function<cx(cx)>& f, cx x, const FNParams& fp) {
  return make_e2_eq(fp).residual(f, x, fp.q);
}

double residual_variant_scaled(const std::function<cx(cx)>& g, cx x,
                               const VariantParams& vp) {
  return make_variant_eq(vp).residual_scaled(g, x, vp.q);
}

double residual_special_scaled(const std::function<cx(cx)>& yhat, cx x,
                               const QParams& p, bool nonhomogeneous) {
  return make_special_eq(p).residual_scaled(yhat, x, p.q, nonhomogeneous);
}

double residual_e2_scaled(const std::function<cx(cx)>& f, cx x, const FNParams& fp) {
  return make_e2_eq(fp).residual_scaled(f, x, fp.q);
}

QParams qparams_from_variant(const VariantParams& vp) {
  const cx q = vp.q;
  const cx half(0.5);
  cx lambda = (vp.h1 + vp.h2 - vp.l1 - vp.l2 - vp.k1 + vp.k2 + cx(1.0)) / 2.0;
  cx a1 = cpow(q, -vp.l1 + half) / vp.t1;
  cx a2 = cpow(q, -vp.l2 + cx(1.5)) / vp.t2;
  cx b1 = cpow(q, lambda - vp.h1 + half) / vp.t1;
  cx b2 = cpow(q, lambda - vp.h2 + half) / vp.t2;
  return QParams::make(q, lambda, a1, a2, b1, b2);
}

FNParams fnparams_from_qparams(const QParams& p) {
  FNParams f;
  f.q = p.q;
  f.B = cx(1.0);
  f.A = p.qpow(p.lambda);
  f.a1 = p.qpow(p.lambda + 1.0) / p.beta1;
  f.a2 = p.qpow(p.lambda + 1.0) / p.beta2;
  f.b1 = f.A / p.alpha1;
  f.b2 = f.A * p.q / p.alpha2;
  f.alpha_exp = p.lambda - p.mu_prime;
  // the section-2 shape has k2 = 0, so lambda0 coincides with lambda
  f.lambda0 = p.lambda;
  return f;
}

}  // namespace qmckit
