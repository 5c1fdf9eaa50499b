#include "qmckit/jackson.hpp"

#include <array>
#include <cmath>

namespace qmckit {

QParams QParams::make(cx q, cx lambda, cx a1, cx a2, cx b1, cx b2) {
  double m = std::abs(q);
  if (!(m > 0.0) || m >= 1.0)
    throw Error(Errc::ModulusOfQOutOfRange, "need 0 < |q| < 1");
  for (cx v : {a1, a2, b1, b2})
    if (v == cx(0.0)) throw Error(Errc::ZeroArgument, "alpha/beta must be nonzero");
  // alpha1 = alpha2 or beta1 = beta2 makes the B_i of the pole expansion singular
  if (std::abs(a1 - a2) < 1e-12 * (std::abs(a1) + std::abs(a2)))
    throw Error(Errc::ConfigError, "degenerate parameters: alpha1 = alpha2");
  if (std::abs(b1 - b2) < 1e-12 * (std::abs(b1) + std::abs(b2)))
    throw Error(Errc::ConfigError, "degenerate parameters: beta1 = beta2");
  QParams p;
  p.q = q;
  p.lambda = lambda;
  p.alpha1 = a1;
  p.alpha2 = a2;
  p.beta1 = b1;
  p.beta2 = b2;
  p.mu_prime = std::log(b1 * b2 / (a1 * a2)) / std::log(q);
  return p;
}

cx p_lambda(cx x, cx s, cx lambda, cx q, const Truncation& t) {
  if (x == cx(0.0)) throw Error(Errc::ZeroBase, "p_lambda at x = 0");
  if (s == cx(0.0)) return cx(1.0);
  cx qs = q * s / x;
  if (lattice_power_index(qs, q))
    throw Error(Errc::PoleInDenominator, "q s/x on the lattice q^{-n}");
  return qpoch_infinite(cpow(q, lambda + 1.0) * s / x, q, t) /
         qpoch_infinite(qs, q, t);
}

cx p_lambda(cx x, cx s, const QParams& p, const Truncation& t) {
  return p_lambda(x, s, p.lambda, p.q, t);
}

cx p_tilde_lambda(cx x, cx s, const QParams& p, const Truncation& t) {
  if (x == cx(0.0) || s == cx(0.0))
    throw Error(Errc::ZeroBase, "p_tilde_lambda needs x, s != 0");
  cx r = x / s;
  cx den = p.qpow(-p.lambda) * r;
  if (lattice_power_index(den, p.q))
    throw Error(Errc::PoleInDenominator, "q^{-lambda} x/s on the lattice q^{-n}");
  return cpow(r, p.lambda) * qpoch_infinite(r, p.q, t) /
         qpoch_infinite(den, p.q, t);
}

cx weight_y(cx s, const QParams& p, const Truncation& t) {
  for (cx b : {p.beta1 * s, p.beta2 * s})
    if (lattice_power_index(b, p.q))
      throw Error(Errc::PoleInDenominator, "beta_i s on the lattice q^{-n}");
  const std::array<cx, 2> num{p.alpha1 * s, p.alpha2 * s};
  const std::array<cx, 2> den{p.beta1 * s, p.beta2 * s};
  return qpoch_multi_infinite(num, p.q, t) / qpoch_multi_infinite(den, p.q, t);
}

cx weight_y_tilde(cx s, const QParams& p, const Truncation& t) {
  if (s == cx(0.0)) throw Error(Errc::ZeroBase, "weight_y_tilde at s = 0");
  for (cx a : {p.q / (p.alpha1 * s), p.q / (p.alpha2 * s)})
    if (lattice_power_index(a, p.q))
      throw Error(Errc::PoleInDenominator, "q/(alpha_i s) on the lattice q^{-n}");
  const std::array<cx, 2> num{p.q / (p.beta1 * s), p.q / (p.beta2 * s)};
  const std::array<cx, 2> den{p.q / (p.alpha1 * s), p.q / (p.alpha2 * s)};
  return cpow(s, p.mu_prime) * qpoch_multi_infinite(num, p.q, t) /
         qpoch_multi_infinite(den, p.q, t);
}

namespace {

// Expands n = 0, +-1, +-2, ... until each side has tail_window consecutive
// terms below rel_tol relative to the running scale (largest of |sum| and
// the largest term seen).
cx bilateral_sum(const std::function<cx(int)>& term, const BilateralTruncation& bt) {
  bt.validate();
  cx total = term(0);
  double scale = std::abs(total);
  for (int dir : {+1, -1}) {
    int limit = dir > 0 ? bt.max_pos : bt.max_neg;
    int small = 0;
    for (int k = 1;; ++k) {
      if (k > limit)
        throw Error(Errc::TruncationFailure,
                    dir > 0 ? "bilateral sum: positive tail does not settle"
                            : "bilateral sum: negative tail does not settle");
      cx v = term(dir * k);
      total += v;
      double av = std::abs(v);
      if (av > scale) scale = av;
      if (std::abs(total) > scale) scale = std::abs(total);
      if (av <= bt.base.rel_tol * scale + 1e-300) {
        if (++small >= bt.base.tail_window) break;
      } else {
        small = 0;
      }
    }
  }
  return total;
}

}  // namespace

cx jackson_integral(const std::function<cx(cx)>& f, cx xi, cx q,
                    const BilateralTruncation& bt) {
  if (xi == cx(0.0)) throw Error(Errc::ZeroArgument, "jackson_integral needs xi != 0");
  cx sum = bilateral_sum(
      [&](int n) {
        cx qn = cpow(q, cx(double(n)));
        return qn * xi * f(qn * xi);
      },
      bt);
  return (cx(1.0) - q) * sum;
}

cx yhat1_bilateral(cx x, cx xi, const QParams& p, const BilateralTruncation& bt) {
  if (x == cx(0.0) || xi == cx(0.0))
    throw Error(Errc::ZeroArgument, "yhat1_bilateral needs x, xi != 0");
  const cx q = p.q;
  const Truncation& t = bt.base;
  cx sum = bilateral_sum(
      [&](int n) {
        cx qn = cpow(q, cx(double(n)));
        std::array<cx, 3> num{p.qpow(p.lambda + cx(double(n + 1))) * xi / x,
                              qn * q * xi * p.alpha1, qn * xi * p.alpha2};
        std::array<cx, 3> den{qn * q * xi / x, qn * xi * p.beta1, qn * xi * p.beta2};
        return qn * xi * qpoch_multi_infinite(num, q, t) /
               qpoch_multi_infinite(den, q, t);
      },
      bt);
  return (q - cx(1.0)) * p.alpha1 * sum;
}

}  // namespace qmckit
