#pragma once

#include <functional>

#include "qmckit/qseries.hpp"

namespace qmckit {

/// Parameter pack of the scalar weight y(x) = (a1 x, a2 x;q)inf/(b1 x, b2 x;q)inf.
/// mu_prime is the principal-log representative of the constraint
/// q^{mu'} a1 a2 / (b1 b2) = 1.
struct QParams {
  cx q;
  cx lambda;
  cx alpha1, alpha2, beta1, beta2;
  cx mu_prime;

  static QParams make(cx q, cx lambda, cx a1, cx a2, cx b1, cx b2);

  QParams swapped_betas() const {
    QParams r = *this;
    std::swap(r.beta1, r.beta2);
    return r;
  }

  cx qpow(cx e) const { return cpow(q, e); }
  /// q^lambda a1 a2 / (b1 b2), the 3phi2 argument of the beta/x families.
  cx w() const { return qpow(lambda) * alpha1 * alpha2 / (beta1 * beta2); }
};

/// P_lambda(x, s) = (q^{lambda+1} s/x;q)inf / (q s/x;q)inf.
cx p_lambda(cx x, cx s, cx lambda, cx q, const Truncation& t);
cx p_lambda(cx x, cx s, const QParams& p, const Truncation& t);

/// P~_lambda(x, s) = (x/s)^lambda (x/s;q)inf / (q^{-lambda} x/s;q)inf,
/// principal branch for the power.
cx p_tilde_lambda(cx x, cx s, const QParams& p, const Truncation& t);

/// y(s) = (a1 s, a2 s;q)inf / (b1 s, b2 s;q)inf.
cx weight_y(cx s, const QParams& p, const Truncation& t);

/// y~(s) = s^{mu'} (q/(b1 s), q/(b2 s);q)inf / (q/(a1 s), q/(a2 s);q)inf.
cx weight_y_tilde(cx s, const QParams& p, const Truncation& t);

/// Jackson integral over the bilateral lattice {q^n xi}:
/// (1-q) sum_n q^n xi f(q^n xi), both tails expanded until they pass the
/// tail-window test.
cx jackson_integral(const std::function<cx(cx)>& f, cx xi, cx q,
                    const BilateralTruncation& bt);

/// The formal bilateral solution of the convolved system,
/// (q-1) a1 sum_n q^n xi (q^{lam+n+1}xi/x, q^{n+1}xi a1, q^n xi a2;q)inf
///                       / (q^{n+1}xi/x, q^n xi b1, q^n xi b2;q)inf.
/// Divergent tails surface as TruncationFailure.
cx yhat1_bilateral(cx x, cx xi, const QParams& p, const BilateralTruncation& bt);

}  // namespace qmckit
