#include "qmckit/qseries.hpp"

#include <cmath>

namespace qmckit {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ModulusOfQOutOfRange: return "ModulusOfQOutOfRange";
    case Errc::TruncationFailure: return "TruncationFailure";
    case Errc::DivergentSeries: return "DivergentSeries";
    case Errc::PoleInDenominator: return "PoleInDenominator";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::ZeroBase: return "ZeroBase";
    case Errc::OutOfConvergenceDomain: return "OutOfConvergenceDomain";
    case Errc::QuotientNotInvariant: return "QuotientNotInvariant";
    case Errc::EliminationSingular: return "EliminationSingular";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::ConfigError: return "ConfigError";
    case Errc::ParseError: return "ParseError";
  }
  return "Error";
}

namespace {

void require_q(cx q) {
  double m = std::abs(q);
  if (!(m > 0.0) || m >= 1.0)
    throw Error(Errc::ModulusOfQOutOfRange, "need 0 < |q| < 1");
}

}  // namespace

cx cpow(cx x, cx e) {
  if (x == cx(0.0)) throw Error(Errc::ZeroBase, "0^e is not defined here");
  if (e == cx(0.0)) return cx(1.0);
  if (e == cx(1.0)) return x;
  return std::exp(e * std::log(x));
}

cx qpoch_finite(cx a, cx q, int n) {
  cx p(1.0);
  cx t = a;
  for (int j = 0; j < n; ++j) {
    p *= (cx(1.0) - t);
    t *= q;
  }
  return p;
}

cx qpoch_infinite(cx a, cx q, const Truncation& t) {
  require_q(q);
  if (a == cx(0.0)) return cx(1.0);
  cx p(1.0);
  cx factor = a;
  int small = 0;
  for (int j = 0; j < t.max_terms; ++j) {
    p *= (cx(1.0) - factor);
    factor *= q;
    if (std::abs(factor) < t.rel_tol) {
      if (++small >= t.tail_window) return p;
    } else {
      small = 0;
    }
  }
  throw Error(Errc::TruncationFailure, "qpoch_infinite: max_terms exceeded");
}

cx qpoch_multi_finite(std::span<const cx> as, cx q, int n) {
  cx p(1.0);
  for (cx a : as) p *= qpoch_finite(a, q, n);
  return p;
}

cx qpoch_multi_infinite(std::span<const cx> as, cx q, const Truncation& t) {
  cx p(1.0);
  for (cx a : as) p *= qpoch_infinite(a, q, t);
  return p;
}

cx theta_q(cx x, cx q, const Truncation& t) {
  if (x == cx(0.0)) throw Error(Errc::ZeroArgument, "theta_q at x = 0");
  require_q(q);
  return qpoch_infinite(x, q, t) * qpoch_infinite(q / x, q, t) *
         qpoch_infinite(q, q, t);
}

std::optional<int> lattice_power_index(cx v, cx q, double tol) {
  double qm = std::abs(q);
  if (qm <= 0.0 || qm >= 1.0) return std::nullopt;
  cx w = v;
  // once |w| < 1/2 it can no longer be within tol of 1
  for (int m = 0; std::abs(w) > 0.5; ++m) {
    if (std::abs(w - cx(1.0)) <= tol) return m;
    w *= q;
    if (m > 100000) break;
  }
  return std::nullopt;
}

cx rphi(const PhiSpec& spec, const Truncation& t) {
  require_q(spec.q);
  t.validate();
  for (cx b : spec.lower) {
    if (lattice_power_index(b, spec.q))
      throw Error(Errc::PoleInDenominator, "lower parameter on the lattice q^{-n}");
  }
  std::optional<int> stop;
  for (cx a : spec.upper) {
    if (auto m = lattice_power_index(a, spec.q)) {
      if (!stop || *m < *stop) stop = *m;
    }
  }
  if (!stop && std::abs(spec.z) >= 1.0)
    throw Error(Errc::DivergentSeries, "|z| >= 1 and series does not terminate");

  cx sum(0.0);
  cx term(1.0);
  int small = 0;
  for (int n = 0; n < t.max_terms; ++n) {
    sum += term;
    if (stop && n >= *stop) return sum;
    cx num(1.0);
    cx qn = cpow(spec.q, cx(double(n)));
    for (cx a : spec.upper) num *= (cx(1.0) - a * qn);
    cx den = cx(1.0) - qn * spec.q;
    for (cx b : spec.lower) den *= (cx(1.0) - b * qn);
    if (den == cx(0.0))
      throw Error(Errc::PoleInDenominator, "vanishing denominator factor in rphi");
    term *= num / den * spec.z;
    if (std::abs(term) <= t.rel_tol * (std::abs(sum) + 1e-300)) {
      if (++small >= t.tail_window) return sum + term;
    } else {
      small = 0;
    }
  }
  throw Error(Errc::TruncationFailure, "rphi: max_terms exceeded");
}

cx qappell_phi1(cx a, cx b, cx bp, cx c, cx q, cx y, cx z, const Truncation& t) {
  require_q(q);
  t.validate();
  if (lattice_power_index(c, q))
    throw Error(Errc::PoleInDenominator, "q-Appell c parameter on the lattice q^{-n}");
  if (std::abs(y) >= 1.0 || std::abs(z) >= 1.0)
    throw Error(Errc::DivergentSeries, "q-Appell requires |y| < 1 and |z| < 1");

  // u_m = (b;q)_m y^m / (q;q)_m, v_n = (b';q)_n z^n / (q;q)_n,
  // diagonal k contributes (a;q)_k/(c;q)_k * sum_{m+n=k} u_m v_n
  std::vector<cx> us{cx(1.0)}, vs{cx(1.0)};
  cx ratio_ac(1.0);
  cx qk(1.0);
  cx sum(0.0);
  int small = 0;
  for (int k = 0; k < t.max_terms; ++k) {
    cx diag(0.0);
    for (int m = 0; m <= k; ++m) diag += us[m] * vs[k - m];
    diag *= ratio_ac;
    sum += diag;
    if (std::abs(diag) <= t.rel_tol * (std::abs(sum) + 1e-300)) {
      if (++small >= t.tail_window) return sum;
    } else {
      small = 0;
    }
    cx denc = cx(1.0) - c * qk;
    if (denc == cx(0.0))
      throw Error(Errc::PoleInDenominator, "vanishing (c;q)_k factor");
    ratio_ac *= (cx(1.0) - a * qk) / denc;
    cx qk1 = cx(1.0) - q * qk;
    us.push_back(us.back() * (cx(1.0) - b * qk) / qk1 * y);
    vs.push_back(vs.back() * (cx(1.0) - bp * qk) / qk1 * z);
    qk *= q;
  }
  throw Error(Errc::TruncationFailure, "qappell_phi1: max_terms exceeded");
}

}  // namespace qmckit
