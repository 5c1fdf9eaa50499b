#include "qmckit/solutions.hpp"

#include <cmath>
#include <unordered_map>

namespace qmckit {

namespace {

constexpr double kPoleGuard = 1e-8;

struct SeriesForm {
  cx prefactor;
  std::vector<cx> num;  // infinite Pochhammer arguments, numerator
  std::vector<cx> den;  // infinite Pochhammer arguments, denominator
  PhiSpec phi;          // the 3phi2 part
};

// The closed forms, in the alpha/beta/lambda parameterization. w denotes the
// series argument q^lambda a1 a2/(b1 b2) of the beta/x familes.
SeriesForm build_form(Family tag, const QParams& p, cx x) {
  const cx q = p.q;
  const cx a1 = p.alpha1, a2 = p.alpha2, b1 = p.beta1, b2 = p.beta2;
  const cx lam = p.lambda, mu = p.mu_prime;
  auto qp = [&](cx e) { return cpow(q, e); };
  const cx w = p.w();
  SeriesForm f;
  f.phi.q = q;
  switch (tag) {
    case Family::YAlpha1:
      f.prefactor = q - cx(1.0);
      f.num = {qp(lam + 1.0) / (a1 * x), q, a2 / a1};
      f.den = {q / (a1 * x), b1 / a1, b2 / a1};
      f.phi.upper = {q / (a1 * x), b1 / a1, b2 / a1};
      f.phi.lower = {qp(lam + 1.0) / (a1 * x), a2 / a1};
      f.phi.z = q;
      return f;
    case Family::YAlpha2:
      f.prefactor = (q - cx(1.0)) * q * a1 / a2;
      f.num = {qp(lam + 2.0) / (a2 * x), q * q * a1 / a2, q};
      f.den = {q * q / (a2 * x), q * b1 / a2, q * b2 / a2};
      f.phi.upper = {q * q / (a2 * x), q * b1 / a2, q * b2 / a2};
      f.phi.lower = {qp(lam + 2.0) / (a2 * x), q * q * a1 / a2};
      f.phi.z = q;
      return f;
    case Family::YLambda:
      f.prefactor = (q - cx(1.0)) * qp(-lam) * a1 * x;
      f.num = {q, qp(-lam + 1.0) * a1 * x, qp(-lam) * a2 * x};
      f.den = {qp(-lam + 1.0), qp(-lam) * b1 * x, qp(-lam) * b2 * x};
      f.phi.upper = {qp(-lam + 1.0), qp(-lam) * b1 * x, qp(-lam) * b2 * x};
      f.phi.lower = {qp(-lam + 1.0) * a1 * x, qp(-lam) * a2 * x};
      f.phi.z = q;
      return f;
    case Family::YBeta1:
      f.prefactor = (cx(1.0) - q) * cpow(b1, lam - mu) * cpow(x, lam);
      f.num = {b1 * x, q, q * b1 / b2};
      f.den = {qp(-lam) * b1 * x, b1 / a1, q * b1 / a2};
      f.phi.upper = {qp(-lam) * b1 * x, b1 / a1, q * b1 / a2};
      f.phi.lower = {b1 * x, q * b1 / b2};
      f.phi.z = w;
      return f;
    case Family::YX:
      f.prefactor = (cx(1.0) - q) * qp(lam - mu) * cpow(x, mu);
      f.num = {q * q / (b1 * x), q * q / (b2 * x), q};
      f.den = {q / (a1 * x), q * q / (a2 * x), qp(-lam + 1.0)};
      f.phi.upper = {qp(-lam + 1.0), q / (a1 * x), q * q / (a2 * x)};
      f.phi.lower = {q * q / (b1 * x), q * q / (b2 * x)};
      f.phi.z = w;
      return f;
    case Family::A1_1:
      f.prefactor = (cx(1.0) - q) * cpow(b1, lam - mu) * cpow(x, lam);
      f.num = {b1 * x, q, q * a1 / b2, a2 / b2, qp(lam + 2.0) / (a2 * x), q / (b1 * x)};
      f.den = {qp(-lam) * b1 * x, b1 / a1, q * b1 / a2, q * q / (a2 * x),
               qp(lam + 1.0) / (b1 * x), a1 * a2 / (b1 * b2)};
      f.phi.upper = {q * b1 / a2, qp(lam), q * b2 / a2};
      f.phi.lower = {qp(lam + 2.0) / (a2 * x), q * b1 * b2 / (a1 * a2)};
      f.phi.z = q / (a1 * x);
      return f;
    case Family::A1_5:
      f.prefactor = (cx(1.0) - q) * cpow(b1, lam - mu) * cpow(x, lam);
      f.num = {b1 * x, q, qp(lam + 1.0) / (b2 * x), a2 / b2, q * q * a1 / a2,
               q / (b1 * x)};
      f.den = {qp(-lam) * b1 * x, b1 / a1, q * b1 / a2, q * q / (a2 * x),
               q * a1 / b1, qp(lam) * a2 / (b1 * b2 * x)};
      f.phi.upper = {q * b1 / a2, a1 * x, q * b2 / a2};
      f.phi.lower = {q * q * a1 / a2, qp(-lam + 1.0) * b1 * b2 * x / a2};
      f.phi.z = qp(-lam + 1.0);
      return f;
    case Family::A1_9:
      f.prefactor = (cx(1.0) - q) * cpow(b1, lam - mu) * cpow(x, lam);
      f.num = {b1 * x, q, qp(lam + 1.0) / (b2 * x), q * a1 / b2, a2 / a1,
               q / (b1 * x)};
      f.den = {qp(-lam) * b1 * x, b1 / a1, q * b1 / a2, q / (a1 * x), a2 / b1,
               qp(lam + 1.0) * a1 / (b1 * b2 * x)};
      f.phi.upper = {b1 / a1, a2 * x / q, b2 / a1};
      f.phi.lower = {a2 / a1, qp(-lam) * b1 * b2 * x / a1};
      f.phi.z = qp(-lam + 1.0);
      return f;
    case Family::A2_2:
      f.prefactor = (cx(1.0) - q) * cpow(b2, lam - mu) * cpow(x, lam);
      f.num = {q, q * b2 / b1, a1 * x, a2 * x / q, qp(lam + 2.0) / (a2 * x), b1 / b2};
      f.den = {qp(-lam) * b2 * x, b2 / a1, q * b2 / a2, q * b1 / a2,
               qp(lam + 1.0) / (b2 * x), a1 * a2 * x / (q * b2)};
      f.phi.upper = {q * b2 / a2, qp(lam + 1.0) / (b1 * x), q * q / (a2 * x)};
      f.phi.lower = {qp(lam + 2.0) / (a2 * x), q * q * b2 / (a1 * a2 * x)};
      f.phi.z = b1 / a1;
      return f;
    case Family::A2_6:
      f.prefactor = (cx(1.0) - q) * cpow(b2, lam - mu) * cpow(x, lam);
      f.num = {q, q * b2 / b1, qp(lam), a2 * x / q, q * q * a1 / a2, b1 / b2};
      f.den = {qp(-lam) * b2 * x, b2 / a1, q * b2 / a2, q * b1 / a2, q * a1 / b2,
               qp(lam - 1.0) * a2 / b2};
      f.phi.upper = {q * b2 / a2, q * a1 / b1, q * q / (a2 * x)};
      f.phi.lower = {q * q * a1 / a2, qp(-lam + 2.0) * b2 / a2};
      f.phi.z = qp(-lam) * b1 * x;
      return f;
    case Family::A2_10:
      f.prefactor = (cx(1.0) - q) * cpow(b2, lam - mu) * cpow(x, lam);
      f.num = {q, q * b2 / b1, qp(lam), a1 * x, a2 / a1, b1 / b2};
      f.den = {qp(-lam) * b2 * x, b2 / a1, q * b2 / a2, b1 / a1, a2 / b2,
               qp(lam) * a1 / b2};
      f.phi.upper = {b2 / a1, a2 / b1, q / (a1 * x)};
      f.phi.lower = {a2 / a1, qp(-lam + 1.0) * b2 / a1};
      f.phi.z = qp(-lam) * b1 * x;
      return f;
    case Family::F32:
      f.prefactor = cpow(x, lam);
      f.phi.upper = {w, qp(lam), qp(lam + 1.0) / (b1 * x)};
      f.phi.lower = {qp(lam + 1.0) * a1 / b1, qp(lam) * a2 / b1};
      f.phi.z = qp(-lam) * b2 * x;
      return f;
    case Family::F33:
      f.prefactor = cpow(x, lam);
      f.num = {b2 * x};
      f.den = {qp(-lam) * b2 * x};
      f.phi.upper = {q * b2 / a2, qp(lam), a1 * x};
      f.phi.lower = {qp(lam + 1.0) * a1 / b1, b2 * x};
      f.phi.z = a2 / b1;
      return f;
    case Family::F34:
      f.prefactor = cpow(x, lam);
      f.num = {b2 * x};
      f.den = {qp(-lam) * b2 * x};
      f.phi.upper = {b2 / a1, q * b2 / a2, qp(lam)};
      f.phi.lower = {q * b1 * b2 / (a1 * a2), b2 * x};
      f.phi.z = q;
      return f;
    case Family::F35:
      f.prefactor = cpow(x, lam);
      f.num = {a2 * x / q};
      f.den = {qp(-lam - 1.0) * b1 * b2 * x / a1};
      f.phi.upper = {w, q * a1 / b1, q * a1 / b2};
      f.phi.lower = {qp(lam + 2.0) * a1 / (b1 * b2 * x), q * a1 * a2 / (b1 * b2)};
      f.phi.z = q / (a1 * x);
      return f;
    case Family::F36:
      f.prefactor = cpow(x, lam);
      f.num = {a1 * x, a2 * x / q};
      f.den = {b2 * x / q, qp(-lam) * b1 * x};
      f.phi.upper = {qp(-lam + 1.0), a2 / b2, q / (a1 * x)};
      f.phi.lower = {qp(-lam + 1.0) * b1 / a1, q * q / (b2 * x)};
      f.phi.z = q;
      return f;
    case Family::F37:
      f.prefactor = cpow(x, lam);
      f.phi.upper = {w, qp(lam), a1 * x};
      f.phi.lower = {qp(lam + 1.0) * a1 / b1, qp(lam + 1.0) * a1 / b2};
      f.phi.z = q;
      return f;
    default:
      break;
  }
  throw Error(Errc::UnknownFamily, "no closed form for this tag");
}

// YBeta2 and the F-checks are the beta-swapped images of their base families.
std::optional<Family> swapped_base(Family tag) {
  switch (tag) {
    case Family::YBeta2: return Family::YBeta1;
    case Family::F32Check: return Family::F32;
    case Family::F33Check: return Family::F33;
    case Family::F34Check: return Family::F34;
    case Family::F35Check: return Family::F35;
    case Family::F36Check: return Family::F36;
    case Family::F37Check: return Family::F37;
    default: return std::nullopt;
  }
}

SeriesForm resolve_form(Family tag, const QParams& p, cx x) {
  if (auto base = swapped_base(tag)) return build_form(*base, p.swapped_betas(), x);
  return build_form(tag, p, x);
}

bool poch_clears_guard(cx a, cx q) {
  // distance of every lattice factor 1 - q^j a from zero
  cx t = a;
  for (int j = 0; std::abs(t) > 0.5; ++j) {
    if (std::abs(cx(1.0) - t) < kPoleGuard) return false;
    t *= q;
    if (j > 100000) break;
  }
  return true;
}

bool form_in_domain(const SeriesForm& f, cx q) {
  if (std::abs(f.phi.z) >= 1.0) return false;
  for (cx d : f.den)
    if (!poch_clears_guard(d, q)) return false;
  for (cx b : f.phi.lower)
    if (!poch_clears_guard(b, q)) return false;
  return true;
}

cx eval_form(const SeriesForm& f, cx q, const Truncation& t) {
  cx v = f.prefactor;
  for (cx a : f.num) v *= qpoch_infinite(a, q, t);
  for (cx d : f.den) {
    cx dv = qpoch_infinite(d, q, t);
    if (std::abs(dv) < kPoleGuard * kPoleGuard)
      throw Error(Errc::PoleInDenominator, "prefactor denominator vanishes");
    v /= dv;
  }
  return v * rphi(f.phi, t);
}

struct AppellForm {
  cx a, b, bp, c, y, z;  // Phi^(1) data
  cx prefactor;
};

AppellForm build_appell(const VariantParams& vp, cx x) {
  const cx q = vp.q;
  const cx half(0.5);
  // lambda-tilde = lambda - k2 with lambda from the Prop 2.1 map
  cx lam_t = (vp.h1 + vp.h2 - vp.l1 - vp.l2 - vp.k1 - vp.k2 + cx(1.0)) / 2.0;
  AppellForm af;
  af.a = cpow(q, lam_t + vp.k1);
  af.b = cpow(q, lam_t + vp.k1 - vp.h2 + vp.l2);
  af.bp = cpow(q, lam_t + vp.k1 - vp.h1 + vp.l1);
  af.c = cpow(q, vp.k1 - vp.k2 + 1.0);
  af.y = cpow(q, vp.l1 + half) * vp.t1 / x;
  af.z = cpow(q, vp.l2 + half) * vp.t2 / x;
  af.prefactor = cpow(x, -vp.k1);
  return af;
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::YAlpha1: return "y_alpha1";
    case Family::YAlpha2: return "y_alpha2";
    case Family::YLambda: return "y_lambda";
    case Family::YBeta1: return "y_beta1";
    case Family::YBeta2: return "y_beta2";
    case Family::YX: return "y_x";
    case Family::A1_1: return "a1_1";
    case Family::A1_5: return "a1_5";
    case Family::A1_9: return "a1_9";
    case Family::A2_2: return "a2_2";
    case Family::A2_6: return "a2_6";
    case Family::A2_10: return "a2_10";
    case Family::F32: return "f32";
    case Family::F33: return "f33";
    case Family::F34: return "f34";
    case Family::F35: return "f35";
    case Family::F36: return "f36";
    case Family::F37: return "f37";
    case Family::F32Check: return "f32_check";
    case Family::F33Check: return "f33_check";
    case Family::F34Check: return "f34_check";
    case Family::F35Check: return "f35_check";
    case Family::F36Check: return "f36_check";
    case Family::F37Check: return "f37_check";
    case Family::GQAppell: return "g_qappell";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  static const std::unordered_map<std::string, Family> table = [] {
    std::unordered_map<std::string, Family> m;
    for (int i = 0; i <= int(Family::GQAppell); ++i) {
      Family f = Family(i);
      m.emplace(family_name(f), f);
    }
    return m;
  }();
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

bool is_nonhomogeneous_family(Family f) {
  return f == Family::YAlpha1 || f == Family::YAlpha2 || f == Family::YLambda;
}

bool in_domain(const SolutionFamily& fam, cx x) {
  if (x == cx(0.0)) return false;
  if (fam.tag == Family::GQAppell) {
    if (!fam.vparams) return false;
    AppellForm af = build_appell(*fam.vparams, x);
    return std::abs(af.y) < 1.0 && std::abs(af.z) < 1.0 &&
           poch_clears_guard(af.c, fam.vparams->q);
  }
  try {
    SeriesForm f = resolve_form(fam.tag, fam.params, x);
    return form_in_domain(f, fam.params.q);
  } catch (const Error&) {
    return false;
  }
}

cx eval_solution(const SolutionFamily& fam, cx x, const Truncation& t) {
  if (fam.tag == Family::GQAppell) {
    if (!fam.vparams)
      throw Error(Errc::ConfigError, "g_qappell requires variant parameters");
    return eval_qappell_solution(*fam.vparams, x, t);
  }
  if (!in_domain(fam, x))
    throw Error(Errc::OutOfConvergenceDomain,
                std::string(family_name(fam.tag)) + " not convergent at this x");
  SeriesForm f = resolve_form(fam.tag, fam.params, x);
  return eval_form(f, fam.params.q, t);
}

cx eval_qappell_solution(const VariantParams& vp, cx x, const Truncation& t) {
  AppellForm af = build_appell(vp, x);
  if (std::abs(af.y) >= 1.0 || std::abs(af.z) >= 1.0)
    throw Error(Errc::DivergentSeries, "q-Appell solution needs |t_i q^{l_i+1/2}/x| < 1");
  return af.prefactor * qappell_phi1(af.a, af.b, af.bp, af.c, vp.q, af.y, af.z, t);
}

}  // namespace qmckit
