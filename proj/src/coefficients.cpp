#include "qmckit/coefficients.hpp"

#include <array>
#include <unordered_map>

namespace qmckit {

namespace {

struct Ctx {
  cx q, a1, a2, b1, b2, lam, mu, x;
  const Truncation* t;

  cx th(cx v) const { return theta_q(v, q, *t); }
  cx qp(cx e) const { return cpow(q, e); }
  cx w() const { return qp(lam) * a1 * a2 / (b1 * b2); }
  cx poch(std::initializer_list<cx> args) const {
    cx p(1.0);
    for (cx a : args) p *= qpoch_infinite(a, q, *t);
    return p;
  }
};

Ctx make_ctx(cx x, const QParams& p, const Truncation& t) {
  return Ctx{p.q, p.alpha1, p.alpha2, p.beta1, p.beta2, p.lambda, p.mu_prime, x, &t};
}

cx eval_j(int m, int n, const Ctx& c) {
  const cx q = c.q, a1 = c.a1, a2 = c.a2, b1 = c.b1, b2 = c.b2;
  const cx lam = c.lam, mu = c.mu, x = c.x;
  auto th = [&](cx v) { return c.th(v); };
  auto qp = [&](cx e) { return c.qp(e); };
  switch (m * 10 + n) {
    case 11:
      return -cpow(b1, lam - mu) * cpow(x, lam) * th(b1 * x) * th(a2 / b2) *
             th(b2 / a1) /
             (th(qp(-lam) * b1 * x) * th(a1 * a2 / (b1 * b2)) * th(a2 / a1));
    case 12:
      // the y_alpha2 coefficient read off the GR 3.3.1 split of y_beta1;
      // satisfies J11 + J12 = 0 via the theta quasi-periodicity
      return -(a2 / (q * a1)) * cpow(b1, lam - mu) * cpow(x, lam) * th(b1 * x) *
             th(a2 / b2) * th(b2 / a1) /
             (th(qp(-lam) * b1 * x) * th(a1 * a2 / (b1 * b2)) * th(a2 / (q * a1)));
    case 13:
      return -qp(-lam + mu) * cpow(b1, lam - mu) * cpow(x, lam - mu) * th(b1 * x) *
             th(qp(lam)) * th(a1 * a2 * x / (q * b2)) /
             (th(qp(-lam) * b1 * x) * th(b1 * x / q) * th(a1 * a2 / (b1 * b2)));
    case 21:
      return -cpow(b1, lam - mu) * cpow(x, lam) * th(a1 * x) * th(a2 * x / q) *
             th(b2 / b1) /
             (th(qp(-lam) * b1 * x) * th(a1 * a2 * x / (q * b1)) * th(a2 / a1));
    case 23:
      return -cpow(b1 / b2, lam - mu) * th(b2 / b1) * th(a1 * a2 * x / (q * b2)) *
             th(qp(-lam) * b2 * x) /
             (th(qp(-lam) * b1 * x) * th(b1 / b2) * th(a1 * a2 * x / (q * b1)));
    case 31:
      return -(a2 / (q * a1)) * cpow(b1, lam - mu) * cpow(x, lam) * th(b1 * x) *
             th(a2 / b2) * th(qp(-lam) * b2 * x) /
             (th(b1 / a1) * th(qp(-lam + 1.0) * b1 * b2 * x / a2) *
              th(qp(-lam - 1.0) * a2 * x));
    case 33:
      // theta(q^{lam-1} a2/b2): the relation fails with a1 in that slot
      return -cpow(b1 / q, lam - mu) * cpow(x, lam - mu) * th(b1 * x) * th(a1 * x) *
             th(qp(lam - 1.0) * a2 / b2) /
             (th(b1 / a1) * th(b1 * x / q) * th(qp(-lam + 1.0) * b1 * b2 * x / a2));
    case 41:
      return -(a2 / (q * a1)) * cpow(b1, lam - mu) * cpow(x, lam) * th(qp(lam)) *
             th(a2 * x / q) * th(b2 / b1) /
             (th(b1 / a1) * th(qp(lam - 1.0) * a2 / b1) * th(qp(-lam - 1.0) * a2 * x));
    case 43:
      return -cpow(b1 / b2, lam - mu) * th(b2 / b1) * th(qp(lam - 1.0) * a2 / b2) *
             th(b2 / a1) / (th(b1 / a1) * th(b1 / b2) * th(qp(lam - 1.0) * a2 / b1));
    case 51:
      return -cpow(b1, lam - mu) * cpow(x, lam) * th(b1 * x) * th(qp(-lam) * b2 * x) *
             th(b2 / a1) /
             (th(a2 / b1) * th(qp(-lam) * b1 * b2 * x / a1) * th(qp(-lam) * a1 * x));
    case 53:
      return -cpow(q / b1, -lam + mu) * cpow(x, lam - mu) * th(b1 * x) *
             th(a2 * x / q) * th(qp(lam) * a1 / b2) /
             (th(b1 * x / q) * th(a2 / b1) * th(qp(-lam) * b1 * b2 * x / a1));
    case 61:
      return -cpow(b1, lam - mu) * cpow(x, lam) * th(qp(lam)) * th(a1 * x) *
             th(b2 / b1) / (th(a2 / b1) * th(qp(lam) * a1 / b1) * th(qp(-lam) * a1 * x));
    case 63:
      return -cpow(b1 / b2, lam - mu) * th(b2 / b1) * th(a2 / b2) *
             th(qp(lam) * a1 / b2) /
             (th(b1 / b2) * th(a2 / b1) * th(qp(lam) * a1 / b1));
  }
  throw Error(Errc::ConfigError, "unknown J index");
}

}  // namespace

const char* coeff_name(Coeff c) {
  switch (c) {
    case Coeff::J11: return "J11";
    case Coeff::J12: return "J12";
    case Coeff::J13: return "J13";
    case Coeff::J21: return "J21";
    case Coeff::J23: return "J23";
    case Coeff::J31: return "J31";
    case Coeff::J33: return "J33";
    case Coeff::J41: return "J41";
    case Coeff::J43: return "J43";
    case Coeff::J51: return "J51";
    case Coeff::J53: return "J53";
    case Coeff::J61: return "J61";
    case Coeff::J63: return "J63";
    case Coeff::K11: return "K11";
    case Coeff::K13: return "K13";
    case Coeff::K31: return "K31";
    case Coeff::K33: return "K33";
    case Coeff::K51: return "K51";
    case Coeff::K53: return "K53";
    case Coeff::S1: return "S1";
    case Coeff::S1Check: return "S1_check";
    case Coeff::S2: return "S2";
    case Coeff::S3: return "S3";
    case Coeff::S4: return "S4";
    case Coeff::S5: return "S5";
    case Coeff::A11: return "A11";
    case Coeff::A12: return "A12";
    case Coeff::K63: return "K63";
  }
  return "?";
}

std::optional<Coeff> coeff_from_name(const std::string& name) {
  static const std::unordered_map<std::string, Coeff> table = [] {
    std::unordered_map<std::string, Coeff> m;
    for (int i = 0; i <= int(Coeff::K63); ++i) m.emplace(coeff_name(Coeff(i)), Coeff(i));
    return m;
  }();
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

bool coeff_is_x_free(Coeff c) {
  switch (c) {
    case Coeff::S1:
    case Coeff::S1Check:
    case Coeff::S3:
    case Coeff::S4:
    case Coeff::A11:
    case Coeff::A12:
    case Coeff::K63:
    case Coeff::J43:
    case Coeff::J63:
      return true;
    default:
      return false;
  }
}

cx eval_coeff(Coeff c, cx x, const QParams& p, const Truncation& t) {
  switch (c) {
    case Coeff::J11: return eval_j(1, 1, make_ctx(x, p, t));
    case Coeff::J12: return eval_j(1, 2, make_ctx(x, p, t));
    case Coeff::J13: return eval_j(1, 3, make_ctx(x, p, t));
    case Coeff::J21: return eval_j(2, 1, make_ctx(x, p, t));
    case Coeff::J23: return eval_j(2, 3, make_ctx(x, p, t));
    case Coeff::J31: return eval_j(3, 1, make_ctx(x, p, t));
    case Coeff::J33: return eval_j(3, 3, make_ctx(x, p, t));
    case Coeff::J41: return eval_j(4, 1, make_ctx(x, p, t));
    case Coeff::J43: return eval_j(4, 3, make_ctx(x, p, t));
    case Coeff::J51: return eval_j(5, 1, make_ctx(x, p, t));
    case Coeff::J53: return eval_j(5, 3, make_ctx(x, p, t));
    case Coeff::J61: return eval_j(6, 1, make_ctx(x, p, t));
    case Coeff::J63: return eval_j(6, 3, make_ctx(x, p, t));
    case Coeff::K11: return eval_j(1, 1, make_ctx(x, p.swapped_betas(), t));
    case Coeff::K13: return eval_j(1, 3, make_ctx(x, p.swapped_betas(), t));
    case Coeff::K31: return eval_j(3, 1, make_ctx(x, p.swapped_betas(), t));
    case Coeff::K33: return eval_j(3, 3, make_ctx(x, p.swapped_betas(), t));
    case Coeff::K51: return eval_j(5, 1, make_ctx(x, p.swapped_betas(), t));
    case Coeff::K53: return eval_j(5, 3, make_ctx(x, p.swapped_betas(), t));
    case Coeff::S1: {
      Ctx c_ = make_ctx(x, p, t);
      return cpow(c_.b2, -c_.lam + c_.mu) / (cx(1.0) - c_.q) *
             c_.poch({c_.w(), c_.b2 / c_.a1, c_.q * c_.b2 / c_.a2}) /
             c_.poch({c_.qp(c_.lam + 1.0) * c_.a1 / c_.b1,
                      c_.qp(c_.lam) * c_.a2 / c_.b1, c_.q});
    }
    case Coeff::S1Check: return eval_coeff(Coeff::S1, x, p.swapped_betas(), t);
    case Coeff::S2: {
      Ctx c_ = make_ctx(x, p, t);
      return c_.qp(-c_.lam + c_.mu) / (cx(1.0) - c_.q) *
             c_.poch({c_.w(), c_.qp(-c_.lam + 1.0)}) * c_.th(c_.a2 * x / c_.q) /
             (c_.poch({c_.q * c_.a1 * c_.a2 / (c_.b1 * c_.b2), c_.q}) *
              c_.th(c_.qp(-c_.lam - 1.0) * c_.b1 * c_.b2 * x / c_.a1)) *
             cpow(x, c_.lam - c_.mu);
    }
    case Coeff::S3: {
      Ctx c_ = make_ctx(x, p, t);
      return -c_.poch({c_.w(), c_.q * c_.a1 / c_.b1}) /
             c_.poch({c_.qp(c_.lam + 1.0) * c_.a1 / c_.b1,
                      c_.a1 * c_.a2 / (c_.b1 * c_.b2)});
    }
    case Coeff::S4: {
      Ctx c_ = make_ctx(x, p, t);
      return -c_.poch({c_.b2 / c_.a1, c_.a2 / c_.b1}) /
             c_.poch({c_.qp(c_.lam) * c_.a2 / c_.b1, c_.qp(-c_.lam) * c_.b2 / c_.a1});
    }
    case Coeff::S5: {
      Ctx c_ = make_ctx(x, p, t);
      return -c_.poch({c_.w(), c_.q * c_.a1 / c_.b1}) *
             c_.th(c_.qp(-c_.lam) * c_.b1 * x) * c_.th(c_.b2 * x / c_.q) /
             (c_.poch({c_.q * c_.a1 * c_.a2 / (c_.b1 * c_.b2),
                       c_.qp(c_.lam) * c_.a1 / c_.b1}) *
              c_.th(c_.qp(-c_.lam - 1.0) * c_.b1 * c_.b2 * x / c_.a1) *
              c_.th(c_.a1 * x));
    }
    case Coeff::A11: {
      Ctx c_ = make_ctx(x, p, t);
      return c_.poch({c_.b1 / c_.a1, c_.a2 / c_.b2, c_.qp(-c_.lam) * c_.b2 / c_.a1}) /
             c_.poch({c_.qp(c_.lam) * c_.a2 / c_.b2, c_.b2 / c_.a1,
                      c_.qp(-c_.lam) * c_.b1 / c_.a1});
    }
    case Coeff::A12: {
      Ctx c_ = make_ctx(x, p, t);
      return -cpow(c_.b2, -c_.lam + c_.mu) / (cx(1.0) - c_.q) *
             c_.poch({c_.qp(-c_.lam) * c_.b2 / c_.a1, c_.w(), c_.q * c_.b2 / c_.a2,
                      c_.b1 / c_.a1, c_.a2 / c_.b2}) /
             c_.poch({c_.qp(c_.lam) * c_.a2 / c_.b2, c_.a2 / c_.b1,
                      c_.qp(-c_.lam) * c_.b1 / c_.a1,
                      c_.qp(c_.lam + 1.0) * c_.a1 / c_.b1, c_.q});
    }
    case Coeff::K63: {
      Ctx c_ = make_ctx(x, p, t);
      return -cpow(c_.b2 / c_.b1, c_.lam - c_.mu) * c_.th(c_.b1 / c_.b2) *
             c_.th(c_.a2 / c_.b1) * c_.th(c_.qp(c_.lam) * c_.a1 / c_.b1) /
             (c_.th(c_.b2 / c_.b1) * c_.th(c_.a2 / c_.b2) *
              c_.th(c_.qp(c_.lam) * c_.a1 / c_.b2));
    }
  }
  throw Error(Errc::ConfigError, "unknown coefficient");
}

cx eval_c1(cx x, const QParams& p, const Truncation& t) {
  Ctx c = make_ctx(x, p, t);
  cx pref = cpow(x, c.lam) *
            c.poch({c.b2 / c.a1, c.q * c.b2 / c.a2, c.qp(c.lam),
                    c.a1 * c.a2 * x / c.b1}) /
            c.poch({c.qp(c.lam + 1.0) * c.a1 / c.b1, c.b1 * c.b2 / (c.a1 * c.a2),
                    c.a2 / c.b1, c.qp(-c.lam) * c.b2 * x});
  PhiSpec s;
  s.q = c.q;
  s.upper = {c.w(), c.q * c.a1 / c.b1, c.a2 / c.b1};
  s.lower = {c.a1 * c.a2 * x / c.b1, c.q * c.a1 * c.a2 / (c.b1 * c.b2)};
  s.z = c.q;
  return pref * rphi(s, t);
}

cx eval_c2(cx x, const QParams& p, const Truncation& t) {
  Ctx c = make_ctx(x, p, t);
  cx pref = cpow(x, c.lam) *
            c.poch({c.a1 * x, c.w(), c.qp(c.lam), c.q * c.b2 / c.b1}) /
            c.poch({c.qp(c.lam + 1.0) * c.a1 / c.b1, c.qp(c.lam) * c.a2 / c.b1,
                    c.qp(c.lam) * c.a1 / c.b2, c.qp(-c.lam) * c.b2 * x,
                    c.b2 / c.a1, c.a2 / c.b1});
  PhiSpec s;
  s.q = c.q;
  s.upper = {c.b2 / c.a1, c.a2 / c.b1, c.qp(-c.lam) * c.b2 * x};
  s.lower = {c.q * c.b2 / c.b1, c.qp(-c.lam + 1.0) * c.b2 / c.a1};
  s.z = c.q;
  return pref * rphi(s, t);
}

cx eval_c3(cx x, const QParams& p, const Truncation& t) {
  Ctx c = make_ctx(x, p, t);
  cx pref = cpow(x, c.lam) *
            c.poch({c.a2 * x / c.q, c.qp(-c.lam + 1.0), c.a2 / c.b2}) /
            c.poch({c.qp(-c.lam - 1.0) * c.b1 * c.b2 * x / c.a1,
                    c.q * c.a1 * c.a2 / (c.b1 * c.b2), c.qp(-c.lam) * c.b1 / c.a1});
  PhiSpec s;
  s.q = c.q;
  s.upper = {c.qp(c.lam + 1.0) / (c.b1 * x), c.w(), c.q * c.a1 / c.b1};
  s.lower = {c.qp(c.lam + 2.0) * c.a1 / (c.b1 * c.b2 * x),
             c.qp(c.lam + 1.0) * c.a1 / c.b1};
  s.z = c.q;
  return pref * rphi(s, t);
}

}  // namespace qmckit
