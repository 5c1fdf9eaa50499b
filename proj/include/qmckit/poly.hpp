#pragma once

#include <algorithm>
#include <vector>

#include "qmckit/types.hpp"

namespace qmckit {

/// Dense polynomial with complex coefficients, ascending powers.
struct Poly {
  std::vector<cx> c;

  Poly() = default;
  explicit Poly(std::vector<cx> coeffs) : c(std::move(coeffs)) {}
  static Poly constant(cx v) { return Poly({v}); }

  int degree() const { return int(c.size()) - 1; }
  bool is_zero(double tol = 0.0) const {
    for (cx v : c)
      if (std::abs(v) > tol) return false;
    return true;
  }

  cx eval(cx x) const {
    cx acc(0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly operator+(const Poly& o) const {
    Poly r;
    r.c.resize(std::max(c.size(), o.c.size()), cx(0.0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    return r;
  }

  Poly operator-(const Poly& o) const {
    Poly r;
    r.c.resize(std::max(c.size(), o.c.size()), cx(0.0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
    return r;
  }

  Poly operator*(const Poly& o) const {
    if (c.empty() || o.c.empty()) return Poly{};
    Poly r;
    r.c.assign(c.size() + o.c.size() - 1, cx(0.0));
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    return r;
  }

  Poly operator*(cx s) const {
    Poly r = *this;
    for (cx& v : r.c) v *= s;
    return r;
  }

  /// p(x) -> p(s x).
  Poly scale_argument(cx s) const {
    Poly r = *this;
    cx f(1.0);
    for (cx& v : r.c) {
      v *= f;
      f *= s;
    }
    return r;
  }

  /// Synthetic division by (x - root); remainder returned through rem.
  Poly deflate(cx root, cx& rem) const {
    if (c.size() <= 1) {
      rem = c.empty() ? cx(0.0) : c[0];
      return Poly{};
    }
    Poly q;
    q.c.assign(c.size() - 1, cx(0.0));
    cx acc = c.back();
    for (int k = int(c.size()) - 2; k >= 0; --k) {
      q.c[k] = acc;
      acc = c[k] + root * acc;
    }
    rem = acc;
    return q;
  }

  double max_abs() const {
    double m = 0.0;
    for (cx v : c) m = std::max(m, std::abs(v));
    return m;
  }
};

}  // namespace qmckit
