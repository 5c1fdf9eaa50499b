#include "qmckit/qmc.hpp"

#include <Eigen/SVD>
#include <cinttypes>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace qmckit {

Eigen::MatrixXcd MatrixTuple::b0() const {
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Identity(m(), m()) - b_inf;
  for (const auto& b : blocks) r -= b;
  return r;
}

Eigen::MatrixXcd MatrixTuple::system_matrix(cx x) const {
  Eigen::MatrixXcd r = b_inf;
  for (int i = 0; i < n_poles(); ++i) r += blocks[i] / (cx(1.0) - x / poles[i]);
  return r;
}

void MatrixTuple::validate() const {
  const int mm = m();
  if (mm < 1 || blocks.empty() || blocks.size() != poles.size())
    throw Error(Errc::ParseError, "tuple: inconsistent sizes");
  for (const auto& b : blocks)
    if (b.rows() != mm || b.cols() != mm)
      throw Error(Errc::ParseError, "tuple: block size mismatch");
  for (size_t i = 0; i < poles.size(); ++i) {
    if (poles[i] == cx(0.0)) throw Error(Errc::ParseError, "tuple: zero pole");
    for (size_t j = i + 1; j < poles.size(); ++j)
      if (std::abs(poles[i] - poles[j]) <
          1e-12 * (std::abs(poles[i]) + std::abs(poles[j])))
        throw Error(Errc::ParseError, "tuple: poles must be distinct");
  }
}

ConvolvedTuple qconvolve(const MatrixTuple& t, cx lambda, cx q) {
  t.validate();
  const int m = t.m();
  const int N = t.n_poles();
  const int n = (N + 1) * m;
  const cx shift = cx(1.0) - cpow(q, lambda);

  std::vector<Eigen::MatrixXcd> all(N + 1);
  all[0] = t.b0();
  for (int i = 0; i < N; ++i) all[i + 1] = t.blocks[i];

  Eigen::MatrixXcd fhat(n, n);
  for (int r = 0; r <= N; ++r)
    for (int c = 0; c <= N; ++c) fhat.block(r * m, c * m, m, m) = all[c];

  ConvolvedTuple out;
  out.lambda = lambda;
  out.q = q;
  out.fhat = fhat;
  out.tuple.poles = t.poles;
  out.tuple.b_inf = Eigen::MatrixXcd::Identity(n, n) - fhat;
  out.tuple.blocks.reserve(N);
  for (int i = 1; i <= N; ++i) {
    Eigen::MatrixXcd Fi = Eigen::MatrixXcd::Zero(n, n);
    for (int c = 0; c <= N; ++c) {
      Eigen::MatrixXcd blk = all[c];
      if (c == i) blk -= shift * Eigen::MatrixXcd::Identity(m, m);
      Fi.block(i * m, c * m, m, m) = blk;
    }
    out.tuple.blocks.push_back(std::move(Fi));
  }
  return out;
}

SubspaceBasis nullspace(const Eigen::MatrixXcd& M, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  double smax = s.size() ? s(0) : 0.0;
  double thresh = tol * std::max(smax, 1.0);
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) >= thresh) ++rank;
  SubspaceBasis out;
  out.dim_ambient = int(M.cols());
  out.vectors = svd.matrixV().rightCols(int(M.cols()) - rank);
  return out;
}

SubspaceBasis subspace_K(const MatrixTuple& t, double tol) {
  const int m = t.m();
  const int N = t.n_poles();
  std::vector<Eigen::MatrixXcd> all(N + 1);
  all[0] = t.b0();
  for (int i = 0; i < N; ++i) all[i + 1] = t.blocks[i];

  std::vector<Eigen::VectorXcd> cols;
  for (int i = 0; i <= N; ++i) {
    SubspaceBasis ker = nullspace(all[i], tol);
    for (int c = 0; c < ker.dim(); ++c) {
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero((N + 1) * m);
      v.segment(i * m, m) = ker.vectors.col(c);
      cols.push_back(std::move(v));
    }
  }
  SubspaceBasis out;
  out.dim_ambient = (N + 1) * m;
  out.vectors.resize((N + 1) * m, int(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) out.vectors.col(int(c)) = cols[c];
  return out;
}

SubspaceBasis subspace_L(const ConvolvedTuple& f, double tol) {
  const int n = int(f.fhat.rows());
  Eigen::MatrixXcd M =
      f.fhat - (cx(1.0) - cpow(f.q, f.lambda)) * Eigen::MatrixXcd::Identity(n, n);
  return nullspace(M, tol);
}

namespace {

// Orthonormal complement of span(V) by Gram-Schmidt over the standard basis,
// in index order. This pins the quotient basis deterministically; for the
// section-2 tuple it returns the trailing coordinate vectors.
Eigen::MatrixXcd orthonormal_complement(const Eigen::MatrixXcd& V) {
  const int n = int(V.rows());
  std::vector<Eigen::VectorXcd> kept;
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
    v(i) = 1.0;
    for (int c = 0; c < V.cols(); ++c) v -= V.col(c).dot(v) * V.col(c);
    for (const auto& u : kept) v -= u.dot(v) * u;
    double nv = v.norm();
    if (nv > 1e-8) kept.push_back(v / nv);
  }
  Eigen::MatrixXcd Q(n, int(kept.size()));
  for (size_t c = 0; c < kept.size(); ++c) Q.col(int(c)) = kept[c];
  return Q;
}

}  // namespace

MiddleConvolved qmiddle_convolve(const MatrixTuple& t, cx lambda, cx q, double tol) {
  ConvolvedTuple conv = qconvolve(t, lambda, q);
  SubspaceBasis K = subspace_K(t, tol);
  SubspaceBasis L = subspace_L(conv, tol);

  const int n = int(conv.fhat.rows());
  Eigen::MatrixXcd KL(n, K.dim() + L.dim());
  if (K.dim()) KL.leftCols(K.dim()) = K.vectors;
  if (L.dim()) KL.rightCols(L.dim()) = L.vectors;
  // orthonormalize K+L (K and L may overlap or be non-orthogonal)
  Eigen::MatrixXcd V;
  if (KL.cols() > 0) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(KL, Eigen::ComputeFullU);
    const auto& s = svd.singularValues();
    double smax = s.size() ? s(0) : 0.0;
    int rank = 0;
    for (int i = 0; i < s.size(); ++i)
      if (s(i) >= tol * std::max(smax, 1.0)) ++rank;
    V = svd.matrixU().leftCols(rank);
  } else {
    V.resize(n, 0);
  }

  std::vector<Eigen::MatrixXcd> mats{conv.tuple.b_inf};
  for (const auto& b : conv.tuple.blocks) mats.push_back(b);

  // F-invariance of K+L: ||(I-P) F P|| must vanish
  if (V.cols() > 0) {
    Eigen::MatrixXcd P = V * V.adjoint();
    Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
    for (const auto& M : mats) {
      double r = ((I - P) * M * P).norm();
      if (r > tol * std::max(1.0, M.norm()))
        throw Error(Errc::QuotientNotInvariant,
                    "K+L is not numerically invariant under the convolved tuple");
    }
  }

  Eigen::MatrixXcd Q = orthonormal_complement(V);
  MiddleConvolved out;
  out.dim_k = K.dim();
  out.dim_l = L.dim();
  out.tuple.poles = t.poles;
  out.tuple.b_inf = Q.adjoint() * conv.tuple.b_inf * Q;
  for (const auto& b : conv.tuple.blocks)
    out.tuple.blocks.push_back(Q.adjoint() * b * Q);
  return out;
}

double verify_integral_transform(const MatrixTuple& t, cx lambda, cx q,
                                 const std::function<cx(cx)>& solution,
                                 std::span<const cx> sample_x, cx xi,
                                 const BilateralTruncation& bt) {
  t.validate();
  if (t.m() != 1)
    throw Error(Errc::ConfigError, "integral transform check supports m = 1 tuples");
  const int N = t.n_poles();
  auto yhat = [&](cx x) {
    Eigen::VectorXcd Y(N + 1);
    for (int i = 0; i <= N; ++i) {
      cx bi = (i == 0) ? cx(0.0) : t.poles[i - 1];
      Y(i) = jackson_integral(
          [&](cx s) {
            return p_lambda(x, s, lambda, q, bt.base) * solution(s) / (s - bi);
          },
          xi, q, bt);
    }
    return Y;
  };

  ConvolvedTuple conv = qconvolve(t, lambda, q);
  double worst = 0.0;
  for (cx x : sample_x) {
    Eigen::VectorXcd Yx = yhat(x);
    Eigen::VectorXcd Yqx = yhat(q * x);
    Eigen::MatrixXcd F = conv.tuple.system_matrix(x);
    double denom = std::max(Yx.norm(), 1e-30);
    worst = std::max(worst, (Yqx - F * Yx).norm() / denom);
  }
  return worst;
}

ScalarQDiffEq reduce_to_scalar(const MatrixTuple& f_bar, const QParams& p) {
  f_bar.validate();
  if (f_bar.m() != 2 || f_bar.n_poles() != 2)
    throw Error(Errc::ConfigError, "reduce_to_scalar expects the 2x2 two-pole shape");
  const cx q = p.q;
  const cx b1 = f_bar.poles[0], b2 = f_bar.poles[1];

  // M(x) = N(x)/D(x) with D(x) = (1 - x/b1)(1 - x/b2)
  Poly D({cx(1.0), -(cx(1.0) / b1 + cx(1.0) / b2), cx(1.0) / (b1 * b2)});
  auto entry = [&](int i, int j) {
    // N_ij = Finf_ij D(x) + F1_ij (1 - x/b2) + F2_ij (1 - x/b1)
    Poly r = D * f_bar.b_inf(i, j);
    r = r + Poly({cx(1.0), -cx(1.0) / b2}) * f_bar.blocks[0](i, j);
    r = r + Poly({cx(1.0), -cx(1.0) / b1}) * f_bar.blocks[1](i, j);
    return r;
  };
  Poly N11 = entry(0, 0), N12 = entry(0, 1), N21 = entry(1, 0), N22 = entry(1, 1);
  if (N12.is_zero(1e-14 * std::max(1.0, N11.max_abs())))
    throw Error(Errc::EliminationSingular, "off-diagonal coefficient vanishes");

  auto at_qx = [&](const Poly& c) { return c.scale_argument(q); };

  // y1(q^2 x) D(x) N12(x) D(qx)
  //   - y1(qx) [N11(qx) N12(x) + N22(x) N12(qx)] D(x)
  //   + y1(x)  N12(qx) [N11(x) N22(x) - N12(x) N21(x)] = 0
  Poly A = D * N12 * at_qx(D);
  Poly B = (at_qx(N11) * N12 + N22 * at_qx(N12)) * D * cx(-1.0);
  Poly C = at_qx(N12) * (N11 * N22 - N12 * N21);

  // substitute x -> x/q so the stencil reads (x/q, x, qx)
  A = A.scale_argument(cx(1.0) / q);
  B = B.scale_argument(cx(1.0) / q);
  C = C.scale_argument(cx(1.0) / q);

  // strip the spurious factor x (x - q b1)(x - q b2)(x - b2)
  const cx roots[4] = {cx(0.0), q * b1, q * b2, b2};
  double scale = std::max({A.max_abs(), B.max_abs(), C.max_abs()});
  for (Poly* poly : {&A, &B, &C}) {
    for (cx r : roots) {
      cx rem;
      Poly qt = poly->deflate(r, rem);
      if (std::abs(rem) > 1e-8 * std::max(1.0, scale))
        throw Error(Errc::EliminationSingular,
                    "coefficients do not share the expected quartic factor");
      *poly = qt;
    }
  }

  // normalize: monic g(x/q) coefficient
  cx lead = C.c.empty() ? cx(0.0) : C.c.back();
  if (lead == cx(0.0))
    throw Error(Errc::EliminationSingular, "down coefficient degenerated");
  ScalarQDiffEq eq;
  eq.coeff_down = C * (cx(1.0) / lead);
  eq.coeff_up = A * (cx(1.0) / lead);
  eq.coeff_mid = B * (cx(1.0) / lead);
  eq.nonhom = Poly{};
  return eq;
}

namespace {

std::string fmt_cx(cx v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g %.17g", v.real(), v.imag());
  return buf;
}

cx read_cx(std::istream& is) {
  double re, im;
  if (!(is >> re >> im)) throw Error(Errc::ParseError, "expected complex entry");
  return {re, im};
}

}  // namespace

void write_tuple(std::ostream& os, const TupleFile& tf) {
  tf.tuple.validate();
  const int m = tf.tuple.m();
  const int N = tf.tuple.n_poles();
  os << m << " " << N << "\n";
  os << fmt_cx(tf.q) << " " << fmt_cx(tf.lambda) << "\n";
  auto dump = [&](const Eigen::MatrixXcd& M) {
    for (int r = 0; r < M.rows(); ++r) {
      for (int c = 0; c < M.cols(); ++c) {
        if (c) os << " ";
        os << fmt_cx(M(r, c));
      }
      os << "\n";
    }
  };
  dump(tf.tuple.b_inf);
  for (const auto& b : tf.tuple.blocks) dump(b);
  for (int i = 0; i < N; ++i) {
    if (i) os << " ";
    os << fmt_cx(tf.tuple.poles[i]);
  }
  os << "\n";
}

TupleFile read_tuple(std::istream& is) {
  int m = 0, N = 0;
  if (!(is >> m >> N) || m < 1 || N < 1)
    throw Error(Errc::ParseError, "tuple header must be 'm N'");
  if (m > 64 || N > 64) throw Error(Errc::ParseError, "tuple too large");
  TupleFile tf;
  tf.q = read_cx(is);
  tf.lambda = read_cx(is);
  auto load = [&]() {
    Eigen::MatrixXcd M(m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) M(r, c) = read_cx(is);
    return M;
  };
  tf.tuple.b_inf = load();
  for (int i = 0; i < N; ++i) tf.tuple.blocks.push_back(load());
  for (int i = 0; i < N; ++i) tf.tuple.poles.push_back(read_cx(is));
  tf.tuple.validate();
  return tf;
}

}  // namespace qmckit
