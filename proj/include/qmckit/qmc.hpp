#pragma once

#include <Eigen/Dense>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "qmckit/variant.hpp"

namespace qmckit {

/// Tuple (B_inf; B_1..B_N) with pole locations b_1..b_N of the system
/// Y(qx) = [B_inf + sum_i B_i/(1 - x/b_i)] Y(x). B_0 = I - B_inf - sum B_i.
struct MatrixTuple {
  Eigen::MatrixXcd b_inf;
  std::vector<Eigen::MatrixXcd> blocks;
  std::vector<cx> poles;

  int m() const { return int(b_inf.rows()); }
  int n_poles() const { return int(blocks.size()); }
  Eigen::MatrixXcd b0() const;
  Eigen::MatrixXcd system_matrix(cx x) const;  // B(x)
  void validate() const;
};

/// Result of the q-convolution c_lambda: the enlarged tuple plus Fhat.
struct ConvolvedTuple {
  MatrixTuple tuple;
  Eigen::MatrixXcd fhat;
  cx lambda, q;
};

ConvolvedTuple qconvolve(const MatrixTuple& t, cx lambda, cx q);

struct SubspaceBasis {
  int dim_ambient = 0;
  Eigen::MatrixXcd vectors;  // orthonormal columns

  int dim() const { return int(vectors.cols()); }
};

/// Orthonormal basis of the numerical kernel: right singular vectors whose
/// singular value is below tol * max(largest singular value, 1).
SubspaceBasis nullspace(const Eigen::MatrixXcd& M, double tol);

/// K = ker B_0 + ker B_1 + ... + ker B_N, block-embedded in C^{(N+1)m}.
SubspaceBasis subspace_K(const MatrixTuple& t, double tol);

/// L = ker(Fhat - (1 - q^lambda) I).
SubspaceBasis subspace_L(const ConvolvedTuple& f, double tol);

struct MiddleConvolved {
  MatrixTuple tuple;
  int dim_k = 0, dim_l = 0;
};

/// q-middle convolution mc_lambda: compress the convolved tuple onto the
/// orthogonal complement of K + L. The complement basis is built
/// deterministically by Gram-Schmidt over the standard basis, so the
/// section-2 case reproduces the lower-right submatrix form exactly.
MiddleConvolved qmiddle_convolve(const MatrixTuple& t, cx lambda, cx q, double tol);

/// Max over sample_x of ||Yhat(qx) - F(x) Yhat(x)|| / max(||Yhat(x)||, eps)
/// where Yhat_i(x) = int P_lambda(x,s)/(s-b_i) Y(s) d_q s over the lattice
/// {q^n xi}, b_0 = 0. Divergent component integrals surface as
/// TruncationFailure.
double verify_integral_transform(const MatrixTuple& t, cx lambda, cx q,
                                 const std::function<cx(cx)>& solution,
                                 std::span<const cx> sample_x, cx xi,
                                 const BilateralTruncation& bt);

/// Eliminate the second component of a 2x2 convolved system (the section-2
/// shape, poles {1/alpha1, 1/alpha2}) and return the three-term scalar
/// equation for the first component, normalized so coeff_down is monic.
ScalarQDiffEq reduce_to_scalar(const MatrixTuple& f_bar, const QParams& p);

/// Plain-text tuple file: header m, N, q, lambda; then row-major "re im"
/// entries for B_inf, B_1..B_N; poles on the final line. Round-trips
/// bit-exactly.
struct TupleFile {
  MatrixTuple tuple;
  cx q, lambda;
};

void write_tuple(std::ostream& os, const TupleFile& tf);
TupleFile read_tuple(std::istream& is);

}  // namespace qmckit
