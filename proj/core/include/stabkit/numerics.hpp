// Copyright (c) stabkit contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include <Eigen/Dense>

#include "stabkit/errors.hpp"

namespace stabkit {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Panel-based quadrature rule for matrix-valued integrands.
struct QuadSpec {
  enum class Rule { composite_simpson, gauss_legendre };

  Rule rule = Rule::composite_simpson;
  int panels = 256;
  int nodes_per_panel = 5;  // Gauss-Legendre only; Simpson is fixed at 3 nodes

  static QuadSpec simpson(int panels) { return QuadSpec{Rule::composite_simpson, panels, 3}; }
  static QuadSpec gauss(int panels, int nodes) {
    return QuadSpec{Rule::gauss_legendre, panels, nodes};
  }
};

/// exp(t*A) by scaling-and-squaring with a fixed degree-13 Pade approximant.
Mat expm(const Mat& A, double t = 1.0);

struct QuadResult {
  Mat value;            // integral at the requested panel count
  double err_estimate;  // entrywise max difference against doubled panels
};

/// Integrate a matrix-valued function over [a,b]. All evaluations of f must
/// share one shape. Panels are summed left to right.
QuadResult integrate_mat(const std::function<Mat(double)>& f, double a, double b,
                         const QuadSpec& spec);

struct CholResult {
  bool ok = false;
  Mat L;                 // lower-triangular factor when ok
  int failed_pivot = 0;  // 1-based pivot index that went non-positive
};

/// Cholesky factorization of a symmetric matrix. A non-positive pivot is
/// reported rather than thrown; asymmetry beyond 1e-10 (relative) throws.
CholResult chol_spd(const Mat& M);

struct PencilExtremes {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
};

/// Extreme generalized eigenvalues of S x = lambda M x with S symmetric and
/// M symmetric positive definite, via Cholesky whitening of M.
PencilExtremes sym_pencil_extremes(const Mat& S, const Mat& M);

/// Smallest generalized eigenvalue of the pencil (S, M).
double pencil_lambda_min(const Mat& S, const Mat& M);
/// Largest generalized eigenvalue of the pencil (S, M).
double pencil_lambda_max(const Mat& S, const Mat& M);

/// Solve F^T W + W F = -Rhs for symmetric W by dense vectorization.
/// Intended for state dimensions up to a few dozen; F must be Hurwitz for the
/// system to be solvable (a singular system raises ConvergenceError).
Mat solve_lyapunov(const Mat& F, const Mat& Rhs);

// -- small dense helpers shared across the toolkit ---------------------------

inline Mat symmetrize(const Mat& M) { return 0.5 * (M + M.transpose()); }

/// Largest singular value.
double opnorm(const Mat& M);

/// Operator norm of X as a map on the inner-product space defined by SPD M.
double weighted_opnorm(const Mat& X, const Mat& M);

/// Operator norm of X as a map from the dual space (metric M^-1) into the
/// primal space (metric M).
double dual_to_primal_opnorm(const Mat& X, const Mat& M);

/// Maximum real part over the eigenvalues of a square matrix.
double spectral_abscissa(const Mat& A);

/// Inverse of an SPD matrix through its Cholesky factorization.
Mat spd_inverse(const Mat& M);

/// True when every entry is finite.
bool all_finite(const Mat& M);

}  // namespace stabkit
