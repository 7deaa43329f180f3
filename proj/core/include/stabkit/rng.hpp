// Copyright (c) stabkit contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace stabkit {

// Seeded generator with fixed sampling algorithms. std:: distributions are
// implementation-defined, so uniform and gaussian draws are spelled out here
// to keep outputs reproducible for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on (0,1); never returns an endpoint.
  double uniform() {
    const std::uint64_t bits = gen_() >> 11;  // 53 random bits
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller (one fresh pair of uniforms per draw).
  double gauss() {
    const double u = uniform();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925287 * v);
  }

  Eigen::MatrixXd gaussian_matrix(int rows, int cols) {
    Eigen::MatrixXd out(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) out(i, j) = gauss();
    return out;
  }

  // Haar-ish orthogonal matrix: QR of a gaussian draw with the sign fixed so
  // the factorization is unique (diag(R) > 0).
  Eigen::MatrixXd random_orthogonal(int n) {
    const Eigen::MatrixXd g = gaussian_matrix(n, n);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j)
      if (r(j, j) < 0) q.col(j) *= -1.0;
    return q;
  }

  // Random direction normalized to unit length in the (SPD) M-inner product.
  Eigen::VectorXd unit_vector(int n, const Eigen::MatrixXd& M) {
    Eigen::VectorXd x = gaussian_matrix(n, 1);
    const double norm = std::sqrt(x.dot(M * x));
    return x / norm;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace stabkit
