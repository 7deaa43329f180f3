// Copyright (c) stabkit contributors.
// SPDX-License-Identifier: Apache-2.0

#include "stabkit/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace stabkit {

bool all_finite(const Mat& M) { return M.allFinite(); }

namespace {

void require_square(const Mat& A, const char* who) {
  if (A.rows() != A.cols())
    throw DimensionError(std::string(who) + ": matrix must be square, got " +
                         std::to_string(A.rows()) + "x" + std::to_string(A.cols()));
}

void require_finite(const Mat& A, const char* who) {
  if (!A.allFinite()) throw DomainError(std::string(who) + ": non-finite matrix entry");
}

// Degree-13 Pade numerator coefficients (Higham's scaling-and-squaring).
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

Mat expm_pade13(const Mat& A) {
  const Eigen::Index n = A.rows();
  const Mat I = Mat::Identity(n, n);
  const Mat A2 = A * A;
  const Mat A4 = A2 * A2;
  const Mat A6 = A2 * A4;
  const auto& b = kPade13;
  const Mat U =
      A * (A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2) + b[7] * A6 + b[5] * A4 + b[3] * A2 +
           b[1] * I);
  const Mat V =
      A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) + b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
  return (V - U).partialPivLu().solve(V + U);
}

}  // namespace

Mat expm(const Mat& A, double t) {
  require_square(A, "expm");
  require_finite(A, "expm");
  if (!std::isfinite(t)) throw DomainError("expm: non-finite time");

  Mat M = t * A;
  if (!M.allFinite()) throw DomainError("expm: t*A overflows");

  // Scale below the degree-13 Pade radius, approximate, then square back.
  const double theta13 = 5.371920351148152;
  const double norm1 = M.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > theta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
    M /= std::ldexp(1.0, squarings);
  }
  Mat E = expm_pade13(M);
  for (int i = 0; i < squarings; ++i) E = E * E;
  return E;
}

namespace {

struct PanelRule {
  std::vector<double> nodes;    // on [0,1]
  std::vector<double> weights;  // sum to 1
};

// Gauss-Legendre nodes on [-1,1] by Newton iteration on the recurrence,
// mapped to [0,1]. Deterministic for a given node count.
PanelRule gauss_rule(int k) {
  PanelRule rule;
  rule.nodes.resize(k);
  rule.weights.resize(k);
  for (int i = 0; i < k; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (k + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= k; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = k * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    {  // final polish of dp at the converged node
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= k; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = k * (x * p1 - p0) / (x * x - 1.0);
    }
    rule.nodes[i] = 0.5 * (1.0 + x);
    rule.weights[i] = 0.5 * (2.0 / ((1.0 - x * x) * dp * dp));
  }
  // ascending node order, fixed summation order
  for (int i = 0; i < k / 2; ++i) {
    std::swap(rule.nodes[i], rule.nodes[k - 1 - i]);
    std::swap(rule.weights[i], rule.weights[k - 1 - i]);
  }
  return rule;
}

Mat integrate_once(const std::function<Mat(double)>& f, double a, double b, const QuadSpec& spec,
                   Eigen::Index& rows, Eigen::Index& cols) {
  const int p = spec.panels;
  const double h = (b - a) / p;

  auto eval = [&](double s) {
    Mat v = f(s);
    if (rows < 0) {
      rows = v.rows();
      cols = v.cols();
    } else if (v.rows() != rows || v.cols() != cols) {
      throw DimensionError("integrate_mat: integrand changed shape at s=" + std::to_string(s));
    }
    return v;
  };

  if (spec.rule == QuadSpec::Rule::composite_simpson) {
    Mat left = eval(a);
    Mat acc = Mat::Zero(rows, cols);
    for (int i = 0; i < p; ++i) {
      const double x0 = a + i * h;
      const Mat mid = eval(x0 + 0.5 * h);
      const Mat right = (i + 1 == p) ? eval(b) : eval(x0 + h);
      acc += (h / 6.0) * (left + 4.0 * mid + right);
      left = right;
    }
    return acc;
  }

  const PanelRule rule = gauss_rule(spec.nodes_per_panel);
  Mat first = eval(a + h * rule.nodes[0]);
  Mat acc = Mat::Zero(rows, cols);
  acc += (h * rule.weights[0]) * first;
  for (int i = 0; i < p; ++i) {
    const double x0 = a + i * h;
    for (std::size_t q = (i == 0) ? 1 : 0; q < rule.nodes.size(); ++q)
      acc += (h * rule.weights[q]) * eval(x0 + h * rule.nodes[q]);
  }
  return acc;
}

}  // namespace

QuadResult integrate_mat(const std::function<Mat(double)>& f, double a, double b,
                         const QuadSpec& spec) {
  if (!(a <= b)) throw DomainError("integrate_mat: interval endpoints must satisfy a <= b");
  if (spec.panels < 1) throw DomainError("integrate_mat: panels must be >= 1");
  if (spec.rule == QuadSpec::Rule::gauss_legendre &&
      (spec.nodes_per_panel < 2 || spec.nodes_per_panel > 10))
    throw DomainError("integrate_mat: Gauss-Legendre nodes per panel must lie in [2,10]");

  Eigen::Index rows = -1, cols = -1;
  if (a == b) {
    Mat probe = f(a);
    return {Mat::Zero(probe.rows(), probe.cols()), 0.0};
  }

  const Mat coarse = integrate_once(f, a, b, spec, rows, cols);
  QuadSpec fine = spec;
  fine.panels = 2 * spec.panels;
  const Mat refined = integrate_once(f, a, b, fine, rows, cols);
  const double err = (coarse - refined).cwiseAbs().maxCoeff();
  return {coarse, err};
}

CholResult chol_spd(const Mat& M) {
  require_square(M, "chol_spd");
  require_finite(M, "chol_spd");
  const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
  const double asym = (M - M.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * scale)
    throw DomainError("chol_spd: matrix is not symmetric (max asymmetry " + std::to_string(asym) +
                      ")");

  const Eigen::Index n = M.rows();
  const Mat S = symmetrize(M);
  CholResult res;
  res.L = Mat::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double d = S(j, j) - res.L.row(j).head(j).squaredNorm();
    if (!(d > 0.0)) {
      res.ok = false;
      res.failed_pivot = static_cast<int>(j) + 1;
      return res;
    }
    res.L(j, j) = std::sqrt(d);
    for (Eigen::Index i = j + 1; i < n; ++i) {
      const double v = S(i, j) - res.L.row(i).head(j).dot(res.L.row(j).head(j));
      res.L(i, j) = v / res.L(j, j);
    }
  }
  res.ok = true;
  return res;
}

PencilExtremes sym_pencil_extremes(const Mat& S, const Mat& M) {
  require_square(S, "sym_pencil_extremes");
  if (S.rows() != M.rows() || S.cols() != M.cols())
    throw DimensionError("sym_pencil_extremes: pencil matrices must share shape");
  const CholResult chol = chol_spd(M);
  if (!chol.ok)
    throw DomainError("sym_pencil_extremes: mass matrix is not positive definite (pivot " +
                      std::to_string(chol.failed_pivot) + ")");

  const Mat Ssym = symmetrize(S);
  Eigen::GeneralizedSelfAdjointEigenSolver<Mat> es(Ssym, symmetrize(M));
  if (es.info() != Eigen::Success)
    throw ConvergenceError("sym_pencil_extremes: generalized eigensolver failed");

  const Vec vals = es.eigenvalues();
  const Mat vecs = es.eigenvectors();
  PencilExtremes ext{vals(0), vals(vals.size() - 1)};

  const double sn = Ssym.norm();
  const double mn = M.norm();
  for (Eigen::Index idx : {Eigen::Index(0), vals.size() - 1}) {
    const Vec v = vecs.col(idx);
    const double lam = vals(idx);
    const double resid = (Ssym * v - lam * (M * v)).norm() / std::max(1.0, v.norm());
    if (resid > 1e-8 * (sn + std::abs(lam) * mn) + 1e-13)
      throw ConvergenceError("sym_pencil_extremes: eigenpair residual " + std::to_string(resid) +
                             " above gate");
  }
  return ext;
}

double pencil_lambda_min(const Mat& S, const Mat& M) {
  return sym_pencil_extremes(S, M).lambda_min;
}

double pencil_lambda_max(const Mat& S, const Mat& M) {
  return sym_pencil_extremes(S, M).lambda_max;
}

Mat solve_lyapunov(const Mat& F, const Mat& Rhs) {
  require_square(F, "solve_lyapunov");
  if (Rhs.rows() != F.rows() || Rhs.cols() != F.cols())
    throw DimensionError("solve_lyapunov: right-hand side shape mismatch");
  const double rhs_scale = Rhs.cwiseAbs().maxCoeff();
  if ((Rhs - Rhs.transpose()).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, rhs_scale))
    throw DomainError("solve_lyapunov: right-hand side must be symmetric");

  const Eigen::Index n = F.rows();
  if (rhs_scale == 0.0) return Mat::Zero(n, n);

  // vec(F^T W) + vec(W F) = (I (x) F^T + F^T (x) I) vec(W)
  Mat K = Mat::Zero(n * n, n * n);
  const Mat Ft = F.transpose();
  for (Eigen::Index j = 0; j < n; ++j)
    K.block(j * n, j * n, n, n) += Ft;  // I (x) F^T
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index r = 0; r < n; ++r) K(j * n + r, i * n + r) += Ft(j, i);  // F^T (x) I

  Vec rhs(n * n);
  for (Eigen::Index j = 0; j < n; ++j) rhs.segment(j * n, n) = -Rhs.col(j);

  const Vec w = K.partialPivLu().solve(rhs);
  Mat W(n, n);
  for (Eigen::Index j = 0; j < n; ++j) W.col(j) = w.segment(j * n, n);
  W = symmetrize(W);

  const double resid = (F.transpose() * W + W * F + Rhs).norm();
  if (!W.allFinite() || resid > 1e-8 * Rhs.norm())
    throw ConvergenceError(
        "solve_lyapunov: residual " + std::to_string(resid) +
        " above gate; coefficient matrix is likely not Hurwitz or the pencil is near-defective");
  return W;
}

double opnorm(const Mat& M) {
  if (M.size() == 0) return 0.0;
  return M.jacobiSvd().singularValues()(0);
}

double weighted_opnorm(const Mat& X, const Mat& M) {
  const CholResult chol = chol_spd(M);
  if (!chol.ok) throw DomainError("weighted_opnorm: metric is not positive definite");
  // ||X||_M = sigma_max(L^T X L^-T) with M = L L^T
  const Mat B = chol.L.transpose() * X;
  const Mat Y = chol.L.transpose()
                    .triangularView<Eigen::Upper>()
                    .solve(B.transpose())
                    .transpose();
  return opnorm(Y);
}

double dual_to_primal_opnorm(const Mat& X, const Mat& M) {
  // sup ||X phi||_M / ||phi||_{M^-1} = sqrt(lambda_max(X^T M X, M^-1))
  const Mat Minv = spd_inverse(M);
  return std::sqrt(std::max(0.0, pencil_lambda_max(symmetrize(X.transpose() * M * X), Minv)));
}

double spectral_abscissa(const Mat& A) {
  require_square(A, "spectral_abscissa");
  Eigen::EigenSolver<Mat> es(A, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw ConvergenceError("spectral_abscissa: eigensolver failed");
  return es.eigenvalues().real().maxCoeff();
}

Mat spd_inverse(const Mat& M) {
  const CholResult chol = chol_spd(M);
  if (!chol.ok)
    throw DomainError("spd_inverse: matrix is not positive definite (pivot " +
                      std::to_string(chol.failed_pivot) + ")");
  const Eigen::Index n = M.rows();
  const Mat Linv = chol.L.triangularView<Eigen::Lower>().solve(Mat::Identity(n, n));
  return symmetrize(Linv.transpose() * Linv);
}

}  // namespace stabkit
