// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#include "grushin/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <thread>

namespace grushin {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

Eigen::JacobiSVD<Eigen::MatrixXcd> thin_svd(const Eigen::MatrixXcd& m) {
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
}

}  // namespace

double default_rank_tolerance(const ComplexMatrix& m) {
  return static_cast<double>(std::max(m.rows(), m.cols())) * kEps;
}

namespace {

// Shared LU path: factors once, rejects pivots below the rank tolerance.
Eigen::MatrixXcd lu_solve(const ComplexMatrix& matrix, const Eigen::MatrixXcd& rhs) {
  if (!matrix.is_square()) {
    raise(ErrorCode::DimensionMismatch, "solve_linear requires a square matrix");
  }
  if (matrix.rows() != rhs.rows()) {
    raise(ErrorCode::DimensionMismatch, "solve_linear rhs dimension mismatch");
  }
  if (matrix.rows() == 0) return rhs;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(matrix.eigen());
  const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
  const double pivot_max = pivots.maxCoeff();
  if (pivot_max == 0.0 ||
      pivots.minCoeff() <= default_rank_tolerance(matrix) * pivot_max) {
    raise(ErrorCode::Singular, "matrix is singular at rank tolerance");
  }
  return lu.solve(rhs);
}

}  // namespace

ComplexVector solve_linear(const ComplexMatrix& matrix, const ComplexVector& rhs) {
  return ComplexVector(Eigen::VectorXcd(lu_solve(matrix, rhs.eigen())));
}

ComplexMatrix solve_linear(const ComplexMatrix& matrix, const ComplexMatrix& rhs) {
  return ComplexMatrix(lu_solve(matrix, rhs.eigen()));
}

ComplexMatrix inverse(const ComplexMatrix& matrix) {
  if (!matrix.is_square()) {
    raise(ErrorCode::DimensionMismatch, "inverse requires a square matrix");
  }
  return solve_linear(matrix, ComplexMatrix::identity(matrix.rows()));
}

ComplexMatrix pseudo_inverse(const ComplexMatrix& matrix, double rank_tol) {
  if (rank_tol < 0.0) {
    raise(ErrorCode::InvalidWeight, "rank tolerance must be nonnegative");
  }
  if (matrix.rows() == 0 || matrix.cols() == 0) {
    return ComplexMatrix(matrix.cols(), matrix.rows());
  }
  auto svd = thin_svd(matrix.eigen());
  const Eigen::VectorXd& sv = svd.singularValues();
  const double sigma_max = sv.size() ? sv(0) : 0.0;
  if (sigma_max == 0.0) return ComplexMatrix(matrix.cols(), matrix.rows());
  const double rel = rank_tol > 0.0 ? rank_tol : default_rank_tolerance(matrix);
  const double threshold = rel * sigma_max;
  Eigen::VectorXd inv_sv(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    inv_sv(i) = sv(i) > threshold ? 1.0 / sv(i) : 0.0;
  }
  Eigen::MatrixXcd result =
      svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().adjoint();
  return ComplexMatrix(std::move(result));
}

ComplexMatrix matrix_exponential(const ComplexMatrix& matrix, double t) {
  if (!matrix.is_square()) {
    raise(ErrorCode::DimensionMismatch, "matrix_exponential requires a square matrix");
  }
  if (!std::isfinite(t)) {
    raise(ErrorCode::NonFinite, "matrix_exponential time must be finite");
  }
  Eigen::MatrixXcd scaled = matrix.eigen() * t;
  Eigen::MatrixXcd result = scaled.exp();
  if (!result.allFinite()) {
    raise(ErrorCode::Overflow, "matrix exponential exceeds representable range");
  }
  return ComplexMatrix(std::move(result));
}

double min_singular_value(const ComplexMatrix& matrix) {
  if (matrix.rows() == 0 || matrix.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix.eigen());
  return svd.singularValues().minCoeff();
}

double operator_norm(const ComplexMatrix& matrix) {
  if (matrix.rows() == 0 || matrix.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix.eigen());
  return svd.singularValues().maxCoeff();
}

std::vector<double> singular_values(const ComplexMatrix& matrix) {
  if (matrix.rows() == 0 || matrix.cols() == 0) return {};
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix.eigen());
  const Eigen::VectorXd& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

double condition_number(const ComplexMatrix& matrix) {
  const auto sv = singular_values(matrix);
  if (sv.empty()) return 1.0;
  const double smin = sv.back();
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return sv.front() / smin;
}

Eigendecomposition eigendecomposition(const ComplexMatrix& matrix) {
  if (!matrix.is_square()) {
    raise(ErrorCode::DimensionMismatch, "eigendecomposition requires a square matrix");
  }
  const Index n = matrix.rows();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(matrix.eigen(), true);
  if (solver.info() != Eigen::Success) {
    raise(ErrorCode::NonDiagonalizable, "eigendecomposition failed to converge");
  }
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  const Eigen::VectorXcd& ev = solver.eigenvalues();
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    if (ev(a).imag() != ev(b).imag()) return ev(a).imag() < ev(b).imag();
    return ev(a).real() < ev(b).real();
  });
  Eigen::VectorXcd values(n);
  Eigen::MatrixXcd vectors(n, n);
  for (Index k = 0; k < n; ++k) {
    values(k) = ev(order[static_cast<std::size_t>(k)]);
    Eigen::VectorXcd v = solver.eigenvectors().col(order[static_cast<std::size_t>(k)]);
    const double vnorm = v.norm();
    if (vnorm > 0.0) v /= vnorm;
    // Canonical phase: rotate so the largest-magnitude entry is positive real.
    Index imax = 0;
    double amax = 0.0;
    for (Index i = 0; i < n; ++i) {
      const double a = std::abs(v(i));
      if (a > amax) {
        amax = a;
        imax = i;
      }
    }
    if (amax > 0.0) v *= std::conj(v(imax)) / amax;
    vectors.col(k) = v;
  }
  return Eigendecomposition{ComplexVector(std::move(values)),
                            ComplexMatrix(std::move(vectors))};
}

std::vector<Complex> eigenvalues(const ComplexMatrix& matrix) {
  if (!matrix.is_square()) {
    raise(ErrorCode::DimensionMismatch, "eigenvalues requires a square matrix");
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(matrix.eigen(), false);
  if (solver.info() != Eigen::Success) {
    raise(ErrorCode::NonDiagonalizable, "eigenvalue computation failed to converge");
  }
  std::vector<Complex> out(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + matrix.rows());
  std::stable_sort(out.begin(), out.end(), [](Complex a, Complex b) {
    if (a.imag() != b.imag()) return a.imag() < b.imag();
    return a.real() < b.real();
  });
  return out;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>({hw, count, 16});
  if (workers <= 1 || count < 4) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace grushin
