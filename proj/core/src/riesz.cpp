// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#include "grushin/riesz.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>

#include "grushin/linalg.hpp"

namespace grushin {

ModalSystem modal_decompose(const StateSpaceSystem& system) {
  const Eigendecomposition eig = eigendecomposition(system.a);
  const double smin = min_singular_value(eig.vectors);
  if (smin <= 1e-8 * operator_norm(eig.vectors)) {
    raise(ErrorCode::NonDiagonalizable,
          "eigenvector basis is numerically singular");
  }
  // A phi_n = mu_n phi_n is recorded as lambda_n = -mu_n.
  ComplexVector lambdas((-eig.values.eigen()).eval());
  const ComplexMatrix biorthogonal = inverse(eig.vectors).adjoint();
  const ComplexMatrix b_star_psi = system.b.adjoint() * biorthogonal;
  return ModalSystem{std::move(lambdas), eig.vectors, biorthogonal, b_star_psi};
}

Complex exp_moment_integral(Complex s, double t_end) {
  const Complex st = s * t_end;
  if (std::abs(st) < 1e-6) {
    // T * sum_k (-sT)^k / (k+1)!
    Complex term(1.0, 0.0);
    Complex sum(1.0, 0.0);
    for (int k = 1; k <= 4; ++k) {
      term *= -st / static_cast<double>(k + 1);
      sum += term;
    }
    return t_end * sum;
  }
  return (1.0 - std::exp(-st)) / s;
}

ComplexMatrix moment_gram(const ModalSystem& modal, double t_end) {
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    raise(ErrorCode::InvalidGrid, "time horizon must be positive");
  }
  const Index n = modal.mode_count();
  Eigen::MatrixXcd g(n, n);
  for (Index m = 0; m < n; ++m) {
    for (Index k = 0; k < n; ++k) {
      const Complex amp = (modal.b_star_psi.eigen().col(m).adjoint() *
                           modal.b_star_psi.eigen().col(k))
                              .value();
      const Complex s = std::conj(modal.eigenvalues[k]) + modal.eigenvalues[m];
      g(m, k) = amp * exp_moment_integral(s, t_end);
    }
  }
  g = 0.5 * (g + g.adjoint().eval());
  return ComplexMatrix(std::move(g));
}

ReachableDescription reachable_weights(const ModalSystem& modal, double t_end) {
  const ComplexMatrix gram = moment_gram(modal, t_end);
  const Index n = modal.mode_count();
  ReachableDescription out;
  out.time_horizon = t_end;
  out.weights.resize(static_cast<std::size_t>(n));
  double w_max = 0.0;
  for (Index i = 0; i < n; ++i) {
    out.weights[static_cast<std::size_t>(i)] = gram(i, i).real();
    w_max = std::max(w_max, out.weights[static_cast<std::size_t>(i)]);
  }
  const double tol =
      static_cast<double>(n) * std::numeric_limits<double>::epsilon() * w_max;
  for (Index i = 0; i < n; ++i) {
    if (out.weights[static_cast<std::size_t>(i)] <= tol) {
      raise(ErrorCode::DegenerateMode,
            "mode " + std::to_string(i) + " has vanishing moment norm");
    }
  }
  Eigen::VectorXd inv_sqrt(n);
  for (Index i = 0; i < n; ++i) {
    inv_sqrt(i) = 1.0 / std::sqrt(out.weights[static_cast<std::size_t>(i)]);
  }
  const Eigen::MatrixXcd normalized =
      inv_sqrt.asDiagonal() * gram.eigen() * inv_sqrt.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(normalized);
  if (solver.info() != Eigen::Success) {
    raise(ErrorCode::NonDiagonalizable, "normalized Gram eigensolve failed");
  }
  out.frame_lower = solver.eigenvalues().minCoeff();
  out.frame_upper = solver.eigenvalues().maxCoeff();
  return out;
}

}  // namespace grushin
