// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#include "grushin/analysis.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "grushin/linalg.hpp"

namespace grushin {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

namespace {

// int_0^T exp(M* s) Q exp(M s) ds via one exponential of [[-M*, Q], [0, M]].
ComplexMatrix gramian_integral(const Eigen::MatrixXcd& m,
                               const Eigen::MatrixXcd& q, double t_end) {
  const Index n = m.rows();
  Eigen::MatrixXcd aug = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  aug.topLeftCorner(n, n) = -m.adjoint();
  aug.topRightCorner(n, n) = q;
  aug.bottomRightCorner(n, n) = m;
  const ComplexMatrix e = matrix_exponential(ComplexMatrix(std::move(aug)), t_end);
  const Eigen::MatrixXcd f12 = e.block(0, n, n, n).eigen();
  const Eigen::MatrixXcd f22 = e.block(n, n, n, n).eigen();
  Eigen::MatrixXcd w = f22.adjoint() * f12;
  w = 0.5 * (w + w.adjoint().eval());  // numerically hermitize
  return ComplexMatrix(std::move(w));
}

}  // namespace

ComplexMatrix gramian(const StateSpaceSystem& system, GramianKind kind,
                      double t_end) {
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    raise(ErrorCode::InvalidGrid, "gramian horizon must be positive");
  }
  if (kind == GramianKind::Observability) {
    return gramian_integral(system.a.eigen(),
                            (system.c.eigen().adjoint() * system.c.eigen()).eval(),
                            t_end);
  }
  return gramian_integral(system.a.eigen().adjoint(),
                          (system.b.eigen() * system.b.eigen().adjoint()).eval(),
                          t_end);
}

namespace {

// Shared sweep machinery: evaluates sigma_min(stack * basis_scale)^2 over the
// grid in parallel, reduces in index order.
HautusReport run_sweep(const StateSpaceSystem& system,
                       std::vector<double> omega_grid,
                       const Eigen::MatrixXcd* congruence) {
  if (omega_grid.empty()) {
    raise(ErrorCode::EmptyGrid, "frequency grid is empty");
  }
  std::sort(omega_grid.begin(), omega_grid.end());
  const double lo = omega_grid.front();
  const double hi = omega_grid.back();

  // Refine with in-range eigenfrequencies; minima sit there for skew A.
  const std::vector<Complex> spec = eigenvalues(system.a);
  for (const Complex& mu : spec) {
    const double w = mu.imag();
    if (w >= lo && w <= hi) omega_grid.push_back(w);
  }
  std::sort(omega_grid.begin(), omega_grid.end());
  omega_grid.erase(std::unique(omega_grid.begin(), omega_grid.end()),
                   omega_grid.end());

  const Index n = system.state_dim();
  const Index p = system.output_dim();
  HautusReport report;
  report.grid = omega_grid;
  report.per_freq_margin.assign(omega_grid.size(), 0.0);

  parallel_for(omega_grid.size(), [&](std::size_t k) {
    Eigen::MatrixXcd stack(n + p, n);
    stack.topRows(n) =
        Complex(0.0, omega_grid[k]) * Eigen::MatrixXcd::Identity(n, n) -
        system.a.eigen();
    stack.bottomRows(p) = system.c.eigen();
    if (congruence != nullptr) stack = (stack * (*congruence)).eval();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stack);
    const double smin = svd.singularValues().minCoeff();
    report.per_freq_margin[k] = smin * smin;
  });

  std::size_t argmin = 0;
  for (std::size_t k = 1; k < report.per_freq_margin.size(); ++k) {
    if (report.per_freq_margin[k] < report.per_freq_margin[argmin]) argmin = k;
  }
  report.margin = report.per_freq_margin[argmin];
  report.argmin_freq = report.grid[argmin];

  if (system.skew_adjoint) {
    for (const Complex& mu : spec) report.eigenfrequencies.push_back(mu.imag());
    std::sort(report.eigenfrequencies.begin(), report.eigenfrequencies.end());
    // Local grid step around the argmin.
    double step = hi > lo ? (hi - lo) : 1.0;
    if (report.grid.size() > 1) {
      double left = argmin > 0 ? report.grid[argmin] - report.grid[argmin - 1]
                               : std::numeric_limits<double>::infinity();
      double right = argmin + 1 < report.grid.size()
                         ? report.grid[argmin + 1] - report.grid[argmin]
                         : std::numeric_limits<double>::infinity();
      step = std::min(left, right);
      if (!std::isfinite(step)) step = hi > lo ? (hi - lo) : 1.0;
    }
    for (double ef : report.eigenfrequencies) {
      if (std::abs(ef - report.argmin_freq) <= step) {
        report.argmin_near_eigenfrequency = true;
        break;
      }
    }
  }
  return report;
}

}  // namespace

HautusReport hautus_margin(const StateSpaceSystem& system,
                           std::vector<double> omega_grid) {
  return run_sweep(system, std::move(omega_grid), nullptr);
}

CertifiedBound certified_bound(const StateSpaceSystem& system, Complex lambda) {
  const Index n = system.state_dim();
  const Index m = system.input_dim();
  if ((system.c - system.b.adjoint()).norm() >
      1e-12 * std::max(1.0, system.b.norm())) {
    raise(ErrorCode::HypothesisViolated, "certified_bound requires C = B*");
  }
  if (system.b.norm() == 0.0) {
    raise(ErrorCode::HypothesisViolated, "B = 0: B* has no right inverse");
  }

  // Full SVD of B splits X into Im B (+) ker B*.
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      system.b.eigen(), Eigen::ComputeFullU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double sigma_max = sv(0);
  const double tol = default_rank_tolerance(system.b) * sigma_max;
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol) ++rank;
  }
  const bool surjective = (rank == m);
  if (!surjective) {
    raise(ErrorCode::HypothesisViolated,
          "B* is not surjective at rank tolerance: right inverse unbounded");
  }

  const Eigen::MatrixXcd range_basis = svd.matrixU().leftCols(rank);
  const Eigen::MatrixXcd kernel_basis = svd.matrixU().rightCols(n - rank);
  const Eigen::MatrixXcd q =
      lambda * Eigen::MatrixXcd::Identity(n, n) - system.a.eigen();

  CertifiedBound out;
  out.hypothesis_ok = surjective;
  out.right_inverse_norm = 1.0 / sv(rank - 1);
  out.restricted_norm = operator_norm(ComplexMatrix((q * range_basis).eval()));
  out.cross_coupling_norm = operator_norm(
      ComplexMatrix((range_basis.adjoint() * q * kernel_basis).eval()));
  out.kernel_coercivity =
      (n == rank) ? std::numeric_limits<double>::infinity()
                  : min_singular_value(ComplexMatrix(
                        (kernel_basis.adjoint() * q * kernel_basis).eval()));

  // Chain of exact inequalities, with s = ||v||, t = ||v_+||, w = (I-Pi)u:
  //   ||Pi u||  = ||P_+ v_+||            <= p t
  //   ||w||     <= (s + r p t) / sigma       [(I-Pi)Q(I-Pi) w = (I-Pi)v - (I-Pi)Q Pi u]
  //   ||u_-||   <= p (s + r p t) + p x ||w||  [u_- = P_-(v - Q u), P_- = P_- Pi]
  // with p = ||P_+||, r = ||Q|_{Im B}||, x the cross norm, sigma the kernel
  // coercivity. Collecting coefficients and applying Cauchy-Schwarz gives
  // ||u||^2 + ||u_-||^2 <= kappa^2 (s^2 + t^2), C_cert = 1 / kappa^2.
  const double p = out.right_inverse_norm;
  const double r = out.restricted_norm;
  const double x = out.cross_coupling_norm;
  const double inv_sigma =
      std::isinf(out.kernel_coercivity) ? 0.0 : 1.0 / out.kernel_coercivity;
  const double a1 = inv_sigma;
  const double a2 = p + r * p * inv_sigma;
  const double b1 = p * (1.0 + x * inv_sigma);
  const double b2 = p * p * r * (1.0 + x * inv_sigma);
  const double kappa_sq = a1 * a1 + a2 * a2 + b1 * b1 + b2 * b2;
  out.certified_constant = kappa_sq > 0.0 ? 1.0 / kappa_sq : 0.0;

  const double smin = min_singular_value(
      assemble(ComplexMatrix(Eigen::MatrixXcd(q)), system.b, system.c,
               ComplexMatrix::zero(system.c.rows(), m))
          .assembled());
  out.true_constant = smin * smin;
  return out;
}

HautusReport weighted_hautus(const StateSpaceSystem& system,
                             const std::vector<double>& weights,
                             std::vector<double> omega_grid) {
  const Index n = system.state_dim();
  if (static_cast<Index>(weights.size()) != n) {
    raise(ErrorCode::DimensionMismatch,
          "one weight per eigen-direction is required");
  }
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      raise(ErrorCode::InvalidWeight, "weights must be strictly positive");
    }
  }
  const bool all_ones =
      std::all_of(weights.begin(), weights.end(), [](double w) { return w == 1.0; });
  const double a_norm = system.a.norm();
  const bool normal =
      (system.a.eigen() * system.a.eigen().adjoint() -
       system.a.eigen().adjoint() * system.a.eigen())
          .norm() <= 1e-12 * std::max(1.0, a_norm * a_norm);
  if (all_ones && normal) {
    // Unitary congruence leaves every singular value unchanged.
    return hautus_margin(system, std::move(omega_grid));
  }

  Eigen::MatrixXcd basis;
  if (normal) {
    // Schur vectors of a normal matrix form an orthonormal eigenbasis.
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(system.a.eigen(), true);
    if (schur.info() != Eigen::Success) {
      raise(ErrorCode::NonDiagonalizable, "Schur decomposition failed");
    }
    const Eigen::VectorXcd diag = schur.matrixT().diagonal();
    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
      if (diag(a).imag() != diag(b).imag()) return diag(a).imag() < diag(b).imag();
      return diag(a).real() < diag(b).real();
    });
    basis.resize(n, n);
    for (Index k = 0; k < n; ++k) {
      basis.col(k) = schur.matrixU().col(order[static_cast<std::size_t>(k)]);
    }
  } else {
    const Eigendecomposition eig = eigendecomposition(system.a);
    basis = eig.vectors.eigen();
    // Defective matrices surface as a nearly collinear computed basis; the
    // sqrt(eps)-level condition cutoff catches them.
    const double smin = min_singular_value(eig.vectors);
    if (smin <= 1e-8 * operator_norm(eig.vectors)) {
      raise(ErrorCode::NonDiagonalizable,
            "eigenvector basis is numerically singular");
    }
  }
  Eigen::VectorXd scale(n);
  for (Index i = 0; i < n; ++i) scale(i) = std::sqrt(weights[static_cast<std::size_t>(i)]);
  const Eigen::MatrixXcd congruence = basis * scale.asDiagonal();
  return run_sweep(system, std::move(omega_grid), &congruence);
}

double default_observability_time(const StateSpaceSystem& system) {
  const std::vector<Complex> spec = eigenvalues(system.a);
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < spec.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.size(); ++j) {
      gap = std::min(gap, std::abs(spec[i] - spec[j]));
    }
  }
  if (!std::isfinite(gap) || gap <= 0.0) return kTwoPi;
  return kTwoPi / gap;
}

}  // namespace grushin
