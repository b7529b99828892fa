// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "grushin/state_space.hpp"

namespace grushin {

enum class GramianKind { Controllability, Observability };

/// Finite-horizon Gramian by the augmented-matrix-exponential method:
///   W_o(T) = int_0^T exp(A* t) C* C exp(A t) dt
///   W_c(T) = int_0^T exp(A t) B B* exp(A* t) dt
/// Hermitian PSD up to 1e-10; quadrature-exact up to exponential tolerance.
ComplexMatrix gramian(const StateSpaceSystem& system, GramianKind kind,
                      double t_end);

/// Frequency sweep of the Hautus quantity sigma_min([i w I - A; C])^2.
struct HautusReport {
  std::vector<double> grid;             // scanned frequencies, ascending
  std::vector<double> per_freq_margin;  // sigma_min^2 per frequency
  double margin = 0.0;                  // min over the grid
  double argmin_freq = 0.0;             // frequency attaining the minimum
  // For skew-adjoint generators: the eigenfrequencies Im(spec A) and whether
  // the argmin sits within one local grid step of one of them.
  std::vector<double> eigenfrequencies;
  bool argmin_near_eigenfrequency = false;
};

/// Scans the user grid refined with the imaginary parts of the eigenvalues of
/// A that fall inside the grid range (minima localize there for skew-adjoint
/// generators). Per-frequency work is run in parallel; the reduction order is
/// fixed. ErrorCode::EmptyGrid when no samples are given.
HautusReport hautus_margin(const StateSpaceSystem& system,
                           std::vector<double> omega_grid);

/// A certified lower bound for the Grushin quadratic form
///   ||v||^2 + ||v_+||^2 >= C (||u||^2 + ||u_-||^2),   A(lambda)[u;u_-]=[v;v_+]
/// assembled from computable norms along the right-inverse projection chain.
/// The certificate is valid by construction (certified <= true constant),
/// generally loose.
struct CertifiedBound {
  double certified_constant = 0.0;  // C_cert
  double true_constant = 0.0;       // sigma_min(A(lambda))^2
  double right_inverse_norm = 0.0;  // ||P_+|| = ||pinv(B*)||
  double restricted_norm = 0.0;     // ||(lambda I - A)|_{Im B}||
  // Remaining chain quantities, recorded rather than assumed O(1).
  double kernel_coercivity = 0.0;   // sigma_min of (I-Pi)(lambda-A) on ker B*
  double cross_coupling_norm = 0.0; // ||Pi (lambda-A) (I-Pi)||
  bool hypothesis_ok = false;       // B* surjective at rank tolerance
};

/// Requires C = B* and B != 0; ErrorCode::HypothesisViolated when B* has no
/// bounded right inverse (rank B < input_dim).
CertifiedBound certified_bound(const StateSpaceSystem& system, Complex lambda);

/// Hautus sweep with the state norm replaced by the weighted eigenbasis norm
/// ||z||_w^2 = sum |a_n|^2 / w_n, z = sum a_n phi_n (diagonal congruence by
/// diag(sqrt(w)) in the eigenbasis). Weights are matched to eigenvalues in
/// (imag, real) ascending order. All-ones weights reduce to hautus_margin
/// (exactly so for normal A). Errors: NonDiagonalizable, InvalidWeight,
/// EmptyGrid.
HautusReport weighted_hautus(const StateSpaceSystem& system,
                             const std::vector<double>& weights,
                             std::vector<double> omega_grid);

/// Default observation horizon 2*pi / (smallest spectral gap of A); one
/// period of the slowest dynamic. Falls back to 2*pi when the gap degenerates.
double default_observability_time(const StateSpaceSystem& system);

}  // namespace grushin
