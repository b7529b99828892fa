// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "grushin/state_space.hpp"

namespace grushin {

/// Eigenstructure of a diagonalizable generator in the convention
/// A phi_n = -lambda_n phi_n. basis columns are phi_n, biorthogonal columns
/// psi_n satisfy <phi_m, psi_n> = delta_mn, and b_star_psi column n holds
/// B* psi_n, the amplitude of the moment function
/// E_n(t) = e^{-conj(lambda_n) t} B* psi_n.
struct ModalSystem {
  ComplexVector eigenvalues;
  ComplexMatrix basis;
  ComplexMatrix biorthogonal;
  ComplexMatrix b_star_psi;

  Index mode_count() const { return eigenvalues.dim(); }
};

/// Builds the modal data of a system. Eigenvalues are recorded negated, per
/// the A phi_n = -lambda_n phi_n convention. ErrorCode::NonDiagonalizable
/// when the eigenvector matrix is numerically singular.
ModalSystem modal_decompose(const StateSpaceSystem& system);

/// exp-moment integral I(s, T) = (1 - e^{-sT}) / s with I(0, T) = T, using a
/// series for |sT| < 1e-6 to dodge cancellation (the s = 0 line occurs
/// exactly on skew-adjoint diagonals).
Complex exp_moment_integral(Complex s, double t_end);

/// Gram matrix of the moment family in L2(0, T; U):
///   G_mn = <E_n, E_m> = <B* psi_n, B* psi_m> * I(conj(lambda_n) + lambda_m, T)
/// in closed form (no quadrature). Hermitian PSD.
ComplexMatrix moment_gram(const ModalSystem& modal, double t_end);

/// Weights w_n = ||E_n||^2 and frame bounds of the weight-normalized Gram
/// D^{-1/2} G D^{-1/2}; frame_lower > 0 certifies the finite Riesz-family
/// hypothesis at this dimension.
struct ReachableDescription {
  std::vector<double> weights;
  double frame_lower = 0.0;
  double frame_upper = 0.0;
  double time_horizon = 0.0;
};

/// ErrorCode::DegenerateMode when some weight vanishes (mode unreachable).
ReachableDescription reachable_weights(const ModalSystem& modal, double t_end);

}  // namespace grushin
