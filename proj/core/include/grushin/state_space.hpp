// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "grushin/problem.hpp"
#include "grushin/types.hpp"

namespace grushin {

/// Finite-dimensional state-space system
///
///     z'(t) = A z(t) + B u(t)
///     y(t)  = C z(t) + D u(t)
///
/// with the standing convention C = B* and D = 0 when omitted. The
/// skew_adjoint flag asserts A* = -A (validated on construction to
/// 1e-12 * ||A||); such generators propagate by isometries.
struct StateSpaceSystem {
  ComplexMatrix a;
  ComplexMatrix b;
  ComplexMatrix c;
  ComplexMatrix d;
  bool skew_adjoint = false;

  StateSpaceSystem(ComplexMatrix a_in, ComplexMatrix b_in);
  StateSpaceSystem(ComplexMatrix a_in, ComplexMatrix b_in, ComplexMatrix c_in,
                   ComplexMatrix d_in, bool skew = false);

  Index state_dim() const { return a.rows(); }
  Index input_dim() const { return b.cols(); }
  Index output_dim() const { return c.rows(); }

  /// The dual system (A*, C*, B*, D*): controllability of (A, B) corresponds
  /// to observability of the dual pair (A*, B*).
  StateSpaceSystem dual() const;
};

/// Uniformly sampled trajectory; states and outputs at each grid instant.
struct Trajectory {
  std::vector<double> times;
  std::vector<ComplexVector> states;
  std::vector<ComplexVector> outputs;
};

/// (lambda I - A)^{-1}. ErrorCode::Singular when lambda is (numerically) an
/// eigenvalue of A.
ComplexMatrix resolvent(const StateSpaceSystem& system, Complex lambda);

/// Transfer function H(lambda) = D + C (lambda I - A)^{-1} B.
ComplexMatrix transfer_function(const StateSpaceSystem& system, Complex lambda);

/// The Grushin problem of the system at a frequency:
/// [[lambda I - A, B], [C, D]].
GrushinProblem grushin_problem_at(const StateSpaceSystem& system, Complex lambda);

/// Assembles and inverts the system's Grushin problem at lambda (requires a
/// square coupling, input_dim == output_dim). For D = 0 the effective
/// Hamiltonian satisfies E_-+^{-1} = -H(lambda).
GrushinInverse grushin_at(const StateSpaceSystem& system, Complex lambda);

/// Exact-propagator simulation for piecewise-constant inputs.
///
/// The grid is t_k = k * dt' with dt' = t_end / K, K = round(t_end / dt).
/// input holds one column per step (m x K) or is empty for u = 0; each column
/// is held constant over its interval and propagated by the augmented matrix
/// exponential, so the per-step update is exact up to exponential tolerance.
/// outputs[k] = C z_k + D u_k (the final instant reuses the last sample).
Trajectory simulate(const StateSpaceSystem& system, const ComplexVector& z0,
                    const ComplexMatrix& input, double t_end, double dt);

/// Matrix mapping stacked per-step input samples (dimension m*K, time order)
/// to the final state z(t_end). Column block j is the state response to a
/// unit sample held over step j.
ComplexMatrix controllability_map(const StateSpaceSystem& system, double t_end,
                                  double dt);

/// Matrix mapping an initial state to stacked output samples
/// C exp(A t_k) z0 at the left endpoints t_0 .. t_{K-1} (dimension p*K).
ComplexMatrix observation_map(const StateSpaceSystem& system, double t_end,
                              double dt);

/// Relative discrepancy between the adjoint of the input-to-state map (in the
/// L2(0,T) scaling) and the time-reflected output map of the dual system.
/// Decays at first order in dt; exactly zero for A = 0.
double adjoint_factorization_check(const StateSpaceSystem& system, double t_end,
                                   double dt);

/// Feedthrough recovery: evaluates H on a real grid increasing to large
/// lambda and extrapolates the limit (two-term Richardson in 1/lambda).
/// Result is within ||C|| ||B|| / lambda_max + extrapolation error of D.
ComplexMatrix regularity_limit(const StateSpaceSystem& system,
                               const std::vector<double>& lambda_grid);

/// Log-spaced default grid 10^1 .. 10^6.
std::vector<double> default_regularity_grid();

}  // namespace grushin
