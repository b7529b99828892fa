// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#include "grushin/state_space.hpp"

#include <cmath>
#include <limits>

#include "grushin/linalg.hpp"

namespace grushin {

namespace {

void validate_system(const StateSpaceSystem& s) {
  if (!s.a.is_square()) {
    raise(ErrorCode::DimensionMismatch, "A must be square");
  }
  const Index n = s.a.rows();
  if (s.b.rows() != n) {
    raise(ErrorCode::DimensionMismatch, "B must have state_dim rows");
  }
  if (s.c.cols() != n) {
    raise(ErrorCode::DimensionMismatch, "C must have state_dim columns");
  }
  if (s.d.rows() != s.c.rows() || s.d.cols() != s.b.cols()) {
    raise(ErrorCode::DimensionMismatch, "D must be output_dim x input_dim");
  }
  if (s.skew_adjoint && !s.a.is_skew_adjoint(1e-12)) {
    raise(ErrorCode::SkewAdjointViolated,
          "skew_adjoint flag set but ||A* + A|| > 1e-12 * ||A||");
  }
}

}  // namespace

StateSpaceSystem::StateSpaceSystem(ComplexMatrix a_in, ComplexMatrix b_in)
    : a(std::move(a_in)), b(std::move(b_in)), c(b.adjoint()),
      d(ComplexMatrix::zero(b.cols(), b.cols())) {
  validate_system(*this);
}

StateSpaceSystem::StateSpaceSystem(ComplexMatrix a_in, ComplexMatrix b_in,
                                   ComplexMatrix c_in, ComplexMatrix d_in,
                                   bool skew)
    : a(std::move(a_in)), b(std::move(b_in)), c(std::move(c_in)),
      d(std::move(d_in)), skew_adjoint(skew) {
  validate_system(*this);
}

StateSpaceSystem StateSpaceSystem::dual() const {
  return StateSpaceSystem(a.adjoint(), c.adjoint(), b.adjoint(), d.adjoint(),
                          skew_adjoint);
}

namespace {

ComplexMatrix shifted(const StateSpaceSystem& s, Complex lambda) {
  return ComplexMatrix(
      (lambda * Eigen::MatrixXcd::Identity(s.state_dim(), s.state_dim()) -
       s.a.eigen())
          .eval());
}

}  // namespace

ComplexMatrix resolvent(const StateSpaceSystem& system, Complex lambda) {
  return inverse(shifted(system, lambda));
}

ComplexMatrix transfer_function(const StateSpaceSystem& system, Complex lambda) {
  return system.d + system.c * solve_linear(shifted(system, lambda), system.b);
}

GrushinProblem grushin_problem_at(const StateSpaceSystem& system, Complex lambda) {
  return assemble(shifted(system, lambda), system.b, system.c, system.d);
}

GrushinInverse grushin_at(const StateSpaceSystem& system, Complex lambda) {
  if (system.input_dim() != system.output_dim()) {
    raise(ErrorCode::DimensionMismatch,
          "grushin_at requires a square coupling (input_dim == output_dim)");
  }
  return invert_grushin(grushin_problem_at(system, lambda));
}

namespace {

struct StepPropagator {
  ComplexMatrix f;  // exp(A dt)
  ComplexMatrix g;  // int_0^dt exp(A (dt - s)) B ds
};

// Zero-order-hold discretization through one augmented exponential.
StepPropagator discretize(const StateSpaceSystem& s, double dt) {
  const Index n = s.state_dim();
  const Index m = s.input_dim();
  Eigen::MatrixXcd aug = Eigen::MatrixXcd::Zero(n + m, n + m);
  aug.topLeftCorner(n, n) = s.a.eigen();
  aug.topRightCorner(n, m) = s.b.eigen();
  const ComplexMatrix e = matrix_exponential(ComplexMatrix(std::move(aug)), dt);
  return StepPropagator{e.block(0, 0, n, n), e.block(0, n, n, m)};
}

struct Grid {
  Index steps;
  double dt;
};

Grid make_grid(double t_end, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt) || !std::isfinite(t_end)) {
    raise(ErrorCode::InvalidGrid, "dt must be positive and finite");
  }
  if (t_end < dt) {
    raise(ErrorCode::InvalidGrid, "t_end must be at least dt");
  }
  const Index steps = static_cast<Index>(std::llround(t_end / dt));
  return Grid{std::max<Index>(steps, 1), t_end / std::max<Index>(steps, 1)};
}

}  // namespace

Trajectory simulate(const StateSpaceSystem& system, const ComplexVector& z0,
                    const ComplexMatrix& input, double t_end, double dt) {
  const Grid grid = make_grid(t_end, dt);
  const Index n = system.state_dim();
  const Index m = system.input_dim();
  if (z0.dim() != n) {
    raise(ErrorCode::InvalidGrid, "initial state dimension mismatch");
  }
  const bool has_input = !input.empty();
  if (has_input && (input.rows() != m || input.cols() != grid.steps)) {
    raise(ErrorCode::InvalidGrid,
          "input must be input_dim x steps (one column per interval)");
  }
  const StepPropagator prop = discretize(system, grid.dt);

  Trajectory traj;
  traj.times.reserve(static_cast<std::size_t>(grid.steps) + 1);
  traj.states.reserve(static_cast<std::size_t>(grid.steps) + 1);
  traj.outputs.reserve(static_cast<std::size_t>(grid.steps) + 1);

  Eigen::VectorXcd z = z0.eigen();
  const Eigen::VectorXcd u_zero = Eigen::VectorXcd::Zero(m);
  auto sample_u = [&](Index k) -> Eigen::VectorXcd {
    if (!has_input) return u_zero;
    const Index kk = std::min(k, grid.steps - 1);
    return input.eigen().col(kk);
  };
  for (Index k = 0; k <= grid.steps; ++k) {
    const Eigen::VectorXcd u = sample_u(k);
    traj.times.push_back(static_cast<double>(k) * grid.dt);
    traj.states.push_back(ComplexVector(Eigen::VectorXcd(z)));
    traj.outputs.push_back(
        ComplexVector((system.c.eigen() * z + system.d.eigen() * u).eval()));
    if (k < grid.steps) {
      z = prop.f.eigen() * z + prop.g.eigen() * u;
    }
  }
  return traj;
}

ComplexMatrix controllability_map(const StateSpaceSystem& system, double t_end,
                                  double dt) {
  const Grid grid = make_grid(t_end, dt);
  const Index n = system.state_dim();
  const Index m = system.input_dim();
  const StepPropagator prop = discretize(system, grid.dt);
  Eigen::MatrixXcd map(n, m * grid.steps);
  // Response to a unit sample in slot j: exp(A dt)^(K-1-j) * G.
  Eigen::MatrixXcd response = prop.g.eigen();
  for (Index j = grid.steps - 1; j >= 0; --j) {
    map.middleCols(j * m, m) = response;
    if (j > 0) response = (prop.f.eigen() * response).eval();
  }
  return ComplexMatrix(std::move(map));
}

ComplexMatrix observation_map(const StateSpaceSystem& system, double t_end,
                              double dt) {
  const Grid grid = make_grid(t_end, dt);
  const Index n = system.state_dim();
  const Index p = system.output_dim();
  const StepPropagator prop = discretize(system, grid.dt);
  Eigen::MatrixXcd map(p * grid.steps, n);
  Eigen::MatrixXcd state_to_state = Eigen::MatrixXcd::Identity(n, n);
  for (Index k = 0; k < grid.steps; ++k) {
    map.middleRows(k * p, p) = system.c.eigen() * state_to_state;
    if (k + 1 < grid.steps) {
      state_to_state = (prop.f.eigen() * state_to_state).eval();
    }
  }
  return ComplexMatrix(std::move(map));
}

double adjoint_factorization_check(const StateSpaceSystem& system, double t_end,
                                   double dt) {
  const Grid grid = make_grid(t_end, dt);
  const Index m = system.input_dim();
  const ComplexMatrix map = controllability_map(system, t_end, dt);
  // Adjoint in the L2(0,T) pairing of piecewise-constant inputs: M* / dt.
  const Eigen::MatrixXcd adj = map.eigen().adjoint() / grid.dt;
  // Time-reflected output map of the dual system (A*, B*): row block j reads
  // out B* exp(A* t_{K-1-j}).
  const ComplexMatrix dual_map = observation_map(system.dual(), t_end, dt);
  Eigen::MatrixXcd reflected(dual_map.rows(), dual_map.cols());
  for (Index j = 0; j < grid.steps; ++j) {
    reflected.middleRows(j * m, m) =
        dual_map.eigen().middleRows((grid.steps - 1 - j) * m, m);
  }
  const double ref_norm = reflected.norm();
  if (ref_norm == 0.0) return (adj - reflected).norm();
  return (adj - reflected).norm() / ref_norm;
}

ComplexMatrix regularity_limit(const StateSpaceSystem& system,
                               const std::vector<double>& lambda_grid) {
  if (lambda_grid.size() < 2) {
    raise(ErrorCode::EmptyGrid, "regularity grid needs at least two points");
  }
  for (std::size_t i = 1; i < lambda_grid.size(); ++i) {
    if (!(lambda_grid[i] > lambda_grid[i - 1])) {
      raise(ErrorCode::InvalidGrid, "regularity grid must be increasing");
    }
  }
  std::vector<ComplexMatrix> values;
  values.reserve(lambda_grid.size());
  for (double lambda : lambda_grid) {
    values.push_back(transfer_function(system, Complex(lambda, 0.0)));
  }
  // H(lambda) = D + CB/lambda + O(1/lambda^2): eliminate the 1/lambda term
  // from the two largest grid points.
  const double l1 = lambda_grid[lambda_grid.size() - 2];
  const double l2 = lambda_grid[lambda_grid.size() - 1];
  const ComplexMatrix& h1 = values[values.size() - 2];
  const ComplexMatrix& h2 = values[values.size() - 1];
  return Complex(1.0 / (l2 - l1), 0.0) * (l2 * h2 - l1 * h1);
}

std::vector<double> default_regularity_grid() {
  std::vector<double> grid;
  for (int decade = 1; decade <= 6; ++decade) {
    grid.push_back(std::pow(10.0, decade));
  }
  return grid;
}

}  // namespace grushin
