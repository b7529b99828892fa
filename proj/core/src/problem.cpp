// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#include "grushin/problem.hpp"

#include <Eigen/SVD>

#include "grushin/linalg.hpp"

namespace grushin {

ComplexMatrix GrushinProblem::assembled() const {
  return vstack(hstack(p, r_minus), hstack(r_plus, corner));
}

GrushinProblem assemble(const ComplexMatrix& p, const ComplexMatrix& r_minus,
                        const ComplexMatrix& r_plus, const ComplexMatrix& corner) {
  if (!p.is_square()) {
    raise(ErrorCode::DimensionMismatch, "P block must be square");
  }
  const Index n = p.rows();
  if (r_minus.rows() != n) {
    raise(ErrorCode::DimensionMismatch, "R_- must have as many rows as P");
  }
  if (r_plus.cols() != n) {
    raise(ErrorCode::DimensionMismatch, "R_+ must have as many columns as P");
  }
  if (corner.rows() != r_plus.rows() || corner.cols() != r_minus.cols()) {
    raise(ErrorCode::DimensionMismatch, "corner block shape must be m' x m");
  }
  return GrushinProblem{p, r_minus, r_plus, corner};
}

GrushinProblem assemble(const ComplexMatrix& p, const ComplexMatrix& r_minus,
                        const ComplexMatrix& r_plus) {
  return assemble(p, r_minus, r_plus,
                  ComplexMatrix::zero(r_plus.rows(), r_minus.cols()));
}

GrushinInverse invert_grushin(const GrushinProblem& problem) {
  if (problem.coupling_in_dim() != problem.coupling_out_dim()) {
    raise(ErrorCode::DimensionMismatch,
          "only index-0 problems (m == m') can be inverted");
  }
  const ComplexMatrix a = problem.assembled();
  const Index total = a.rows();
  const Index n = problem.state_dim();
  const Index m = problem.coupling_in_dim();

  // One dense factorization: SVD gives both the well-posedness test and the
  // inverse, so the Schur identities downstream stay genuine tests.
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      a.eigen(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double sigma_max = total > 0 ? sv(0) : 0.0;
  if (sigma_max == 0.0 ||
      sv(total - 1) < static_cast<double>(total) *
                          std::numeric_limits<double>::epsilon() * sigma_max) {
    raise(ErrorCode::IllPosed, "assembled Grushin matrix is singular");
  }
  Eigen::MatrixXcd inv =
      svd.matrixV() * sv.cwiseInverse().asDiagonal() * svd.matrixU().adjoint();
  ComplexMatrix full(std::move(inv));
  return GrushinInverse{full.block(0, 0, n, n), full.block(0, n, n, m),
                        full.block(n, 0, m, n), full.block(n, n, m, m)};
}

ComplexMatrix effective_hamiltonian(const GrushinProblem& problem) {
  return invert_grushin(problem).e_minus_plus;
}

ComplexMatrix recover_inverse(const GrushinInverse& inv) {
  if (!inv.e_minus_plus.is_square()) {
    raise(ErrorCode::EffectiveHamiltonianSingular,
          "effective Hamiltonian is not square");
  }
  ComplexMatrix e_mp_inv(0, 0);
  try {
    e_mp_inv = inverse(inv.e_minus_plus);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::Singular) {
      raise(ErrorCode::EffectiveHamiltonianSingular,
            "effective Hamiltonian is singular: lambda is in the spectrum");
    }
    throw;
  }
  return inv.e - inv.e_plus * e_mp_inv * inv.e_minus;
}

}  // namespace grushin
