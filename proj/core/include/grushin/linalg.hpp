// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "grushin/types.hpp"

namespace grushin {

/// Relative rank tolerance used throughout: max(rows, cols) * machine epsilon.
/// Singular values (or pivots) below this fraction of the largest one are
/// treated as zero.
double default_rank_tolerance(const ComplexMatrix& m);

/// Solves matrix * x = rhs by LU with partial pivoting.
///
/// The residual satisfies ||matrix*x - rhs|| <= 100*eps*cond(matrix)*||rhs||
/// for well-conditioned inputs; deterministic for fixed input. Throws
/// ErrorCode::Singular when a pivot falls below the rank tolerance.
ComplexVector solve_linear(const ComplexMatrix& matrix, const ComplexVector& rhs);
ComplexMatrix solve_linear(const ComplexMatrix& matrix, const ComplexMatrix& rhs);

/// Dense inverse; ErrorCode::Singular if the matrix is numerically singular.
ComplexMatrix inverse(const ComplexMatrix& matrix);

/// Moore-Penrose pseudoinverse via SVD. rank_tol is relative to the largest
/// singular value; 0 selects the default rank tolerance. The zero matrix maps
/// to the zero pseudoinverse.
ComplexMatrix pseudo_inverse(const ComplexMatrix& matrix, double rank_tol = 0.0);

/// e^(matrix * t) by scaling-and-squaring with a Pade core. Relative accuracy
/// 1e-10 for ||matrix*t|| <= 50. Throws ErrorCode::Overflow when entries leave
/// the representable range.
ComplexMatrix matrix_exponential(const ComplexMatrix& matrix, double t = 1.0);

/// Smallest singular value, relative accuracy ~1e-9. Zero iff the matrix is
/// rank-deficient at that accuracy.
double min_singular_value(const ComplexMatrix& matrix);

/// Largest singular value (spectral norm).
double operator_norm(const ComplexMatrix& matrix);

/// All singular values, descending.
std::vector<double> singular_values(const ComplexMatrix& matrix);

/// 2-norm condition number; +infinity for singular input.
double condition_number(const ComplexMatrix& matrix);

struct Eigendecomposition {
  ComplexVector values;   // sorted by (imag, real) ascending
  ComplexMatrix vectors;  // unit columns, largest-magnitude entry made real positive
};

/// Dense eigendecomposition with a deterministic ordering and column phase.
/// The eigenvector matrix may be numerically singular for defective input;
/// callers that need a basis must check invertibility themselves.
Eigendecomposition eigendecomposition(const ComplexMatrix& matrix);

/// Eigenvalues only, sorted by (imag, real) ascending.
std::vector<Complex> eigenvalues(const ComplexMatrix& matrix);

/// Runs body(i) for i in [0, count), possibly on several threads. Safe for
/// bodies writing to disjoint slots; no ordering guarantees between calls.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace grushin
