// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "grushin/types.hpp"

namespace grushin {

/// The 2x2 block augmentation
///
///     [ P    R_- ]
///     [ R_+  K   ]
///
/// of an operator P with column coupling R_-, row coupling R_+ and corner
/// block K (zero or a feedthrough). P is n x n, R_- is n x m, R_+ is m' x n,
/// K is m' x m; the assembled matrix is (n+m') x (n+m).
struct GrushinProblem {
  ComplexMatrix p;
  ComplexMatrix r_minus;
  ComplexMatrix r_plus;
  ComplexMatrix corner;

  Index state_dim() const { return p.rows(); }
  Index coupling_in_dim() const { return r_minus.cols(); }
  Index coupling_out_dim() const { return r_plus.rows(); }

  /// The dense assembled block matrix.
  ComplexMatrix assembled() const;
};

/// Blocks of the inverse of a well-posed problem:
///
///     [ E    E_+  ]
///     [ E_-  E_-+ ]
///
/// e_minus_plus is the effective Hamiltonian: its invertibility controls the
/// invertibility of P.
struct GrushinInverse {
  ComplexMatrix e;
  ComplexMatrix e_plus;
  ComplexMatrix e_minus;
  ComplexMatrix e_minus_plus;
};

/// Builds a problem after checking block compatibility
/// (ErrorCode::DimensionMismatch otherwise).
GrushinProblem assemble(const ComplexMatrix& p, const ComplexMatrix& r_minus,
                        const ComplexMatrix& r_plus, const ComplexMatrix& corner);

/// Zero-corner convenience overload.
GrushinProblem assemble(const ComplexMatrix& p, const ComplexMatrix& r_minus,
                        const ComplexMatrix& r_plus);

/// Inverts the assembled matrix with one dense factorization and splits the
/// blocks. Requires a square assembled matrix (index 0, i.e. m == m');
/// non-square problems are rejected with DimensionMismatch. Declared IllPosed
/// when sigma_min < (n+m) * eps * sigma_max.
GrushinInverse invert_grushin(const GrushinProblem& problem);

/// The lower-right inverse block E_-+. When the corner is K and P invertible,
/// E_-+^{-1} = K - R_+ P^{-1} R_- (so -R_+ P^{-1} R_- for K = 0).
ComplexMatrix effective_hamiltonian(const GrushinProblem& problem);

/// P^{-1} = E - E_+ E_-+^{-1} E_-. Throws EffectiveHamiltonianSingular when
/// E_-+ is not invertible, i.e. when P itself is (numerically) singular.
ComplexMatrix recover_inverse(const GrushinInverse& inverse);

}  // namespace grushin
