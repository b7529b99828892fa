// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "grushin/problem.hpp"
#include "grushin/state_space.hpp"

namespace grushin {

/// Couplings for a second Grushin problem posed on the effective Hamiltonian:
/// n_minus maps a new input space into U (m x q), n_plus maps U into a new
/// output space (r x m).
struct IterationSpec {
  ComplexMatrix n_minus;
  ComplexMatrix n_plus;
};

/// Composed system (A, B N_-, N_+ C, N_+ D N_-); its transfer function is
/// H_1(lambda) = N_+ H(lambda) N_-. The construction assumes the base system
/// carries the C = B*, D = 0 convention.
StateSpaceSystem iterate_system(const StateSpaceSystem& system,
                                const IterationSpec& spec);

/// Inverse blocks of the composed problem [[lambda I - A, B N_-], [N_+ C, 0]]
/// obtained by composing the two stage inverses:
///
///     [ E - E_+ F E_-   E_+ F_+ ]
///     [ F_- E_-         -F_-+   ]
///
/// where (E, E_+, E_-, E_-+) inverts the base problem at lambda and
/// (F, F_+, F_-, F_-+) inverts [[E_-+, N_-], [N_+, 0]]. Agrees with direct
/// inversion of the assembled composed problem; both stages must be
/// well-posed (ErrorCode::IllPosed otherwise).
GrushinInverse iterated_inverse_blocks(const StateSpaceSystem& system,
                                       const IterationSpec& spec,
                                       Complex lambda);

}  // namespace grushin
