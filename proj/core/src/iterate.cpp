// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#include "grushin/iterate.hpp"

namespace grushin {

StateSpaceSystem iterate_system(const StateSpaceSystem& system,
                                const IterationSpec& spec) {
  if (spec.n_minus.rows() != system.input_dim()) {
    raise(ErrorCode::DimensionMismatch,
          "N_- must map the new input space into the base input space");
  }
  if (spec.n_plus.cols() != system.output_dim()) {
    raise(ErrorCode::DimensionMismatch,
          "N_+ must map the base output space into the new output space");
  }
  return StateSpaceSystem(system.a, system.b * spec.n_minus,
                          spec.n_plus * system.c,
                          spec.n_plus * system.d * spec.n_minus,
                          system.skew_adjoint);
}

GrushinInverse iterated_inverse_blocks(const StateSpaceSystem& system,
                                       const IterationSpec& spec,
                                       Complex lambda) {
  if (spec.n_minus.rows() != system.input_dim() ||
      spec.n_plus.cols() != system.output_dim()) {
    raise(ErrorCode::DimensionMismatch, "coupling shapes incompatible");
  }
  GrushinInverse base;
  try {
    base = grushin_at(system, lambda);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::IllPosed) {
      raise(ErrorCode::IllPosed, "base Grushin problem ill-posed at lambda");
    }
    throw;
  }
  GrushinInverse secondary;
  try {
    secondary = invert_grushin(
        assemble(base.e_minus_plus, spec.n_minus, spec.n_plus));
  } catch (const Error& err) {
    if (err.code() == ErrorCode::IllPosed) {
      raise(ErrorCode::IllPosed,
            "secondary Grushin problem on E_-+ ill-posed at lambda");
    }
    throw;
  }
  return GrushinInverse{
      base.e - base.e_plus * secondary.e * base.e_minus,
      base.e_plus * secondary.e_plus,
      secondary.e_minus * base.e_minus,
      -secondary.e_minus_plus,
  };
}

}  // namespace grushin
