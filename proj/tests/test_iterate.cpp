// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "grushin/iterate.hpp"
#include "grushin/linalg.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace grushin;
using testing::Rng;

namespace {

StateSpaceSystem s2() {
  return StateSpaceSystem(ComplexMatrix{{Complex(0, 0), Complex(1, 0)},
                                        {Complex(-1, 0), Complex(0, 0)}},
                          ComplexMatrix{{Complex(0, 0)}, {Complex(1, 0)}});
}

GrushinInverse direct_composed_inverse(const StateSpaceSystem& sys,
                                       const IterationSpec& spec,
                                       Complex lambda) {
  const ComplexMatrix p(
      (lambda * Eigen::MatrixXcd::Identity(sys.state_dim(), sys.state_dim()) -
       sys.a.eigen())
          .eval());
  return invert_grushin(
      assemble(p, sys.b * spec.n_minus, spec.n_plus * sys.c));
}

double block_distance(const GrushinInverse& x, const GrushinInverse& y) {
  return (x.e - y.e).norm() + (x.e_plus - y.e_plus).norm() +
         (x.e_minus - y.e_minus).norm() +
         (x.e_minus_plus - y.e_minus_plus).norm();
}

}  // namespace

TEST_CASE("iterate_system: identity couplings change nothing") {
  const IterationSpec spec{ComplexMatrix::identity(1), ComplexMatrix::identity(1)};
  const StateSpaceSystem composed = iterate_system(s2(), spec);
  for (Complex lambda : {Complex(1, 0), Complex(2, 0), Complex(1, 1)}) {
    const ComplexMatrix base = transfer_function(s2(), lambda);
    const ComplexMatrix iter = transfer_function(composed, lambda);
    CHECK((base - iter).norm() <= 1e-14);
  }
}

TEST_CASE("iterate_system: scalar composition scales the transfer function") {
  const IterationSpec spec{ComplexMatrix{{Complex(3, 0)}},
                           ComplexMatrix{{Complex(2, 0)}}};
  const StateSpaceSystem composed = iterate_system(s2(), spec);
  // H1(1) = 2 * H(1) * 3 = 6 * 0.5 = 3.
  CHECK(std::abs(transfer_function(composed, Complex(1, 0))(0, 0) -
                 Complex(3, 0)) < 1e-12);
}

TEST_CASE("iterate_system: rectangular N_- widens the input space") {
  const IterationSpec spec{ComplexMatrix{{Complex(1, 0), Complex(0, 2)}},
                           ComplexMatrix{{Complex(2, 0)}}};
  const StateSpaceSystem composed = iterate_system(s2(), spec);
  CHECK(composed.input_dim() == 2);
  CHECK(composed.output_dim() == 1);
  const Complex lambda(1.5, 0.25);
  const ComplexMatrix expected =
      spec.n_plus * transfer_function(s2(), lambda) * spec.n_minus;
  CHECK((transfer_function(composed, lambda) - expected).norm() <= 1e-12);
}

TEST_CASE("iterate_system: incompatible couplings rejected") {
  const IterationSpec bad{ComplexMatrix::identity(2), ComplexMatrix::identity(1)};
  CHECK_THROWS_AS((void)iterate_system(s2(), bad), Error);
}

TEST_CASE("iterated_inverse_blocks: identity couplings relabel the base") {
  const IterationSpec spec{ComplexMatrix::identity(1), ComplexMatrix::identity(1)};
  const GrushinInverse base = grushin_at(s2(), Complex(1, 0));
  const GrushinInverse composed =
      iterated_inverse_blocks(s2(), spec, Complex(1, 0));
  CHECK(block_distance(base, composed) <= 1e-12);
}

TEST_CASE("iterated_inverse_blocks: S2 with scalar couplings, frozen oracle") {
  const IterationSpec spec{ComplexMatrix{{Complex(3, 0)}},
                           ComplexMatrix{{Complex(2, 0)}}};
  const GrushinInverse composed =
      iterated_inverse_blocks(s2(), spec, Complex(1, 0));

  // Cofactor oracle on the assembled [[I - A, 3B], [2B*, 0]].
  const ComplexMatrix assembled{
      {Complex(1, 0), Complex(-1, 0), Complex(0, 0)},
      {Complex(1, 0), Complex(1, 0), Complex(3, 0)},
      {Complex(0, 0), Complex(2, 0), Complex(0, 0)}};
  const ComplexMatrix full = testing::invert3x3(assembled);
  CHECK((composed.e - full.block(0, 0, 2, 2)).norm() <= 1e-12);
  CHECK((composed.e_plus - full.block(0, 2, 2, 1)).norm() <= 1e-12);
  CHECK((composed.e_minus - full.block(2, 0, 1, 2)).norm() <= 1e-12);
  CHECK((composed.e_minus_plus - full.block(2, 2, 1, 1)).norm() <= 1e-12);

  // Frozen values from the hand inversion.
  CHECK(std::abs(composed.e(0, 0) - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(composed.e_plus(0, 0) - Complex(0.5, 0)) < 1e-12);
  CHECK(std::abs(composed.e_minus(0, 0) + Complex(1.0 / 3.0, 0)) < 1e-12);
  CHECK(std::abs(composed.e_minus_plus(0, 0) + Complex(1.0 / 3.0, 0)) < 1e-12);
}

TEST_CASE("iterated_inverse_blocks: singular secondary stage reported") {
  const IterationSpec dead{ComplexMatrix{{Complex(1, 0)}},
                           ComplexMatrix{{Complex(0, 0)}}};
  CHECK_THROWS_AS((void)iterated_inverse_blocks(s2(), dead, Complex(1, 0)),
                  Error);
  try {
    (void)iterated_inverse_blocks(s2(), dead, Complex(1, 0));
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::IllPosed);
  }
}

TEST_CASE("composition law on random systems") {
  Rng rng(676767);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Index n = rng.integer(1, 6);
    // Both stages must be index-0 solvable: m <= n and q <= m.
    const Index m = rng.integer(1, static_cast<int>(std::min<Index>(n, 3)));
    const Index q = rng.integer(1, static_cast<int>(m));
    const StateSpaceSystem sys(rng.matrix(n, n), rng.matrix(n, m));
    const IterationSpec spec{rng.matrix(m, q), rng.matrix(q, m)};
    const Complex lambda = rng.lambda_away_from(sys.a, 0.4);
    GrushinInverse composed, direct;
    try {
      composed = iterated_inverse_blocks(sys, spec, lambda);
      direct = direct_composed_inverse(sys, spec, lambda);
    } catch (const Error&) {
      continue;
    }
    const double scale =
        1.0 + block_distance(direct, GrushinInverse{
                                         ComplexMatrix::zero(n, n),
                                         ComplexMatrix::zero(n, q),
                                         ComplexMatrix::zero(q, n),
                                         ComplexMatrix::zero(q, q)});
    CHECK(block_distance(composed, direct) <= 1e-8 * scale);
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("regularity is preserved under iteration") {
  Rng rng(686868);
  const Index n = 4;
  const Index m = 2;
  // A feedthrough makes the preserved limit visibly nonzero.
  const ComplexMatrix d = rng.matrix(m, m);
  const ComplexMatrix b = rng.matrix(n, m);
  const StateSpaceSystem base(rng.matrix(n, n), b, b.adjoint(), d);
  const IterationSpec spec{rng.matrix(m, 2), rng.matrix(2, m)};
  const StateSpaceSystem composed = iterate_system(base, spec);

  const ComplexMatrix base_limit =
      regularity_limit(base, default_regularity_grid());
  const ComplexMatrix composed_limit =
      regularity_limit(composed, default_regularity_grid());
  CHECK((composed_limit - spec.n_plus * base_limit * spec.n_minus).norm() <=
        1e-4 * (1.0 + composed_limit.norm()));
  CHECK((composed_limit - composed.d).norm() <= 1e-5 * (1.0 + composed.d.norm()));
}
