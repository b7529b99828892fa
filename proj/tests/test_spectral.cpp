// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "grushin/linalg.hpp"
#include "grushin/spectral.hpp"
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

const Complex I(0.0, 1.0);

}  // namespace

TEST_CASE("contour validation") {
  CHECK_THROWS_AS(ContourSpec(Complex(0, 0), -1.0), Error);
  CHECK_THROWS_AS(ContourSpec(Complex(0, 0), 1.0, 8), Error);
}

TEST_CASE("spectral_projection: residue at the simple eigenvalue i") {
  const ComplexMatrix p =
      spectral_projection(s2(), ContourSpec(I, 0.5, 256));
  // Rank-one projector onto span{[1, i]}.
  const ComplexMatrix expected{{Complex(0.5, 0), Complex(0, -0.5)},
                               {Complex(0, 0.5), Complex(0.5, 0)}};
  CHECK((p - expected).norm() <= 1e-10);
  CHECK((p * p - p).norm() <= 1e-8);
  CHECK(std::abs(p.trace() - Complex(1, 0)) <= 1e-8);
}

TEST_CASE("spectral_projection: empty contour integrates to zero") {
  const ComplexMatrix p =
      spectral_projection(s2(), ContourSpec(Complex(5, 5), 0.5, 64));
  CHECK(p.norm() <= 1e-10);
}

TEST_CASE("spectral_projection: contour around the whole spectrum gives I") {
  const ComplexMatrix p =
      spectral_projection(s2(), ContourSpec(Complex(0, 0), 2.0, 256));
  CHECK((p - ComplexMatrix::identity(2)).norm() <= 1e-8);
}

TEST_CASE("spectral_projection: contour through the spectrum rejected") {
  CHECK_THROWS_AS(
      (void)spectral_projection(s2(), ContourSpec(Complex(0, 0), 1.0, 256)),
      Error);
  try {
    (void)spectral_projection(s2(), ContourSpec(Complex(0, 0), 1.0, 256));
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::ContourThroughSpectrum);
  }
}

TEST_CASE("spectral_projection: quadrature converges at an exponential rate") {
  // Eigenvalue -i sits at conformal ratio q = 0.75; the error tracks q^N.
  const ContourSpec coarse(I, 1.5, 64);
  const ContourSpec fine(I, 1.5, 128);
  const double err_coarse =
      std::abs(spectral_projection(s2(), coarse).trace() - Complex(1, 0));
  const double err_fine =
      std::abs(spectral_projection(s2(), fine).trace() - Complex(1, 0));
  CHECK(err_coarse < 1e-6);
  CHECK(err_fine < err_coarse / 10.0);
  CHECK(err_fine < 1e-12);
}

TEST_CASE("spectral_projection: projectors over disjoint contours add up") {
  Rng rng(454545);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = rng.integer(2, 5);
    std::vector<Complex> mu;
    for (Index i = 0; i < n; ++i) {
      // Two clusters around -2 and +2.
      const double center = i % 2 == 0 ? -2.0 : 2.0;
      mu.push_back(Complex(center + rng.real(-0.3, 0.3), rng.real(-0.3, 0.3)));
    }
    const ComplexMatrix a = rng.diagonalizable(mu);
    const StateSpaceSystem sys(a, rng.matrix(n, 1));
    const ComplexMatrix left =
        spectral_projection(sys, ContourSpec(Complex(-2, 0), 1.0, 128));
    const ComplexMatrix right =
        spectral_projection(sys, ContourSpec(Complex(2, 0), 1.0, 128));
    const ComplexMatrix both =
        spectral_projection(sys, ContourSpec(Complex(0, 0), 3.2, 256));
    CHECK((left + right - both).norm() <= 1e-8 * std::max(1.0, both.norm()));
  }
}

TEST_CASE("trace_counts: S2 around i with g = 1") {
  const TraceCountReport report =
      trace_counts(s2(), ContourSpec(I, 0.5, 256), {Complex(1, 0)});
  CHECK(std::abs(report.lhs_count - Complex(1, 0)) < 1e-8);
  CHECK(std::abs(report.rhs_count - Complex(1, 0)) < 1e-8);
  CHECK(report.eig_inside == 1);
  CHECK(report.eh_poles_inside == 0);
}

TEST_CASE("trace_counts: S2 around everything exposes the E_-+ pole") {
  const TraceCountReport report =
      trace_counts(s2(), ContourSpec(Complex(0, 0), 2.0, 256), {Complex(1, 0)});
  CHECK(std::abs(report.lhs_count - Complex(2, 0)) < 1e-8);
  CHECK(std::abs(report.rhs_count - Complex(1, 0)) < 1e-8);
  CHECK(report.eig_inside == 2);
  CHECK(report.eh_poles_inside == 1);
}

TEST_CASE("trace_counts: weighted count g(lambda) = lambda") {
  const TraceCountReport report =
      trace_counts(s2(), ContourSpec(I, 0.5, 256), {Complex(0, 0), Complex(1, 0)});
  CHECK(std::abs(report.lhs_count - I) < 1e-8);
  CHECK(std::abs(report.rhs_count - I) < 1e-8);
}

TEST_CASE("trace_counts: transfer zero on the contour rejected") {
  // det H vanishes at lambda = 0, which the node set hits exactly.
  CHECK_THROWS_AS((void)trace_counts(s2(), ContourSpec(Complex(0.3, 0), 0.3, 256),
                                     {Complex(1, 0)}),
                  Error);
  try {
    (void)trace_counts(s2(), ContourSpec(Complex(0.3, 0), 0.3, 256),
                       {Complex(1, 0)});
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::TransferSingularOnContour);
  }
}

TEST_CASE("trace_counts: zero-pole accounting against the pencil oracle") {
  Rng rng(565656);
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = rng.integer(2, 4);
    std::vector<Complex> mu;
    for (Index i = 0; i < n; ++i) {
      mu.push_back(Complex(rng.real(-1.5, 1.5), rng.real(-1.5, 1.5)));
    }
    const ComplexMatrix a = rng.diagonalizable(mu);
    const StateSpaceSystem sys(a, rng.matrix(n, 1));
    const ContourSpec contour(Complex(0, 0), 2.5, 256);
    TraceCountReport report;
    try {
      report = trace_counts(sys, contour, {Complex(1, 0)});
    } catch (const Error&) {
      continue;  // contour clearance or a node hit a transfer zero
    }
    const std::vector<Complex> roots = testing::pencil_singular_points(sys);
    int oracle_poles = 0;
    bool boundary = false;
    for (const Complex& r : roots) {
      const double dist = std::abs(r - contour.center);
      if (std::abs(dist - contour.radius) < 0.05) boundary = true;
      if (dist < contour.radius) ++oracle_poles;
    }
    if (boundary) continue;
    CHECK(report.eh_poles_inside == oracle_poles);
    CHECK(std::lround(report.rhs_count.real()) ==
          report.eig_inside - oracle_poles);
    CHECK(std::abs(report.rhs_count.imag()) < 1e-6);
    ++checked;
  }
  CHECK(checked >= 10);
}
