// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: every criterion runs at its stated tolerance and prints
// one pass/fail line. The process exits nonzero if any criterion fails.

#include <Eigen/Eigenvalues>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "grushin/analysis.hpp"
#include "grushin/iterate.hpp"
#include "grushin/linalg.hpp"
#include "grushin/problem.hpp"
#include "grushin/riesz.hpp"
#include "grushin/spectral.hpp"
#include "grushin/state_space.hpp"
#include "grushin/wave.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace grushin;
using testing::Rng;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

StateSpaceSystem s2() {
  return StateSpaceSystem(ComplexMatrix{{Complex(0, 0), Complex(1, 0)},
                                        {Complex(-1, 0), Complex(0, 0)}},
                          ComplexMatrix{{Complex(0, 0)}, {Complex(1, 0)}});
}

double min_eigenvalue(const ComplexMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian.eigen());
  return solver.eigenvalues().minCoeff();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
  void note(const std::string& text) {
    if (detail.empty()) detail = text;
  }
};

// 1. Schur dictionary: recover_inverse vs direct resolvent, E_-+^{-1} = -H.
Outcome criterion_schur_dictionary() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  Rng rng(101);
  double worst_recovery = 0.0;
  double worst_dictionary = 0.0;
  int checked = 0;
  while (checked < 500) {
    const Index n = rng.integer(1, 8);
    const Index m = rng.integer(1, 8);
    const StateSpaceSystem sys(rng.well_conditioned(n), rng.matrix(n, m));
    const Complex lambda = rng.lambda_away_from(sys.a, 0.5);
    GrushinInverse inv;
    ComplexMatrix h(0, 0);
    try {
      inv = grushin_at(sys, lambda);
      h = transfer_function(sys, lambda);
    } catch (const Error&) {
      continue;
    }
    const ComplexMatrix p(
        (lambda * Eigen::MatrixXcd::Identity(n, n) - sys.a.eigen()).eval());
    const ComplexMatrix direct = inverse(p);
    const double recovery =
        (recover_inverse(inv) - direct).norm() /
        (condition_number(p) * std::max(1.0, direct.norm()));
    worst_recovery = std::max(worst_recovery, recovery);
    ComplexMatrix emp_inv(0, 0);
    try {
      emp_inv = inverse(inv.e_minus_plus);
    } catch (const Error&) {
      continue;
    }
    const double dictionary = (emp_inv + h).norm() / (1.0 + h.norm());
    worst_dictionary = std::max(worst_dictionary, dictionary);
    ++checked;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  out.require(worst_recovery <= 1e-8, "recovery residual above 1e-8*cond");
  out.require(worst_dictionary <= 1e-9, "E_-+^{-1} + H residual above 1e-9");
  out.require(seconds < 5.0, "runtime above 5 s");
  std::ostringstream detail;
  detail << "500 systems, recovery<=" << worst_recovery
         << ", dictionary<=" << worst_dictionary << ", " << seconds << " s";
  out.note(detail.str());
  return out;
}

// 2. Transfer-function functional equation, including D != 0.
Outcome criterion_transfer_equation() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  Rng rng(202);
  double worst = 0.0;
  int checked = 0;
  while (checked < 200) {
    const Index n = rng.integer(1, 6);
    const Index m = rng.integer(1, 3);
    const Index p = rng.integer(1, 3);
    const StateSpaceSystem sys(
        rng.matrix(n, n), rng.matrix(n, m), rng.matrix(p, n),
        checked % 2 ? rng.matrix(p, m) : ComplexMatrix::zero(p, m));
    const Complex s = rng.lambda_away_from(sys.a, 0.4);
    Complex beta = rng.lambda_away_from(sys.a, 0.4);
    if (std::abs(s - beta) < 0.1) beta += Complex(0.7, 0.3);
    const ComplexMatrix hs = transfer_function(sys, s);
    const ComplexMatrix hb = transfer_function(sys, beta);
    const ComplexMatrix lhs = Complex(1, 0) / (s - beta) * (hs - hb);
    const ComplexMatrix rhs =
        -(sys.c * resolvent(sys, s) * resolvent(sys, beta) * sys.b);
    worst = std::max(worst,
                     (lhs - rhs).norm() / (1.0 + hs.norm() + hb.norm()));
    ++checked;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  out.require(worst <= 1e-9, "functional-equation residual above 1e-9");
  out.require(seconds < 2.0, "runtime above 2 s");
  std::ostringstream detail;
  detail << "200 triples incl. D != 0, residual<=" << worst << ", " << seconds
         << " s";
  out.note(detail.str());
  return out;
}

// 3. Gramian duality plus the adjoint factorization with first-order decay.
Outcome criterion_duality() {
  Outcome out;
  Rng rng(303);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = rng.integer(1, 6);
    const StateSpaceSystem sys(rng.matrix(n, n), rng.matrix(n, rng.integer(1, 3)));
    const double t_end = rng.real(0.2, 2.0);
    const ComplexMatrix wc = gramian(sys, GramianKind::Controllability, t_end);
    const ComplexMatrix wo = gramian(sys.dual(), GramianKind::Observability, t_end);
    worst = std::max(worst, (wc - wo).norm() / std::max(1.0, wc.norm()));
  }
  out.require(worst <= 1e-9, "gramian duality residual above 1e-9");

  const double coarse = adjoint_factorization_check(s2(), 1.0, 1e-2);
  const double fine = adjoint_factorization_check(s2(), 1.0, 1e-3);
  out.require(fine <= 1e-2, "adjoint factorization above 1e-2 at dt = 1e-3");
  out.require(coarse / fine > 5.0 && coarse / fine < 20.0,
              "decay across dt in {1e-2, 1e-3} is not first order");
  std::ostringstream detail;
  detail << "duality<=" << worst << ", factorization " << coarse << " -> "
         << fine << " (ratio " << coarse / fine << ")";
  out.note(detail.str());
  return out;
}

// 4. Hautus margin vs Gramian positivity on constructed pairs.
Outcome criterion_hautus_gramian() {
  Outcome out;
  Rng rng(404);
  int agreements = 0;
  const int per_class = 100;
  for (int trial = 0; trial < 2 * per_class; ++trial) {
    const bool observable = trial < per_class;
    const Index n = rng.integer(2, 5);
    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(n, n);
    std::vector<double> freqs;
    for (Index i = 0; i < n; ++i) {
      const double w = static_cast<double>(i) + rng.real(0.1, 0.4);
      diag(i, i) = Complex(0.0, w);
      freqs.push_back(w);
    }
    const ComplexMatrix u = rng.unitary(n);
    Eigen::MatrixXcd bvec(n, 1);
    for (Index i = 0; i < n; ++i) {
      bvec(i, 0) = observable || i != 0 ? Complex(rng.real(0.9, 1.1), 0) : 0.0;
    }
    const ComplexMatrix a_raw((u.eigen() * diag * u.eigen().adjoint()).eval());
    const StateSpaceSystem sys(
        ComplexMatrix((0.5 * (a_raw.eigen() - a_raw.eigen().adjoint())).eval()),
        ComplexMatrix((u.eigen() * bvec).eval()));
    std::vector<double> grid = freqs;
    grid.push_back(freqs.front() - 0.5);
    grid.push_back(freqs.back() + 0.5);
    const bool margin_positive = hautus_margin(sys, grid).margin > 1e-8;
    const double t_end = 3.0 * default_observability_time(sys);
    const bool gram_positive =
        min_eigenvalue(gramian(sys, GramianKind::Observability, t_end)) > 1e-8;
    if (margin_positive == gram_positive && margin_positive == observable) {
      ++agreements;
    }
  }
  out.require(agreements == 2 * per_class, "classification disagreement");
  std::ostringstream detail;
  detail << agreements << "/" << 2 * per_class << " agreements";
  out.note(detail.str());
  return out;
}

// 5. Certified bound validity over random surjective instances.
Outcome criterion_certified_bound() {
  Outcome out;
  Rng rng(505);
  double min_gap = 1e300;
  double max_gap = 0.0;
  int checked = 0;
  while (checked < 500) {
    const Index n = rng.integer(1, 6);
    const Index m = rng.integer(1, static_cast<int>(n));
    const StateSpaceSystem sys(rng.matrix(n, n), rng.matrix(n, m));
    const Complex lambda = rng.lambda_away_from(sys.a, 0.3);
    CertifiedBound bound;
    try {
      bound = certified_bound(sys, lambda);
    } catch (const Error&) {
      continue;
    }
    if (!bound.hypothesis_ok) continue;
    out.require(bound.certified_constant > 0.0, "certified constant is zero");
    out.require(
        bound.certified_constant <= bound.true_constant * (1.0 + 1e-9),
        "certified constant exceeds the true constant");
    const double gap = bound.true_constant - bound.certified_constant;
    min_gap = std::min(min_gap, gap);
    max_gap = std::max(max_gap, gap);
    ++checked;
  }
  std::ostringstream detail;
  detail << "500 instances, gap in [" << min_gap << ", " << max_gap << "]";
  out.note(detail.str());
  return out;
}

// 6. Trace formula: desk cases plus randomized zero-pole accounting against
// the independent pencil-root oracle.
Outcome criterion_trace_formula() {
  Outcome out;
  const TraceCountReport around_i =
      trace_counts(s2(), ContourSpec(Complex(0, 1), 0.5, 256), {Complex(1, 0)});
  out.require(std::abs(around_i.lhs_count - Complex(1, 0)) < 1e-8,
              "S2 circle(i,0.5): |lhs - 1| >= 1e-8");
  out.require(std::abs(around_i.rhs_count - Complex(1, 0)) < 1e-8,
              "S2 circle(i,0.5): |rhs - 1| >= 1e-8");
  out.require(around_i.eh_poles_inside == 0,
              "S2 circle(i,0.5): spurious pole detected");

  const TraceCountReport around_all =
      trace_counts(s2(), ContourSpec(Complex(0, 0), 2.0, 256), {Complex(1, 0)});
  out.require(std::abs(around_all.lhs_count - Complex(2, 0)) < 1e-8,
              "S2 circle(0,2): |lhs - 2| >= 1e-8");
  out.require(std::abs(around_all.rhs_count - Complex(1, 0)) < 1e-8,
              "S2 circle(0,2): |rhs - 1| >= 1e-8");
  out.require(around_all.eh_poles_inside == 1,
              "S2 circle(0,2): pole count != 1");

  Rng rng(606);
  int checked = 0;
  int exact = 0;
  while (checked < 100) {
    const Index n = rng.integer(2, 6);
    std::vector<Complex> mu;
    for (Index i = 0; i < n; ++i) {
      mu.push_back(Complex(rng.real(-1.5, 1.5), rng.real(-1.5, 1.5)));
    }
    const StateSpaceSystem sys(rng.diagonalizable(mu),
                               rng.matrix(n, rng.integer(1, 2)));
    const ContourSpec contour(Complex(0, 0), 2.5, 256);
    TraceCountReport report;
    try {
      report = trace_counts(sys, contour, {Complex(1, 0)});
    } catch (const Error&) {
      continue;
    }
    int oracle_poles = 0;
    bool boundary = false;
    for (const Complex& root : testing::pencil_singular_points(sys)) {
      const double dist = std::abs(root - contour.center);
      if (std::abs(dist - contour.radius) < 0.05) boundary = true;
      if (dist < contour.radius) ++oracle_poles;
    }
    if (boundary) continue;
    ++checked;
    if (std::lround(report.rhs_count.real()) ==
            report.eig_inside - oracle_poles &&
        std::abs(report.rhs_count.imag()) < 0.01 &&
        report.eh_poles_inside == oracle_poles) {
      ++exact;
    }
  }
  out.require(exact == checked, "zero-pole accounting mismatch");
  std::ostringstream detail;
  detail << "desk cases ok, " << exact << "/" << checked
         << " randomized accountings exact";
  out.note(detail.str());
  return out;
}

// 7. Iteration: composed blocks vs direct inversion, transfer multiplicativity.
Outcome criterion_iteration() {
  Outcome out;
  Rng rng(707);
  double worst_blocks = 0.0;
  double worst_transfer = 0.0;
  int checked = 0;
  while (checked < 300) {
    const Index n = rng.integer(1, 6);
    const Index m = rng.integer(1, 3);
    const Index q = rng.integer(1, 3);
    const StateSpaceSystem sys(rng.matrix(n, n), rng.matrix(n, m));
    const IterationSpec spec{rng.matrix(m, q), rng.matrix(q, m)};
    const Complex lambda = rng.lambda_away_from(sys.a, 0.4);
    GrushinInverse composed;
    try {
      composed = iterated_inverse_blocks(sys, spec, lambda);
    } catch (const Error&) {
      continue;
    }
    const ComplexMatrix p(
        (lambda * Eigen::MatrixXcd::Identity(n, n) - sys.a.eigen()).eval());
    GrushinInverse direct;
    try {
      direct = invert_grushin(
          assemble(p, sys.b * spec.n_minus, spec.n_plus * sys.c));
    } catch (const Error&) {
      continue;
    }
    const double scale = 1.0 + direct.e.norm() + direct.e_plus.norm() +
                         direct.e_minus.norm() + direct.e_minus_plus.norm();
    const double distance =
        ((composed.e - direct.e).norm() + (composed.e_plus - direct.e_plus).norm() +
         (composed.e_minus - direct.e_minus).norm() +
         (composed.e_minus_plus - direct.e_minus_plus).norm()) /
        scale;
    worst_blocks = std::max(worst_blocks, distance);

    const StateSpaceSystem iterated = iterate_system(sys, spec);
    const ComplexMatrix h1 = transfer_function(iterated, lambda);
    const ComplexMatrix product =
        spec.n_plus * transfer_function(sys, lambda) * spec.n_minus;
    worst_transfer = std::max(
        worst_transfer, (h1 - product).norm() / std::max(1.0, product.norm()));
    ++checked;
  }
  out.require(worst_blocks <= 1e-8, "composed blocks differ above 1e-8");
  out.require(worst_transfer <= 1e-10, "H1 != N+ H N- above 1e-10");
  std::ostringstream detail;
  detail << "300 trials, blocks<=" << worst_blocks << ", transfer<="
         << worst_transfer;
  out.note(detail.str());
  return out;
}

// 8. Riesz/Nikolski: Fourier case exactly, frame vs Gramian positivity.
Outcome criterion_riesz() {
  Outcome out;
  ModalSystem fourier;
  fourier.eigenvalues = ComplexVector{Complex(0, -1), Complex(0, -2)};
  fourier.basis = ComplexMatrix::identity(2);
  fourier.biorthogonal = ComplexMatrix::identity(2);
  fourier.b_star_psi = ComplexMatrix{{Complex(1, 0), Complex(1, 0)}};
  const ReachableDescription fd = reachable_weights(fourier, kTwoPi);
  out.require(std::abs(fd.weights[0] - kTwoPi) <= 1e-10 &&
                  std::abs(fd.weights[1] - kTwoPi) <= 1e-10,
              "Fourier weights differ from 2*pi");
  out.require(std::abs(fd.frame_lower - 1.0) <= 1e-10 &&
                  std::abs(fd.frame_upper - 1.0) <= 1e-10,
              "Fourier frame bounds differ from 1");

  Rng rng(808);
  int agreements = 0;
  int checked = 0;
  while (checked < 100) {
    const Index n = rng.integer(2, 5);
    std::vector<Complex> mu;
    for (Index i = 0; i < n; ++i) {
      mu.push_back(Complex(rng.real(-1, 1),
                           2.0 * static_cast<double>(i) + rng.real(-0.4, 0.4)));
    }
    const ComplexMatrix a = rng.diagonalizable(mu);
    const bool reachable = checked % 2 == 0;
    const double t_end = 1.0;
    StateSpaceSystem sys(a, rng.matrix(n, n));
    if (!reachable) {
      const ModalSystem modal = modal_decompose(sys);
      Eigen::MatrixXcd b = rng.matrix(n, n - 1).eigen();
      const Eigen::VectorXcd psi = modal.biorthogonal.col(0).eigen();
      for (Index j = 0; j < b.cols(); ++j) {
        const Complex overlap = (psi.adjoint() * b.col(j)).value();
        b.col(j) -= overlap / psi.squaredNorm() * psi;
      }
      sys = StateSpaceSystem(a, ComplexMatrix(b.eval()));
    }
    bool frame_positive;
    try {
      frame_positive =
          reachable_weights(modal_decompose(sys), t_end).frame_lower > 1e-8;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::DegenerateMode) throw;
      frame_positive = false;
    }
    const bool gram_positive =
        min_eigenvalue(gramian(sys, GramianKind::Controllability, t_end)) > 1e-8;
    if (frame_positive == gram_positive && frame_positive == reachable) {
      ++agreements;
    }
    ++checked;
  }
  out.require(agreements == 100, "frame/Gramian classification disagreement");
  std::ostringstream detail;
  detail << "Fourier case exact, " << agreements << "/100 agreements";
  out.note(detail.str());
  return out;
}

// 9. Wave example: abscissa closed form, margin scaling, runtime.
Outcome criterion_wave() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= 16; ++n) {
    const WaveDecayReport report = decay_report({.n_modes = n});
    const double expected = -0.5 / (static_cast<double>(n) * n);
    out.require(std::abs(report.spectral_abscissa - expected) <=
                    1e-10 * std::abs(expected),
                "abscissa differs from -1/(2N^2) at N = " + std::to_string(n));
  }
  for (int n : {2, 4, 8, 16}) {
    std::vector<double> grid;
    for (double w = 0.5; w <= n + 0.5 + 1e-12; w += 0.05) grid.push_back(w);
    const HautusReport report = wave_margin_scan({.n_modes = n}, grid);
    const double scaled = report.margin * static_cast<double>(n) * n;
    out.require(scaled >= 0.9 && scaled <= 1.1,
                "margin scaling outside [0.9, 1.1] at N = " + std::to_string(n));
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  out.require(seconds < 10.0, "wave suite runtime above 10 s");
  std::ostringstream detail;
  detail << "N in 1..16 abscissa exact, scaling in range, " << seconds << " s";
  out.note(detail.str());
  return out;
}

// 10. Regularity limit recovers D on the default grid.
Outcome criterion_regularity() {
  Outcome out;
  Rng rng(1010);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = rng.integer(1, 6);
    const Index m = rng.integer(1, 3);
    const Index p = rng.integer(1, 3);
    ComplexMatrix b = rng.matrix(n, m);
    ComplexMatrix c = rng.matrix(p, n);
    // Keep ||B||, ||C|| <= 10.
    if (b.norm() > 10.0) b = Complex(10.0 / b.norm(), 0) * b;
    if (c.norm() > 10.0) c = Complex(10.0 / c.norm(), 0) * c;
    const StateSpaceSystem sys(rng.matrix(n, n), b, c, rng.matrix(p, m));
    const ComplexMatrix estimate =
        regularity_limit(sys, default_regularity_grid());
    worst = std::max(worst, (estimate - sys.d).norm());
  }
  out.require(worst <= 1e-5, "recovered feedthrough off by more than 1e-5");
  std::ostringstream detail;
  detail << "100 systems, worst deviation " << worst;
  out.note(detail.str());
  return out;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* label;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> entries = {
      {1, "Schur dictionary", criterion_schur_dictionary},
      {2, "Transfer functional equation", criterion_transfer_equation},
      {3, "Controllability/observability duality", criterion_duality},
      {4, "Hautus vs Gramian classification", criterion_hautus_gramian},
      {5, "Certified bound validity", criterion_certified_bound},
      {6, "Contour trace formula", criterion_trace_formula},
      {7, "Grushin iteration", criterion_iteration},
      {8, "Riesz/moment description", criterion_riesz},
      {9, "Damped wave example", criterion_wave},
      {10, "Regularity limit", criterion_regularity},
  };
  int failures = 0;
  for (const Entry& entry : entries) {
    Outcome outcome;
    try {
      outcome = entry.run();
    } catch (const std::exception& err) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + err.what();
    }
    std::printf("[%s] %2d. %-40s %s\n", outcome.pass ? "PASS" : "FAIL",
                entry.id, entry.label, outcome.detail.c_str());
    if (!outcome.pass) ++failures;
  }
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", entries.size());
  return 0;
}
