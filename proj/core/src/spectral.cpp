// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#include "grushin/spectral.hpp"

#include <cmath>
#include <limits>

#include "grushin/linalg.hpp"

namespace grushin {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Trapezoid error for a pole at z decays like q^nodes with
// q = min(|z - c|/r, r/|z - c|); reject contours whose estimated quadrature
// error cannot reach ~1e-6 at the requested node count.
void check_contour_clearance(const std::vector<Complex>& spectrum,
                             const ContourSpec& contour) {
  for (const Complex& mu : spectrum) {
    const double dist = std::abs(mu - contour.center);
    const double q = dist < contour.radius
                         ? (contour.radius > 0 ? dist / contour.radius : 0.0)
                         : (dist > 0 ? contour.radius / dist : 0.0);
    if (q >= 1.0 ||
        std::pow(q, static_cast<double>(contour.nodes)) > 1e-6) {
      raise(ErrorCode::ContourThroughSpectrum,
            "eigenvalue too close to the contour for quadrature accuracy");
    }
  }
}

Complex horner(const std::vector<Complex>& coeffs, Complex z) {
  if (coeffs.empty()) return Complex(1.0, 0.0);
  Complex acc(0.0, 0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

ContourSpec::ContourSpec(Complex center_in, double radius_in, int nodes_in)
    : center(center_in), radius(radius_in), nodes(nodes_in) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    raise(ErrorCode::InvalidContour, "contour radius must be positive");
  }
  if (nodes < 16) {
    raise(ErrorCode::InvalidContour, "contour needs at least 16 nodes");
  }
}

Complex ContourSpec::node(int k) const {
  const double theta = kTwoPi * static_cast<double>(k) / nodes;
  return center + radius * Complex(std::cos(theta), std::sin(theta));
}

Complex ContourSpec::weight(int k) const {
  return (node(k) - center) / static_cast<double>(nodes);
}

ComplexMatrix spectral_projection(const StateSpaceSystem& system,
                                  const ContourSpec& contour) {
  const std::vector<Complex> spectrum = eigenvalues(system.a);
  check_contour_clearance(spectrum, contour);
  const Index n = system.state_dim();
  std::vector<Eigen::MatrixXcd> terms(static_cast<std::size_t>(contour.nodes));
  parallel_for(terms.size(), [&](std::size_t k) {
    const int ki = static_cast<int>(k);
    terms[k] = contour.weight(ki) *
               resolvent(system, contour.node(ki)).eigen();
  });
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& term : terms) sum += term;  // fixed order
  return ComplexMatrix(std::move(sum));
}

TraceCountReport trace_counts(const StateSpaceSystem& system,
                              const ContourSpec& contour,
                              const std::vector<Complex>& g_coefficients) {
  if (system.d.norm() != 0.0) {
    raise(ErrorCode::HypothesisViolated, "trace_counts requires D = 0");
  }
  if ((system.c - system.b.adjoint()).norm() >
      1e-12 * std::max(1.0, system.b.norm())) {
    raise(ErrorCode::HypothesisViolated, "trace_counts requires C = B*");
  }
  const std::vector<Complex> spectrum = eigenvalues(system.a);
  check_contour_clearance(spectrum, contour);

  struct NodeTerms {
    Complex lhs;
    Complex rhs;
    Complex winding;
    bool transfer_singular = false;
  };
  std::vector<NodeTerms> terms(static_cast<std::size_t>(contour.nodes));
  parallel_for(terms.size(), [&](std::size_t k) {
    const int ki = static_cast<int>(k);
    const Complex lambda = contour.node(ki);
    const Complex w = contour.weight(ki);
    const Complex g = horner(g_coefficients, lambda);
    const ComplexMatrix res = resolvent(system, lambda);
    const ComplexMatrix res_b = res * system.b;
    const ComplexMatrix h = system.b.adjoint() * res_b;
    // dH/dlambda = -B* (lambda - A)^{-2} B, evaluated analytically.
    const ComplexMatrix h_prime = -(system.b.adjoint() * (res * res_b));
    ComplexMatrix h_inv(0, 0);
    try {
      h_inv = inverse(h);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::Singular) {
        terms[k].transfer_singular = true;
        return;
      }
      throw;
    }
    const Complex winding_term = (h_inv * h_prime).trace();
    terms[k].lhs = w * g * res.trace();
    // tr(d(H^{-1}) H) = -tr(H^{-1} dH).
    terms[k].rhs = -w * g * winding_term;
    terms[k].winding = w * winding_term;
  });

  TraceCountReport report;
  Complex winding(0.0, 0.0);
  for (const auto& t : terms) {  // fixed order
    if (t.transfer_singular) {
      raise(ErrorCode::TransferSingularOnContour,
            "transfer function singular at a quadrature node");
    }
    report.lhs_count += t.lhs;
    report.rhs_count += t.rhs;
    winding += t.winding;
  }
  // The winding count of det H is an integer whenever the contour is clear of
  // its zeros and poles; drift certifies a transfer singularity on or next to
  // the contour that the per-node pivot test cannot see.
  const double drift = std::abs(winding.imag()) +
                       std::abs(winding.real() - std::round(winding.real()));
  if (drift > 0.01) {
    raise(ErrorCode::TransferSingularOnContour,
          "winding count did not converge: det H has a zero on or near the "
          "contour");
  }
  for (const Complex& mu : spectrum) {
    if (std::abs(mu - contour.center) < contour.radius) {
      ++report.eig_inside;
      report.enclosed_eigenvalues.push_back(mu);
    }
  }
  // winding = zeros(det H) - poles(det H) inside; with every enclosed
  // eigenvalue a pole of det H, zeros(det H) = enclosed E_-+ poles.
  const long detected =
      std::lround(winding.real()) + static_cast<long>(report.eig_inside);
  report.eh_poles_inside = static_cast<int>(std::max(0L, detected));
  return report;
}

}  // namespace grushin
