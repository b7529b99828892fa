// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "grushin/state_space.hpp"

namespace grushin {

/// Circular quadrature contour lambda_k = center + radius * e^{2 pi i k / nodes}
/// with a trapezoidal rule (spectrally accurate for periodic analytic
/// integrands). nodes >= 16, radius > 0.
struct ContourSpec {
  Complex center;
  double radius = 1.0;
  int nodes = 256;

  ContourSpec(Complex center_in, double radius_in, int nodes_in = 256);

  Complex node(int k) const;
  /// Quadrature factor for (1/2 pi i) * integral: (lambda_k - center) / nodes.
  Complex weight(int k) const;
};

/// Riesz spectral projection (1/2 pi i) * contour integral of the resolvent.
/// Idempotent to ~1e-8 for contours away from the spectrum; trace counts the
/// enclosed eigenvalues. ErrorCode::ContourThroughSpectrum when an eigenvalue
/// sits too close to the contour for the quadrature to converge.
ComplexMatrix spectral_projection(const StateSpaceSystem& system,
                                  const ContourSpec& contour);

/// Both sides of the trace identity
///   (1/2 pi i) tr oint (lambda - A)^{-1} g(lambda) dlambda
///     = (1/2 pi i) tr oint d/dlambda(H^{-1}) H g(lambda) dlambda
/// together with oracle counts. The right-hand side counts zeros minus poles
/// of det E_-+ inside the contour, weighted by g; it matches the left-hand
/// side exactly when no pole of E_-+ (zero of det H) is enclosed.
struct TraceCountReport {
  Complex lhs_count;
  Complex rhs_count;
  int eig_inside = 0;       // eigenvalues of A inside (dense eigendecomposition)
  int eh_poles_inside = 0;  // singularities of E_-+ inside
  std::vector<Complex> enclosed_eigenvalues;
};

/// Requires D = 0 and C = B*. dH/dlambda is evaluated analytically as
/// -B* (lambda - A)^{-2} B; no finite differencing. g is a polynomial given by
/// its coefficient list (c0 + c1 lambda + ...). The pole count comes from the
/// winding-number integral of tr(H^{-1} dH) over the same contour, offset by
/// the enclosed-eigenvalue count (each enclosed eigenvalue is a pole of
/// det H for systems with all modes visible in H).
/// Errors: ContourThroughSpectrum, TransferSingularOnContour.
TraceCountReport trace_counts(const StateSpaceSystem& system,
                              const ContourSpec& contour,
                              const std::vector<Complex>& g_coefficients);

}  // namespace grushin
