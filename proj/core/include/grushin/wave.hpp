// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "grushin/analysis.hpp"
#include "grushin/state_space.hpp"

namespace grushin {

/// Modal truncation of the damped wave equation on (0, pi) with Dirichlet
/// boundary, damping operator G = (-Laplace)^{-1} and Laplacian eigenvalues
/// k^2, k = 1..n_modes.
struct WaveConfig {
  int n_modes = 1;
  /// Rescale positions by k so the undamped part becomes skew and the plain
  /// Euclidean norm is the wave energy norm. Off by default: the stacked
  /// (position, velocity) blocks stay [[0, I], [-diag(k^2), -diag(1/k^2)]].
  bool energy_coordinates = false;
  /// Flip the damping sign (anti-dissipative variant, for experimentation).
  bool anti_dissipative = false;
};

/// 2N-dimensional modal system with B = [0; diag(1/k)] and C = B*. The
/// generator is block-per-mode; the damped operator is the dissipative
/// A_0 - B B* so that the energy decays.
StateSpaceSystem build_wave_system(const WaveConfig& config);

/// Frequency scan of the per-mode margin
///   min_k ((w^2 - k^2)^2 + w^2 / k^2) / w^2
/// (the modal form of the damped-wave Hautus quantity). The scan is a pure
/// grid evaluation; resonances sit at integer w = k where the mode-k value is
/// exactly 1/k^2, so the overall margin decays like 1/N^2.
HautusReport wave_margin_scan(const WaveConfig& config,
                              const std::vector<double>& omega_grid);

struct WaveModeDecay {
  int k = 0;
  Complex mu_plus;   // roots of mu^2 + mu/k^2 + k^2 = 0
  Complex mu_minus;
};

struct WaveDecayReport {
  std::vector<WaveModeDecay> modes;
  double spectral_abscissa = 0.0;  // max Re over all modes; -1/(2 N^2)
};

WaveDecayReport decay_report(const WaveConfig& config);

/// Wave energy norm of a stacked (position, velocity) state:
/// sqrt(sum_k k^2 |u_k|^2 + |v_k|^2) in plain coordinates, the Euclidean norm
/// in energy coordinates.
double wave_energy(const WaveConfig& config, const ComplexVector& state);

}  // namespace grushin
