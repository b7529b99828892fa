// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#include "grushin/wave.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace grushin {

namespace {

void check_config(const WaveConfig& config) {
  if (config.n_modes < 1) {
    raise(ErrorCode::DimensionMismatch, "wave truncation needs n_modes >= 1");
  }
}

}  // namespace

StateSpaceSystem build_wave_system(const WaveConfig& config) {
  check_config(config);
  const Index n = config.n_modes;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(2 * n, n);
  const double damping_sign = config.anti_dissipative ? 1.0 : -1.0;
  for (Index i = 0; i < n; ++i) {
    const double k = static_cast<double>(i + 1);
    const double ksq = k * k;
    if (config.energy_coordinates) {
      a(i, n + i) = k;
      a(n + i, i) = -k;
    } else {
      a(i, n + i) = 1.0;
      a(n + i, i) = -ksq;
    }
    a(n + i, n + i) = damping_sign / ksq;
    b(n + i, i) = 1.0 / k;
  }
  ComplexMatrix bm(std::move(b));
  return StateSpaceSystem(ComplexMatrix(std::move(a)), bm, bm.adjoint(),
                          ComplexMatrix::zero(n, n), false);
}

HautusReport wave_margin_scan(const WaveConfig& config,
                              const std::vector<double>& omega_grid) {
  check_config(config);
  if (omega_grid.empty()) {
    raise(ErrorCode::EmptyGrid, "frequency grid is empty");
  }
  HautusReport report;
  report.grid = omega_grid;
  std::sort(report.grid.begin(), report.grid.end());
  report.per_freq_margin.resize(report.grid.size());
  for (std::size_t j = 0; j < report.grid.size(); ++j) {
    const double w = report.grid[j];
    const double wsq = w * w;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= config.n_modes; ++k) {
      const double ksq = static_cast<double>(k) * k;
      const double detune = wsq - ksq;
      // ((w^2-k^2)^2 + w^2/k^2) / w^2 = (w^2-k^2)^2/w^2 + 1/k^2.
      const double value =
          wsq > 0.0 ? detune * detune / wsq + 1.0 / ksq
                    : std::numeric_limits<double>::infinity();
      best = std::min(best, value);
    }
    report.per_freq_margin[j] = best;
  }
  std::size_t argmin = 0;
  for (std::size_t j = 1; j < report.per_freq_margin.size(); ++j) {
    if (report.per_freq_margin[j] < report.per_freq_margin[argmin]) argmin = j;
  }
  report.margin = report.per_freq_margin[argmin];
  report.argmin_freq = report.grid[argmin];
  // Resonances are the known eigenfrequencies of the undamped operator.
  for (int k = 1; k <= config.n_modes; ++k) {
    report.eigenfrequencies.push_back(static_cast<double>(k));
  }
  double step = 1.0;
  if (report.grid.size() > 1) {
    step = (report.grid.back() - report.grid.front()) /
           static_cast<double>(report.grid.size() - 1);
  }
  for (double ef : report.eigenfrequencies) {
    if (std::abs(ef - report.argmin_freq) <= step) {
      report.argmin_near_eigenfrequency = true;
      break;
    }
  }
  return report;
}

WaveDecayReport decay_report(const WaveConfig& config) {
  check_config(config);
  WaveDecayReport report;
  report.spectral_abscissa = -std::numeric_limits<double>::infinity();
  const double damping_sign = config.anti_dissipative ? 1.0 : -1.0;
  for (int k = 1; k <= config.n_modes; ++k) {
    const double ksq = static_cast<double>(k) * k;
    // mu^2 - (damping_sign/k^2) mu + k^2 = 0.
    const Complex half_trace(0.5 * damping_sign / ksq, 0.0);
    const Complex disc = half_trace * half_trace - Complex(ksq, 0.0);
    const Complex root = std::sqrt(disc);
    WaveModeDecay mode;
    mode.k = k;
    mode.mu_plus = half_trace + root;
    mode.mu_minus = half_trace - root;
    report.spectral_abscissa =
        std::max({report.spectral_abscissa, mode.mu_plus.real(),
                  mode.mu_minus.real()});
    report.modes.push_back(mode);
  }
  return report;
}

double wave_energy(const WaveConfig& config, const ComplexVector& state) {
  check_config(config);
  const Index n = config.n_modes;
  if (state.dim() != 2 * n) {
    raise(ErrorCode::DimensionMismatch, "state must have dimension 2 * n_modes");
  }
  double sum = 0.0;
  for (Index i = 0; i < n; ++i) {
    const double k = static_cast<double>(i + 1);
    const double pos_scale = config.energy_coordinates ? 1.0 : k;
    sum += std::norm(pos_scale * state[i]) + std::norm(state[n + i]);
  }
  return std::sqrt(sum);
}

}  // namespace grushin
