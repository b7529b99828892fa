// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: loads state-space systems from JSON files, runs the
// library analyses and emits deterministic machine-readable reports on
// standard output. Domain failures exit with status 2 and a structured error
// record on standard error; usage and parse problems exit with status 1.

#include <CLI11.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "grushin/analysis.hpp"
#include "grushin/io.hpp"
#include "grushin/iterate.hpp"
#include "grushin/linalg.hpp"
#include "grushin/problem.hpp"
#include "grushin/riesz.hpp"
#include "grushin/spectral.hpp"
#include "grushin/state_space.hpp"
#include "grushin/wave.hpp"

namespace {

using namespace grushin;

int dispatch(int argc, char** argv);

struct Options {
  std::string input_path;
  std::string iter_path;
  std::string csv_path;
  std::string lambda_text;
  std::string contour_center_text;
  std::string z0_text;
  std::string u_const_text;
  std::string kind_text = "observability";
  std::string g_text = "1";
  double omega_min = -5.0;
  double omega_max = 5.0;
  int omega_steps = 201;
  bool omega_set = false;
  double contour_radius = 1.0;
  int nodes = 256;
  double t_end = 1.0;
  double dt = 1e-3;
  int modes = 4;
  double tol = 1e-9;
  unsigned long long seed = 1;
};

Complex parse_complex_pair(const std::string& text, const std::string& flag) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) {
      return Complex(std::stod(text), 0.0);
    }
    return Complex(std::stod(text.substr(0, comma)),
                   std::stod(text.substr(comma + 1)));
  } catch (const std::exception&) {
    throw CLI::ValidationError(flag, "expected RE or RE,IM");
  }
}

ComplexVector parse_complex_list(const std::string& text, const std::string& flag) {
  std::vector<Complex> entries;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ';')) {
    if (!item.empty()) entries.push_back(parse_complex_pair(item, flag));
  }
  Eigen::VectorXcd v(static_cast<Index>(entries.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = entries[static_cast<std::size_t>(i)];
  return ComplexVector(std::move(v));
}

std::vector<Complex> parse_poly(const std::string& text) {
  std::vector<Complex> coeffs;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) coeffs.push_back(Complex(std::stod(item), 0.0));
  }
  if (coeffs.empty()) coeffs.push_back(Complex(1.0, 0.0));
  return coeffs;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::ParseError, path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<double> linear_grid(double lo, double hi, int steps) {
  if (steps < 1 || !(hi >= lo)) {
    raise(ErrorCode::InvalidGrid, "omega grid bounds/steps are inconsistent");
  }
  std::vector<double> grid(static_cast<std::size_t>(steps));
  if (steps == 1) {
    grid[0] = lo;
    return grid;
  }
  for (int i = 0; i < steps; ++i) {
    grid[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
  }
  return grid;
}

// Digest covers the command name, every option value and the raw bytes of
// referenced files, so identical invocations produce identical reports.
std::string compute_digest(const std::string& command, const Options& opt) {
  std::uint64_t h = fnv1a(command);
  auto mix = [&h](const std::string& token) {
    h = fnv1a(token, h);
    h = fnv1a("|", h);
  };
  mix(opt.input_path);
  mix(opt.iter_path);
  mix(opt.lambda_text);
  mix(opt.contour_center_text);
  mix(opt.z0_text);
  mix(opt.u_const_text);
  mix(opt.kind_text);
  mix(opt.g_text);
  mix(format_double(opt.omega_min));
  mix(format_double(opt.omega_max));
  mix(std::to_string(opt.omega_steps));
  mix(format_double(opt.contour_radius));
  mix(std::to_string(opt.nodes));
  mix(format_double(opt.t_end));
  mix(format_double(opt.dt));
  mix(std::to_string(opt.modes));
  mix(format_double(opt.tol));
  mix(std::to_string(opt.seed));
  if (!opt.input_path.empty()) mix(slurp(opt.input_path));
  if (!opt.iter_path.empty()) mix(slurp(opt.iter_path));
  return digest_hex(h);
}

void write_csv(const std::string& path, const HautusReport& report) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::ParseError, path + ": cannot open for writing");
  out << "omega,margin\n";
  for (std::size_t i = 0; i < report.grid.size(); ++i) {
    out << format_double(report.grid[i]) << ','
        << format_double(report.per_freq_margin[i]) << '\n';
  }
}

JsonValue hautus_payload(const HautusReport& report) {
  JsonValue payload = JsonValue::object();
  payload.set("margin", JsonValue::number(report.margin));
  payload.set("argmin_freq", JsonValue::number(report.argmin_freq));
  payload.set("argmin_near_eigenfrequency",
              JsonValue::boolean(report.argmin_near_eigenfrequency));
  payload.set("grid", JsonValue::real_array(report.grid));
  payload.set("per_freq_margin", JsonValue::real_array(report.per_freq_margin));
  return payload;
}

Complex require_lambda(const Options& opt) {
  if (opt.lambda_text.empty()) throw CLI::RequiredError("--lambda");
  return parse_complex_pair(opt.lambda_text, "--lambda");
}

StateSpaceSystem require_system(const Options& opt) {
  if (opt.input_path.empty()) throw CLI::RequiredError("--input");
  return load_system(opt.input_path);
}

ContourSpec require_contour(const Options& opt) {
  if (opt.contour_center_text.empty()) {
    throw CLI::RequiredError("--contour-center");
  }
  return ContourSpec(
      parse_complex_pair(opt.contour_center_text, "--contour-center"),
      opt.contour_radius, opt.nodes);
}

JsonValue run_schur(const Options& opt) {
  const StateSpaceSystem sys = require_system(opt);
  const Complex lambda = require_lambda(opt);
  // The resolvent comes first: lambda in the spectrum is a Singular error.
  const ComplexMatrix direct = resolvent(sys, lambda);
  const GrushinProblem problem = grushin_problem_at(sys, lambda);
  const GrushinInverse inv = invert_grushin(problem);
  const ComplexMatrix assembled = problem.assembled();
  const ComplexMatrix full = vstack(hstack(inv.e, inv.e_plus),
                                    hstack(inv.e_minus, inv.e_minus_plus));
  const double witness =
      (assembled * full - ComplexMatrix::identity(assembled.rows())).norm();

  // Probe residual: seeded random vector pushed through A E - I.
  std::mt19937_64 gen(opt.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd probe(assembled.cols());
  for (Index i = 0; i < probe.size(); ++i) {
    probe(i) = Complex(normal(gen), normal(gen));
  }
  const Eigen::VectorXcd probe_image =
      assembled.eigen() * (full.eigen() * probe) - probe;
  const double probe_residual = probe_image.norm() / probe.norm();

  const ComplexMatrix recovered = recover_inverse(inv);
  const double recovery_residual = (recovered - direct).norm();

  JsonValue payload = JsonValue::object();
  payload.set("lambda", JsonValue::complex_number(lambda));
  payload.set("e", JsonValue::matrix(inv.e));
  payload.set("e_plus", JsonValue::matrix(inv.e_plus));
  payload.set("e_minus", JsonValue::matrix(inv.e_minus));
  payload.set("e_minus_plus", JsonValue::matrix(inv.e_minus_plus));
  payload.set("recovered_inverse", JsonValue::matrix(recovered));
  payload.set("well_posedness_residual", JsonValue::number(witness));
  payload.set("probe_residual", JsonValue::number(probe_residual));
  payload.set("recovery_residual", JsonValue::number(recovery_residual));
  payload.set("tolerance_ok",
              JsonValue::boolean(recovery_residual <=
                                 opt.tol * condition_number(problem.p) *
                                     std::max(1.0, direct.norm())));
  return payload;
}

JsonValue run_transfer(const Options& opt) {
  const StateSpaceSystem sys = require_system(opt);
  const Complex lambda = require_lambda(opt);
  JsonValue payload = JsonValue::object();
  payload.set("H", JsonValue::matrix(transfer_function(sys, lambda)));
  return payload;
}

JsonValue run_hautus(const Options& opt) {
  const StateSpaceSystem sys = require_system(opt);
  const HautusReport report = hautus_margin(
      sys, linear_grid(opt.omega_min, opt.omega_max, opt.omega_steps));
  write_csv(opt.csv_path, report);
  return hautus_payload(report);
}

JsonValue run_gramian(const Options& opt) {
  const StateSpaceSystem sys = require_system(opt);
  GramianKind kind;
  if (opt.kind_text == "observability" || opt.kind_text == "obs") {
    kind = GramianKind::Observability;
  } else if (opt.kind_text == "controllability" || opt.kind_text == "ctrl") {
    kind = GramianKind::Controllability;
  } else {
    throw CLI::ValidationError("--kind",
                               "expected observability|controllability");
  }
  const ComplexMatrix w = gramian(sys, kind, opt.t_end);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(w.eigen());
  JsonValue payload = JsonValue::object();
  payload.set("kind", JsonValue::string(opt.kind_text));
  payload.set("t_end", JsonValue::number(opt.t_end));
  payload.set("gramian", JsonValue::matrix(w));
  payload.set("min_eigenvalue",
              JsonValue::number(solver.eigenvalues().minCoeff()));
  return payload;
}

JsonValue run_certify(const Options& opt) {
  const StateSpaceSystem sys = require_system(opt);
  const Complex lambda = require_lambda(opt);
  const CertifiedBound bound = certified_bound(sys, lambda);
  JsonValue payload = JsonValue::object();
  payload.set("lambda", JsonValue::complex_number(lambda));
  payload.set("certified_constant", JsonValue::number(bound.certified_constant));
  payload.set("true_constant", JsonValue::number(bound.true_constant));
  payload.set("right_inverse_norm", JsonValue::number(bound.right_inverse_norm));
  payload.set("restricted_norm", JsonValue::number(bound.restricted_norm));
  payload.set("kernel_coercivity",
              std::isfinite(bound.kernel_coercivity)
                  ? JsonValue::number(bound.kernel_coercivity)
                  : JsonValue::null());
  payload.set("cross_coupling_norm",
              JsonValue::number(bound.cross_coupling_norm));
  payload.set("hypothesis_ok", JsonValue::boolean(bound.hypothesis_ok));
  payload.set("gap", JsonValue::number(bound.true_constant -
                                       bound.certified_constant));
  return payload;
}

JsonValue run_trace(const Options& opt) {
  const StateSpaceSystem sys = require_system(opt);
  const ContourSpec contour = require_contour(opt);
  const TraceCountReport report =
      trace_counts(sys, contour, parse_poly(opt.g_text));
  JsonValue payload = JsonValue::object();
  JsonValue contour_doc = JsonValue::object();
  contour_doc.set("center", JsonValue::complex_number(contour.center));
  contour_doc.set("radius", JsonValue::number(contour.radius));
  contour_doc.set("nodes", JsonValue::integer(contour.nodes));
  payload.set("contour", std::move(contour_doc));
  payload.set("g", JsonValue::string(opt.g_text));
  payload.set("lhs_count", JsonValue::complex_number(report.lhs_count));
  payload.set("rhs_count", JsonValue::complex_number(report.rhs_count));
  payload.set("eig_inside", JsonValue::integer(report.eig_inside));
  payload.set("eh_poles_inside", JsonValue::integer(report.eh_poles_inside));
  payload.set("identity_holds",
              JsonValue::boolean(
                  report.eh_poles_inside == 0 &&
                  std::abs(report.lhs_count - report.rhs_count) < 0.01));
  return payload;
}

JsonValue run_project(const Options& opt) {
  const StateSpaceSystem sys = require_system(opt);
  const ContourSpec contour = require_contour(opt);
  const ComplexMatrix projection = spectral_projection(sys, contour);
  JsonValue payload = JsonValue::object();
  JsonValue contour_doc = JsonValue::object();
  contour_doc.set("center", JsonValue::complex_number(contour.center));
  contour_doc.set("radius", JsonValue::number(contour.radius));
  contour_doc.set("nodes", JsonValue::integer(contour.nodes));
  payload.set("contour", std::move(contour_doc));
  payload.set("projection", JsonValue::matrix(projection));
  payload.set("trace", JsonValue::complex_number(projection.trace()));
  payload.set("idempotency_residual",
              JsonValue::number((projection * projection - projection).norm()));
  return payload;
}

JsonValue run_iterate(const Options& opt) {
  const StateSpaceSystem sys = require_system(opt);
  if (opt.iter_path.empty()) throw CLI::RequiredError("--iter");
  const std::string text = slurp(opt.iter_path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    raise(ErrorCode::ParseError, opt.iter_path + ": " + err.what());
  }
  auto read_matrix = [&](const char* field) {
    if (!doc.contains(field)) {
      raise(ErrorCode::ParseError,
            opt.iter_path + ": field '" + std::string(field) + "': missing");
    }
    // Reuse the system parser's matrix schema through a wrapper document.
    nlohmann::json wrapper;
    wrapper["a"] = doc[field];
    wrapper["b"] = doc[field];
    return parse_system(wrapper.dump(), opt.iter_path + "#" + field).a;
  };
  const IterationSpec spec{read_matrix("n_minus"), read_matrix("n_plus")};
  const StateSpaceSystem composed = iterate_system(sys, spec);

  JsonValue payload = JsonValue::object();
  payload.set("system", system_to_json_value(composed));
  if (!opt.lambda_text.empty()) {
    const Complex lambda = parse_complex_pair(opt.lambda_text, "--lambda");
    const ComplexMatrix h1 = transfer_function(composed, lambda);
    const ComplexMatrix product =
        spec.n_plus * transfer_function(sys, lambda) * spec.n_minus;
    JsonValue check = JsonValue::object();
    check.set("lambda", JsonValue::complex_number(lambda));
    check.set("h1", JsonValue::matrix(h1));
    check.set("n_plus_h_n_minus", JsonValue::matrix(product));
    check.set("residual", JsonValue::number((h1 - product).norm()));
    payload.set("transfer_check", std::move(check));
  }
  return payload;
}

JsonValue run_riesz(const Options& opt) {
  const StateSpaceSystem sys = require_system(opt);
  const ModalSystem modal = modal_decompose(sys);
  const ReachableDescription desc = reachable_weights(modal, opt.t_end);
  JsonValue payload = JsonValue::object();
  payload.set("t_end", JsonValue::number(opt.t_end));
  payload.set("eigenvalues", JsonValue::vector(modal.eigenvalues));
  payload.set("weights", JsonValue::real_array(desc.weights));
  payload.set("frame_lower", JsonValue::number(desc.frame_lower));
  payload.set("frame_upper", JsonValue::number(desc.frame_upper));
  return payload;
}

JsonValue run_wave(const Options& opt) {
  WaveConfig config;
  config.n_modes = opt.modes;
  const double lo = opt.omega_set ? opt.omega_min : 0.5;
  const double hi = opt.omega_set ? opt.omega_max : opt.modes + 0.5;
  const int steps = opt.omega_set ? opt.omega_steps : 20 * opt.modes + 1;
  const HautusReport report =
      wave_margin_scan(config, linear_grid(lo, hi, steps));
  write_csv(opt.csv_path, report);
  const WaveDecayReport decay = decay_report(config);

  JsonValue payload = JsonValue::object();
  payload.set("modes", JsonValue::integer(opt.modes));
  payload.set("margin", JsonValue::number(report.margin));
  payload.set("argmin_freq", JsonValue::number(report.argmin_freq));
  payload.set("spectral_abscissa", JsonValue::number(decay.spectral_abscissa));
  JsonValue per_mode = JsonValue::array();
  for (const auto& mode : decay.modes) {
    JsonValue entry = JsonValue::object();
    entry.set("k", JsonValue::integer(mode.k));
    JsonValue eigs = JsonValue::array();
    eigs.push_back(JsonValue::complex_number(mode.mu_plus));
    eigs.push_back(JsonValue::complex_number(mode.mu_minus));
    entry.set("eigenvalues", std::move(eigs));
    per_mode.push_back(std::move(entry));
  }
  payload.set("per_mode", std::move(per_mode));
  payload.set("grid_points",
              JsonValue::integer(static_cast<long long>(report.grid.size())));
  return payload;
}

JsonValue run_simulate(const Options& opt) {
  const StateSpaceSystem sys = require_system(opt);
  ComplexVector z0 = opt.z0_text.empty()
                         ? ComplexVector(sys.state_dim())
                         : parse_complex_list(opt.z0_text, "--z0");
  ComplexMatrix input;
  if (!opt.u_const_text.empty()) {
    const ComplexVector u = parse_complex_list(opt.u_const_text, "--u-const");
    if (u.dim() != sys.input_dim()) {
      raise(ErrorCode::InvalidGrid, "--u-const dimension mismatch");
    }
    const Index steps = std::max<Index>(
        1, static_cast<Index>(std::llround(opt.t_end / opt.dt)));
    Eigen::MatrixXcd samples(sys.input_dim(), steps);
    for (Index k = 0; k < steps; ++k) samples.col(k) = u.eigen();
    input = ComplexMatrix(std::move(samples));
  }
  const Trajectory traj = simulate(sys, z0, input, opt.t_end, opt.dt);
  JsonValue payload = JsonValue::object();
  payload.set("t_end", JsonValue::number(opt.t_end));
  payload.set("dt", JsonValue::number(opt.dt));
  payload.set("steps",
              JsonValue::integer(static_cast<long long>(traj.times.size() - 1)));
  payload.set("final_time", JsonValue::number(traj.times.back()));
  payload.set("final_state", JsonValue::vector(traj.states.back()));
  payload.set("final_output", JsonValue::vector(traj.outputs.back()));
  std::vector<double> norms;
  norms.reserve(traj.states.size());
  for (const auto& z : traj.states) norms.push_back(z.norm());
  payload.set("state_norms", JsonValue::real_array(norms));
  return payload;
}

int run_batch(const Options& opt) {
  if (opt.input_path.empty()) throw CLI::RequiredError("--input");
  const std::string text = slurp(opt.input_path);
  std::stringstream stream(text);
  std::string line;
  int status = 0;
  while (std::getline(stream, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> args;
    args.emplace_back("grushin");
    std::stringstream parts(line);
    std::string token;
    while (parts >> token) args.push_back(token);
    if (args.size() == 1) continue;
    if (args[1] == "batch") {
      std::cerr << "error: nested batch invocations are not allowed\n";
      if (status == 0) status = 1;
      continue;
    }
    std::vector<char*> argv;
    argv.reserve(args.size());
    for (auto& a : args) argv.push_back(a.data());
    const int rc = dispatch(static_cast<int>(argv.size()), argv.data());
    if (rc != 0 && status == 0) status = rc;
  }
  return status;
}

void emit_report(const std::string& command, const Options& opt,
                 JsonValue payload) {
  AnalysisReport report;
  report.command = command;
  report.inputs_digest = compute_digest(command, opt);
  report.payload = std::move(payload);
  report.tool_version = kToolVersion;
  std::cout << report.to_json() << "\n";
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Grushin-problem analysis of linear control systems"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input) {
      cmd->add_option("--input", opt.input_path, "system description file");
    }
    cmd->add_option("--tol", opt.tol, "residual tolerance for ok-flags");
    cmd->add_option("--seed", opt.seed, "seed for randomized probe vectors");
  };
  auto add_omega = [&](CLI::App* cmd) {
    cmd->add_option("--omega-min", opt.omega_min, "lowest frequency")
        ->each([&](const std::string&) { opt.omega_set = true; });
    cmd->add_option("--omega-max", opt.omega_max, "highest frequency")
        ->each([&](const std::string&) { opt.omega_set = true; });
    cmd->add_option("--omega-steps", opt.omega_steps, "number of grid points")
        ->each([&](const std::string&) { opt.omega_set = true; });
    cmd->add_option("--csv", opt.csv_path, "write omega,margin rows to a file");
  };
  auto add_lambda = [&](CLI::App* cmd) {
    cmd->add_option("--lambda", opt.lambda_text, "complex frequency RE,IM");
  };
  auto add_contour = [&](CLI::App* cmd) {
    cmd->add_option("--contour-center", opt.contour_center_text,
                    "contour center RE,IM");
    cmd->add_option("--contour-radius", opt.contour_radius, "contour radius");
    cmd->add_option("--nodes", opt.nodes, "quadrature nodes (>= 16)");
  };
  auto add_horizon = [&](CLI::App* cmd) {
    cmd->add_option("--t-end", opt.t_end, "time horizon");
    cmd->add_option("--dt", opt.dt, "time step");
  };

  CLI::App* schur = app.add_subcommand("schur", "Grushin blocks and Schur recovery");
  add_common(schur, true);
  add_lambda(schur);

  CLI::App* transfer = app.add_subcommand("transfer", "transfer function H(lambda)");
  add_common(transfer, true);
  add_lambda(transfer);

  CLI::App* hautus = app.add_subcommand("hautus", "frequency-swept Hautus margin");
  add_common(hautus, true);
  add_omega(hautus);

  CLI::App* gram = app.add_subcommand("gramian", "finite-horizon Gramian");
  add_common(gram, true);
  gram->add_option("--kind", opt.kind_text, "observability|controllability");
  add_horizon(gram);

  CLI::App* certify = app.add_subcommand("certify", "certified Hautus-type bound");
  add_common(certify, true);
  add_lambda(certify);

  CLI::App* trace = app.add_subcommand("trace", "contour trace-formula counts");
  add_common(trace, true);
  add_contour(trace);
  trace->add_option("--g", opt.g_text, "polynomial weight coefficients c0,c1,...");

  CLI::App* project = app.add_subcommand("project", "Riesz spectral projection");
  add_common(project, true);
  add_contour(project);

  CLI::App* iterate = app.add_subcommand("iterate", "coupled Grushin iteration");
  add_common(iterate, true);
  iterate->add_option("--iter", opt.iter_path,
                      "couplings file with n_minus, n_plus matrices");
  add_lambda(iterate);

  CLI::App* riesz = app.add_subcommand("riesz", "moment weights and frame bounds");
  add_common(riesz, true);
  add_horizon(riesz);

  CLI::App* wave = app.add_subcommand("wave", "damped wave example report");
  add_common(wave, false);
  wave->add_option("--modes", opt.modes, "number of Laplacian modes");
  add_omega(wave);

  CLI::App* sim = app.add_subcommand("simulate", "exact-propagator simulation");
  add_common(sim, true);
  add_horizon(sim);
  sim->add_option("--z0", opt.z0_text, "initial state re,im;re,im;...");
  sim->add_option("--u-const", opt.u_const_text, "constant input re,im;...");

  CLI::App* batch = app.add_subcommand("batch", "run invocations listed in a file");
  batch->add_option("--input", opt.input_path, "file with one invocation per line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err);
  }

  try {
    if (schur->parsed()) emit_report("schur", opt, run_schur(opt));
    else if (transfer->parsed()) emit_report("transfer", opt, run_transfer(opt));
    else if (hautus->parsed()) emit_report("hautus", opt, run_hautus(opt));
    else if (gram->parsed()) emit_report("gramian", opt, run_gramian(opt));
    else if (certify->parsed()) emit_report("certify", opt, run_certify(opt));
    else if (trace->parsed()) emit_report("trace", opt, run_trace(opt));
    else if (project->parsed()) emit_report("project", opt, run_project(opt));
    else if (iterate->parsed()) emit_report("iterate", opt, run_iterate(opt));
    else if (riesz->parsed()) emit_report("riesz", opt, run_riesz(opt));
    else if (wave->parsed()) emit_report("wave", opt, run_wave(opt));
    else if (sim->parsed()) emit_report("simulate", opt, run_simulate(opt));
    else if (batch->parsed()) return run_batch(opt);
  } catch (const CLI::RequiredError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const CLI::ValidationError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const Error& err) {
    JsonValue record = JsonValue::object();
    record.set("error", JsonValue::string(err.name()));
    record.set("context", JsonValue::string(err.what()));
    std::cerr << record.dump() << "\n";
    return err.code() == ErrorCode::ParseError ? 1 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return dispatch(argc, argv); }
