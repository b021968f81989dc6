// Copyright 2026 The eawmr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eawmr/baselines.hpp"
#include "eawmr/channel_io.hpp"
#include "eawmr/channels.hpp"
#include "eawmr/montecarlo.hpp"
#include "eawmr/optimizer.hpp"
#include "eawmr/restoration.hpp"

namespace {

using eawmr::KrausChannel;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInput = 2;

struct ChannelFlags {
  std::optional<double> gamma_a;
  std::optional<double> gamma_b;
  std::optional<double> gamma;
  std::string channel_path;
};

void add_channel_flags(CLI::App* cmd, ChannelFlags& f) {
  auto* ga = cmd->add_option("--gamma-a", f.gamma_a,
                             "Decay amplitude of qubit A (two-qubit channel)")
                 ->check(CLI::Range(0.0, 1.0));
  auto* gb = cmd->add_option("--gamma-b", f.gamma_b,
                             "Decay amplitude of qubit B (two-qubit channel)")
                 ->check(CLI::Range(0.0, 1.0));
  auto* g = cmd->add_option("--gamma", f.gamma,
                            "Single-qubit decay amplitude")
                ->check(CLI::Range(0.0, 1.0))
                ->excludes(ga)
                ->excludes(gb);
  cmd->add_option("--channel", f.channel_path, "Channel JSON file")
      ->excludes(ga)
      ->excludes(gb)
      ->excludes(g);
  ga->needs(gb);
  gb->needs(ga);
}

KrausChannel make_channel(const ChannelFlags& f, json& config) {
  if (!f.channel_path.empty()) {
    config["channel_file"] = f.channel_path;
    return eawmr::load_channel(f.channel_path);
  }
  if (f.gamma) {
    config["gamma"] = *f.gamma;
    return eawmr::amplitude_damping(*f.gamma);
  }
  if (f.gamma_a && f.gamma_b) {
    config["gamma_a"] = *f.gamma_a;
    config["gamma_b"] = *f.gamma_b;
    return eawmr::two_qubit_dissipative(
        eawmr::DecayParams(*f.gamma_a, *f.gamma_b));
  }
  throw std::invalid_argument(
      "no channel given: pass --gamma-a/--gamma-b, --gamma, or --channel");
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

// The state family alpha|0...0> + beta|1...1> used throughout.
eawmr::PureState alpha_state(int dim, double alpha) {
  if (dim != 2 && dim != 4)
    throw std::invalid_argument(
        "--alpha states are defined for dim 2 and dim 4 channels only");
  const double beta = std::sqrt(1.0 - alpha * alpha);
  std::vector<eawmr::Complex> amps(dim);
  amps.front() = alpha;
  amps.back() = beta;
  return eawmr::PureState(std::move(amps));
}

int cmd_pew(const ChannelFlags& flags, const std::string& output) {
  json config{{"command", "pew"}};
  const KrausChannel ch = make_channel(flags, config);

  json ops = json::array();
  for (int n = 0; n < ch.size(); ++n) {
    const double nc = eawmr::normalization_constant(ch.op(n));
    ops.push_back(json{{"index", n},
                       {"n_sq", nc * nc},
                       {"invertible", eawmr::reversible(ch.op(n))}});
  }
  json report{{"p_ew", eawmr::p_ew(ch)},
              {"operators", ops},
              {"config", config}};
  write_output(output, report.dump(2) + "\n");
  return kExitOk;
}

int cmd_ru_check(const ChannelFlags& flags, const std::string& output) {
  json config{{"command", "ru-check"}};
  const KrausChannel ch = make_channel(flags, config);
  const eawmr::RuDetection det = eawmr::detect_ru(ch);

  json report;
  report["ru"] = det.is_ru();
  if (det.is_ru()) {
    json coeffs = json::array();
    for (const eawmr::Complex& c : det.decomposition->coeffs())
      coeffs.push_back(c.real());  // real non-negative by convention
    report["coeffs"] = coeffs;
  } else {
    report["failing_index"] = det.failing_index;
  }
  report["config"] = config;
  write_output(output, report.dump(2) + "\n");
  return kExitOk;
}

int cmd_ratio_grid(double p1, double p2, int alpha_steps, int t_steps,
                   double rate, double t_max, const std::string& output,
                   bool gnuplot) {
  const eawmr::DecayProfile profile(rate);
  const auto rows =
      eawmr::ratio_grid(p1, p2, alpha_steps, t_steps, profile, t_max);

  std::ostringstream csv;
  csv << "t,alpha,ratio\n";
  for (const auto& row : rows)
    csv << eawmr::format_full_precision(row.t) << ","
        << eawmr::format_full_precision(row.alpha) << ","
        << eawmr::format_full_precision(row.ratio) << "\n";
  write_output(output, csv.str());

  if (gnuplot) {
    if (output == "-")
      throw std::invalid_argument("--gnuplot needs --output FILE");
    std::cout << "set datafile separator \",\"\n"
              << "set xlabel \"t\"\n"
              << "set ylabel \"alpha\"\n"
              << "set zlabel \"P_WM / P_EW\"\n"
              << "set dgrid3d " << t_steps << "," << alpha_steps << "\n"
              << "set hidden3d\n"
              << "splot \"" << output
              << "\" every ::1 using 1:2:3 with lines notitle\n"
              << "pause -1\n";
  }
  return kExitOk;
}

int cmd_sweep(double gamma, int points, double delta_max,
              const std::string& format, const std::string& output,
              bool gnuplot) {
  const eawmr::SweepCurve curve =
      eawmr::sweep_delta(gamma, points, delta_max);

  std::ostringstream out;
  out << "delta,p_ew\n";
  for (const auto& p : curve.points())
    out << eawmr::format_full_precision(p.delta) << ","
        << eawmr::format_full_precision(p.p_ew) << "\n";

  if (format == "json") {
    const auto arg = eawmr::argmax_delta(curve);
    double best = 0.0;
    for (const auto& p : curve.points()) best = std::max(best, p.p_ew);
    json summary{{"argmax_deltas", arg},
                 {"max_p_ew", best},
                 {"config",
                  json{{"command", "sweep"},
                       {"gamma", gamma},
                       {"points", points},
                       {"delta_max", delta_max}}}};
    out << summary.dump() << "\n";
  }
  write_output(output, out.str());

  if (gnuplot) {
    if (output == "-")
      throw std::invalid_argument("--gnuplot needs --output FILE");
    // row bounds skip the header and, in json mode, the summary line
    std::cout << "set datafile separator \",\"\n"
              << "set xlabel \"delta (rad)\"\n"
              << "set ylabel \"P_EW\"\n"
              << "set key off\n"
              << "plot \"" << output << "\" every ::1::" << points
              << " using 1:2 with lines\n"
              << "pause -1\n";
  }
  return kExitOk;
}

int cmd_mc(const ChannelFlags& flags, double alpha, std::int64_t n,
           std::uint64_t seed, const std::string& output) {
  json config{{"command", "mc"}};
  const KrausChannel ch = make_channel(flags, config);
  config["alpha"] = alpha;
  config["n"] = n;
  config["seed"] = seed;

  const eawmr::PureState psi0 = alpha_state(ch.dim(), alpha);
  const eawmr::McStats stats = eawmr::run(ch, psi0, n, seed);
  const double analytic = eawmr::p_ew(ch);

  json report{{"n_trials", stats.n_trials},
              {"n_success", stats.n_success},
              {"empirical_p", stats.empirical_p},
              {"std_err", stats.std_err},
              {"analytic_p", analytic}};
  if (stats.min_fidelity) report["min_fidelity"] = *stats.min_fidelity;
  report["seed"] = stats.seed;
  report["config"] = config;
  write_output(output, report.dump(2) + "\n");

  const bool rate_ok =
      std::abs(stats.empirical_p - analytic) <= 4.0 * stats.std_err;
  const bool fidelity_ok =
      !stats.min_fidelity || *stats.min_fidelity >= 1.0 - 1e-9;
  return (rate_ok && fidelity_ok) ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "eawmr: success probabilities and simulation for quantum state\n"
      "restoration that combines an environment measurement with a weak\n"
      "measurement reversal"};
  app.require_subcommand(1);

  // pew
  auto* pew = app.add_subcommand(
      "pew", "Overall success probability with a per-operator breakdown");
  ChannelFlags pew_flags;
  add_channel_flags(pew, pew_flags);
  std::string pew_out = "-";
  pew->add_option("-o,--output", pew_out, "Output path, '-' for stdout")
      ->capture_default_str();

  // ratio-grid
  auto* grid = app.add_subcommand(
      "ratio-grid",
      "CSV grid of the baseline-to-scheme probability ratio over (t, alpha)");
  double p1 = 0.1, p2 = 0.1, rate = 1.0, t_max = 5.0;
  int alpha_steps = 51, t_steps = 51;
  std::string grid_out = "-";
  bool grid_gnuplot = false;
  grid->add_option("--p1-bar", p1, "First weak-measurement strength")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  grid->add_option("--p2-bar", p2, "Second weak-measurement strength")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  grid->add_option("--alpha-steps", alpha_steps, "Grid points along alpha")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  grid->add_option("--t-steps", t_steps, "Grid points along t")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  grid->add_option("--rate", rate, "Decay rate of gamma(t) = exp(-rate*t/2)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  grid->add_option("--t-max", t_max, "Largest time on the grid")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  grid->add_option("-o,--output", grid_out, "Output path, '-' for stdout")
      ->capture_default_str();
  grid->add_flag("--gnuplot", grid_gnuplot,
                 "Print a ready-to-run gnuplot script to stdout");

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep", "CSV sweep of the success probability over the mixing angle");
  double sweep_gamma = 0.6, delta_max = 2.0 * std::numbers::pi;
  int points = 401;
  std::string sweep_out = "-", sweep_format = "csv";
  bool sweep_gnuplot = false;
  sweep->add_option("--gamma", sweep_gamma, "Decay amplitude")
      ->check(CLI::Range(0.0, 1.0))
      ->required();
  sweep->add_option("--points", points, "Number of grid points")
      ->check(CLI::Range(2, 10000000))
      ->capture_default_str();
  sweep->add_option("--delta-max", delta_max, "Upper end of the sweep")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--format", sweep_format,
                    "csv, or json to append a summary line")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep->add_option("-o,--output", sweep_out, "Output path, '-' for stdout")
      ->capture_default_str();
  sweep->add_flag("--gnuplot", sweep_gnuplot,
                  "Print a ready-to-run gnuplot script to stdout");

  // mc
  auto* mc = app.add_subcommand(
      "mc", "Monte Carlo validation of the analytic success probability");
  ChannelFlags mc_flags;
  add_channel_flags(mc, mc_flags);
  double alpha = 0.6;
  std::int64_t n_trials = 100000;
  std::uint64_t seed = 42;
  std::string mc_out = "-";
  mc->add_option("--alpha", alpha,
                 "Initial state alpha|0..0> + sqrt(1-alpha^2)|1..1>")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  mc->add_option("--n", n_trials, "Number of trials")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40))
      ->capture_default_str();
  mc->add_option("--seed", seed, "64-bit seed")->capture_default_str();
  mc->add_option("-o,--output", mc_out, "Output path, '-' for stdout")
      ->capture_default_str();

  // ru-check
  auto* ru = app.add_subcommand(
      "ru-check", "Test whether the channel has a random-unitary form");
  ChannelFlags ru_flags;
  add_channel_flags(ru, ru_flags);
  std::string ru_out = "-";
  ru->add_option("-o,--output", ru_out, "Output path, '-' for stdout")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (pew->parsed()) return cmd_pew(pew_flags, pew_out);
    if (grid->parsed())
      return cmd_ratio_grid(p1, p2, alpha_steps, t_steps, rate, t_max,
                            grid_out, grid_gnuplot);
    if (sweep->parsed())
      return cmd_sweep(sweep_gamma, points, delta_max, sweep_format,
                       sweep_out, sweep_gnuplot);
    if (mc->parsed()) return cmd_mc(mc_flags, alpha, n_trials, seed, mc_out);
    if (ru->parsed()) return cmd_ru_check(ru_flags, ru_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const eawmr::InvariantViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitInput;
}
