#include <chrono>
#include <cmath>
#include <cstdio>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "npeskin/diagnostics.hpp"
#include "npeskin/evolution.hpp"
#include "npeskin/init_expr.hpp"
#include "npeskin/model.hpp"
#include "npeskin/monitors.hpp"
#include "npeskin/random_fields.hpp"
#include "npeskin/stokeslet.hpp"
#include "npeskin/version.hpp"
#include "output.hpp"

namespace fs = std::filesystem;
using namespace npeskin;
using cli::format_double;
using cli::Manifest;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfigError = 2;

struct CommonOptions {
  std::size_t n = 256;
  double dt = 1e-3;
  double t_end = 5.0;
  double epsilon = 0.0;
  std::string scheme = "if-rk4";
  std::string init;
  std::uint64_t seed = 0;
  std::string out_dir = "npeskin-out";
  std::size_t snapshot_stride = 50;
  double amplitude = 0.1;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--n", opt.n, "grid points (power of two)");
  cmd->add_option("--dt", opt.dt, "time step");
  cmd->add_option("--t-end", opt.t_end, "final time");
  cmd->add_option("--seed", opt.seed, "random seed");
  cmd->add_option("--out-dir", opt.out_dir, "output directory");
}

// config keys become option values that explicit command-line flags override;
// every option therefore takes its last occurrence
void allow_overrides(CLI::App& app) {
  for (CLI::App* cmd : app.get_subcommands([](const CLI::App*) { return true; })) {
    for (CLI::Option* o : cmd->get_options())
      if (!o->get_expected_min() || o->get_expected_max() == 1)
        o->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  }
}

std::string strip(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// expands "--config FILE" into the corresponding --key value tokens, placed
// right after the subcommand name so later command-line flags win
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::vector<std::string> from_file;
  for (std::size_t i = 0; i < args.size();) {
    std::string path;
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<long>(i));
    } else {
      ++i;
      continue;
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      line = strip(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("malformed config line (expected key=value): '" + line + "'");
      const std::string key = strip(line.substr(0, eq));
      std::string value = strip(line.substr(eq + 1));
      if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
        value = value.substr(1, value.size() - 2);
      if (key.empty()) throw std::invalid_argument("malformed config line: '" + line + "'");
      from_file.push_back("--" + key);
      from_file.push_back(value);
    }
  }
  if (!from_file.empty()) {
    if (args.empty()) throw std::invalid_argument("--config requires a subcommand");
    args.insert(args.begin() + 1, from_file.begin(), from_file.end());
  }
  return args;
}

SolverConfig solver_config(const CommonOptions& opt) {
  SolverConfig cfg;
  cfg.n_points = opt.n;
  cfg.dt = opt.dt;
  cfg.t_end = opt.t_end;
  cfg.epsilon = opt.epsilon;
  cfg.snapshot_stride = opt.snapshot_stride;
  if (opt.scheme == "if-rk4")
    cfg.scheme = Scheme::if_rk4;
  else if (opt.scheme == "explicit-rk4")
    cfg.scheme = Scheme::explicit_rk4;
  else
    throw std::invalid_argument("unknown scheme '" + opt.scheme + "' (if-rk4 | explicit-rk4)");
  return cfg;
}

class PhaseTimer {
 public:
  explicit PhaseTimer(Manifest& m) : manifest_(m) {}
  template <class F>
  auto time(const std::string& phase, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(body())>) {
      body();
      record(phase, start);
    } else {
      auto result = body();
      record(phase, start);
      return result;
    }
  }

 private:
  void record(const std::string& phase, std::chrono::steady_clock::time_point start) {
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    manifest_.set("phase." + phase + ".seconds", sec);
  }
  Manifest& manifest_;
};

std::string diagnostics_csv(const std::vector<DiagnosticsRecord>& recs) {
  std::string body = "t,sup_h,sup_hprime,l2_hprime_sq,hhalf_hprime_sq,h32_norm,M_x,M_y,mean_h\r\n";
  for (const auto& r : recs) {
    body += format_double(r.t) + "," + format_double(r.sup_h) + "," + format_double(r.sup_hprime) + "," +
            format_double(r.l2_hprime_sq) + "," + format_double(r.hhalf_hprime_sq) + "," +
            format_double(r.h32_norm) + "," + format_double(r.drift[0]) + "," +
            format_double(r.drift[1]) + "," + format_double(r.mean_h) + "\r\n";
  }
  return body;
}

std::string snapshot_csv(const GridFunction& h) {
  std::string body = "s,h\r\n";
  for (std::size_t j = 0; j < h.size(); ++j)
    body += format_double(h.node(j)) + "," + format_double(h[j]) + "\r\n";
  return body;
}

void write_trajectory(const fs::path& dir, const Trajectory& traj, Manifest& manifest) {
  const fs::path diag = dir / "diagnostics.csv";
  cli::write_file_atomic(diag, diagnostics_csv(traj.records));
  manifest.add_output(diag);
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    char name[40];
    std::snprintf(name, sizeof(name), "snapshot_%06zu.csv", k);
    const fs::path snap = dir / name;
    cli::write_file_atomic(snap, snapshot_csv(traj.states[k].h));
    manifest.add_output(snap);
  }
}

int finish(Manifest& manifest, const fs::path& dir) {
  const int code = manifest.all_checks_pass() ? kExitOk : kExitCheckFailed;
  manifest.set("exit", static_cast<long long>(code));
  manifest.write(dir / "manifest.txt");
  std::printf("manifest: %s\n", (dir / "manifest.txt").c_str());
  return code;
}

int run_simulate(const CommonOptions& opt) {
  Manifest manifest;
  PhaseTimer timer(manifest);
  manifest.set("command", std::string("simulate"));
  manifest.set("version", std::string(version));
  manifest.set("n", static_cast<long long>(opt.n));
  manifest.set("dt", opt.dt);
  manifest.set("t_end", opt.t_end);
  manifest.set("epsilon", opt.epsilon);
  manifest.set("scheme", opt.scheme);
  manifest.set("init", opt.init);
  manifest.set("snapshot_stride", static_cast<long long>(opt.snapshot_stride));

  const fs::path dir(opt.out_dir);
  fs::create_directories(dir);
  const GridFunction h0 = timer.time("parse", [&] { return parse_initial_data(opt.init, opt.n); });
  const SolverConfig cfg = solver_config(opt);
  const double w0 = w1inf_norm(h0);
  manifest.set("initial_w1inf", w0);

  const Trajectory traj = timer.time("simulate", [&] { return simulate(h0, cfg); });
  manifest.add_check("completed", !traj.aborted, traj.aborted ? traj.abort_reason : "");

  if (!traj.aborted) {
    if (w0 <= kSmallDataBound) {
      const MaxPrincipleReport rep = maximum_principle_monitor(traj);
      manifest.add_check("lipschitz_monotone", rep.monotone,
                         "worst step increase " + format_double(rep.worst_step_increase));
      if (rep.decay_rate)
        manifest.set("slope_decay_rate", *rep.decay_rate);
      const EnergyReport erep = energy_monitor(traj);
      manifest.add_check("energy_inequality_finite", erep.finite_ok,
                         "K = " + format_double(erep.k_fitted));
      manifest.set("h32_sq_time_integral", erep.h32_sq_time_integral);
    } else {
      manifest.add_skipped_check("lipschitz_monotone", "initial data above the small-data regime");
    }
  }
  timer.time("write", [&] { write_trajectory(dir, traj, manifest); });
  return finish(manifest, dir);
}

// exact spectral flow of the linearized problem with drift absorption
int run_linear(const CommonOptions& opt) {
  Manifest manifest;
  PhaseTimer timer(manifest);
  manifest.set("command", std::string("linear"));
  manifest.set("version", std::string(version));
  manifest.set("n", static_cast<long long>(opt.n));
  manifest.set("init", opt.init);
  manifest.set("epsilon", opt.epsilon);

  const fs::path dir(opt.out_dir);
  fs::create_directories(dir);
  const GridFunction h0 = parse_initial_data(opt.init, opt.n);
  const SpectralCoeffs c0 = dft(h0);
  const long half = static_cast<long>(opt.n) / 2;

  long slowest = 0;
  double c0_scale = 0.0;
  for (long m = -half; m < half; ++m) c0_scale = std::max(c0_scale, std::abs(c0.mode(m)));
  for (long m = 1; m < half; ++m) {
    if (std::abs(c0.mode(m)) > 1e-12 * c0_scale || std::abs(c0.mode(-m)) > 1e-12 * c0_scale) {
      slowest = m;
      break;
    }
  }

  Trajectory traj = timer.time("evolve", [&] {
    Trajectory out;
    const auto steps = static_cast<std::size_t>(std::llround(opt.t_end / opt.dt));
    const auto md0 = drift_velocity(h0);
    for (std::size_t k = 0; k <= steps; k += opt.snapshot_stride) {
      const double t = static_cast<double>(k) * opt.dt;
      SpectralCoeffs c = c0;
      for (long m = -half; m < half; ++m) {
        const double am = std::abs(static_cast<double>(m));
        c.mode(m) *= std::exp(-(0.25 * am + opt.epsilon * am * am) * t);
      }
      RadialState st{idft(c), {0.0, 0.0}, t};
      // drift of the absorbed system: dM/dt tracks the decaying first mode
      const double lam1 = 0.25 + opt.epsilon;
      const double growth = (1.0 - std::exp(-lam1 * t)) / lam1;
      st.drift = {md0[0] * growth, md0[1] * growth};
      out.records.push_back(measure(st));
      out.states.push_back(std::move(st));
    }
    return out;
  });

  if (slowest > 0) {
    const double expected = 0.25 * static_cast<double>(slowest) +
                            opt.epsilon * static_cast<double>(slowest * slowest);
    std::vector<double> t, v;
    for (std::size_t k = traj.records.size() / 2; k < traj.records.size(); ++k) {
      t.push_back(traj.records[k].t);
      v.push_back(std::sqrt(traj.records[k].l2_hprime_sq) + 1e-300);
    }
    double rate = 0.0;
    bool ok = false;
    if (t.size() >= 2 && v.front() > 1e-250) {
      rate = fit_decay_rate(t, v);
      ok = std::abs(rate - expected) <= 0.02 * expected;
    }
    manifest.set("fitted_rate", rate);
    manifest.set("expected_rate", expected);
    manifest.add_check("linear_decay_rate", ok,
                       "fitted " + format_double(rate) + " vs " + format_double(expected));
    std::printf("linear decay: fitted %.6f, expected %.6f\n", rate, expected);
  } else {
    manifest.add_skipped_check("linear_decay_rate", "no decaying mode in the initial data");
  }
  write_trajectory(dir, traj, manifest);
  return finish(manifest, dir);
}

int run_sweep(const CommonOptions& opt, const std::string& eps_list, bool mollify) {
  Manifest manifest;
  PhaseTimer timer(manifest);
  manifest.set("command", std::string("sweep"));
  manifest.set("version", std::string(version));
  manifest.set("n", static_cast<long long>(opt.n));
  manifest.set("init", opt.init);
  manifest.set("epsilon_list", eps_list);

  std::vector<double> eps;
  {
    std::size_t pos = 0;
    while (pos < eps_list.size()) {
      std::size_t end = eps_list.find(',', pos);
      if (end == std::string::npos) end = eps_list.size();
      eps.push_back(std::stod(eps_list.substr(pos, end - pos)));
      pos = end + 1;
    }
  }

  const fs::path dir(opt.out_dir);
  fs::create_directories(dir);
  const GridFunction h0 = parse_initial_data(opt.init, opt.n);
  SolverConfig cfg = solver_config(opt);
  cfg.mollify_init = mollify;

  const SweepResult sweep = timer.time("sweep", [&] {
    return viscosity_sweep(h0, cfg, eps);
  });
  for (std::size_t k = 0; k < sweep.runs.size(); ++k) {
    char name[48];
    std::snprintf(name, sizeof(name), "diagnostics_eps_%zu.csv", k);
    const fs::path path = dir / name;
    cli::write_file_atomic(path, diagnostics_csv(sweep.runs[k].records));
    manifest.add_output(path);
    manifest.set("epsilon." + std::to_string(k), sweep.epsilons[k]);
  }
  for (std::size_t k = 0; k < sweep.distances.size(); ++k) {
    manifest.set("distance." + std::to_string(k), sweep.distances[k]);
    std::printf("d(eps=%g, eps=%g) = %.6e\n", sweep.epsilons[k], sweep.epsilons[k + 1],
                sweep.distances[k]);
  }
  bool positive = true;
  for (double d : sweep.distances) positive = positive && d > 0.0;
  manifest.add_check("distances_decreasing", sweep.distances_decreasing && positive);
  return finish(manifest, dir);
}

int run_oracle(const CommonOptions& opt) {
  Manifest manifest;
  PhaseTimer timer(manifest);
  manifest.set("command", std::string("oracle"));
  manifest.set("version", std::string(version));
  manifest.set("n", static_cast<long long>(opt.n));
  manifest.set("amplitude", opt.amplitude);
  manifest.set("seed", static_cast<long long>(opt.seed));

  const fs::path dir(opt.out_dir);
  fs::create_directories(dir);

  const double rel = timer.time("oracle", [&] {
    const QuadratureRule rule(opt.n);
    const GridFunction h = random_smooth_field(opt.seed, opt.n, opt.amplitude);
    const GridFunction vector_path = radial_projection(curve_velocity(radial_curve(h), rule));
    const GridFunction scalar_path = contour_terms(h, rule).sum();
    return sup_norm(vector_path - scalar_path) / sup_norm(scalar_path);
  });
  manifest.set("relative_sup_error", rel);
  manifest.add_check("scalar_matches_vector", rel <= 1e-6, format_double(rel));
  std::printf("scalar vs vector relative sup error: %.3e\n", rel);
  return finish(manifest, dir);
}

struct SuiteResult {
  int passed = 0, total = 0;
};

SuiteResult verify_lemmas(std::uint64_t seed, std::size_t n) {
  SuiteResult res;
  for (int i = 0; i < 50; ++i) {
    const GridFunction f = random_smooth_field(seed * 1000 + static_cast<std::uint64_t>(i), n, 0.5, 10);
    const GridFunction b = i < 20
                               ? random_nonnegative_weight(seed * 2000 + static_cast<std::uint64_t>(i), n)
                               : GridFunction::sample(n, [](double) { return 1.0; });
    const LemmaReport rep = lemma_checks(f, b);
    const bool ok = rep.signs_pass(1e-10) && rep.lambda_at_argmax > 0.0;
    res.total++;
    res.passed += ok ? 1 : 0;
    if (!ok)
      std::printf("lemma case %d: FAIL (margins %.3e %.3e %.3e %.3e, peak %.3e)\n", i,
                  rep.monotone_margin_at_max, rep.monotone_margin_at_min, rep.weighted_margin_at_max,
                  rep.weighted_margin_at_min, rep.lambda_at_argmax);
  }
  // by-parts route must improve under node doubling on a sample of fields
  for (int i = 0; i < 5; ++i) {
    auto err = [&](std::size_t grid) {
      const QuadratureRule rule(grid);
      const GridFunction f = random_smooth_field(seed * 3000 + static_cast<std::uint64_t>(i), grid, 0.5, 6);
      return sup_norm(lambda_slope_by_parts(f, rule) - lambda_pow(derivative(f, 1), 1.0));
    };
    res.total++;
    res.passed += (err(2 * n) < err(n)) ? 1 : 0;
  }
  return res;
}

SuiteResult verify_identities(std::uint64_t seed, std::size_t n) {
  SuiteResult res;
  const QuadratureRule rule(n);
  auto check = [&](bool ok, const char* what) {
    res.total++;
    res.passed += ok ? 1 : 0;
    if (!ok) std::printf("identity FAIL: %s\n", what);
  };
  for (int i = 0; i < 5; ++i) {
    const GridFunction f = random_smooth_field(seed * 100 + static_cast<std::uint64_t>(i), n, 0.3, 10);
    GridFunction mean_free = f;
    const double mu = mean(f);
    for (std::size_t j = 0; j < n; ++j) mean_free[j] -= mu;
    check(sup_norm(hilbert(hilbert(f)) + mean_free) < 1e-12, "hilbert squared");
    check(sup_norm(lambda_pow(f, 1.0) - hilbert(derivative(f, 1))) < 1e-12, "lambda = H d/ds");
    check(std::abs(energy_identity_spectral(f) - energy_identity_double_sum(f, rule)) < 1e-10,
          "energy identity");
    const ContourTerms split = contour_terms(f, rule, KernelForm::split_log);
    const ContourTerms raw = contour_terms(f, rule, KernelForm::raw);
    check(sup_norm(split.radial_term - raw.radial_term) < 1e-12, "kernel arrangement");
    const auto terms = slope_terms(f, rule);
    GridFunction total(n);
    for (const auto& t : terms) total += t;
    check(sup_norm(total - derivative(split.sum(), 1)) < 1e-6, "slope decomposition");
  }
  return res;
}

SuiteResult verify_oracle(std::uint64_t seed, std::size_t n, double amplitude) {
  SuiteResult res;
  const QuadratureRule rule(n);
  for (int i = 0; i < 10; ++i) {
    const GridFunction h =
        random_smooth_field(seed * 10 + static_cast<std::uint64_t>(i), n, amplitude);
    const GridFunction vector_path = radial_projection(curve_velocity(radial_curve(h), rule));
    const GridFunction scalar_path = contour_terms(h, rule).sum();
    const double rel = sup_norm(vector_path - scalar_path) / sup_norm(scalar_path);
    res.total++;
    res.passed += rel <= 1e-6 ? 1 : 0;
    if (rel > 1e-6) std::printf("oracle case %d: FAIL rel %.3e\n", i, rel);
  }
  return res;
}

SuiteResult verify_mode_eigenvalues() {
  SuiteResult res;
  for (int m = 1; m <= 64; ++m) {
    bool ok = true;
    for (const auto& l : linear_mode_eigenvalues(m)) {
      const double am = std::abs(m);
      ok = ok && std::abs(l * l + 0.5 * am * l + (am * am - 1.0) / 16.0) <= 1e-12;
    }
    res.total++;
    res.passed += ok ? 1 : 0;
  }
  return res;
}

int run_verify(const CommonOptions& opt, const std::string& suite) {
  Manifest manifest;
  manifest.set("command", std::string("verify"));
  manifest.set("version", std::string(version));
  manifest.set("suite", suite);
  manifest.set("seed", static_cast<long long>(opt.seed));
  const fs::path dir(opt.out_dir);
  fs::create_directories(dir);

  auto record = [&](const char* name, const SuiteResult& r) {
    std::printf("%s: %d/%d pass\n", name, r.passed, r.total);
    manifest.add_check(name, r.passed == r.total,
                       std::to_string(r.passed) + "/" + std::to_string(r.total));
  };
  bool known = false;
  if (suite == "lemmas" || suite == "all") {
    record("lemmas", verify_lemmas(opt.seed, 128));
    known = true;
  }
  if (suite == "identities" || suite == "all") {
    record("identities", verify_identities(opt.seed, 128));
    known = true;
  }
  if (suite == "oracle" || suite == "all") {
    record("oracle", verify_oracle(opt.seed, opt.n, opt.amplitude));
    known = true;
  }
  if (suite == "modes" || suite == "all") {
    record("modes", verify_mode_eigenvalues());
    known = true;
  }
  if (!known) throw std::invalid_argument("unknown suite '" + suite + "' (lemmas|identities|oracle|modes|all)");
  return finish(manifest, dir);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"N-Peskin radial contour model: simulation and verification"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string eps_list = "0.1,0.05,0.025,0.0125";
  std::string suite = "all";
  bool mollify = true;

  CLI::App* simulate_cmd = app.add_subcommand("simulate", "evolve the nonlinear model");
  add_common(simulate_cmd, opt);
  simulate_cmd->add_option("--init", opt.init, "initial data (expression or mode list)")->required();
  simulate_cmd->add_option("--epsilon", opt.epsilon, "viscosity");
  simulate_cmd->add_option("--scheme", opt.scheme, "if-rk4 | explicit-rk4");
  simulate_cmd->add_option("--snapshot-stride", opt.snapshot_stride, "steps between snapshots");

  CLI::App* linear_cmd = app.add_subcommand("linear", "exact flow of the linearized model");
  add_common(linear_cmd, opt);
  linear_cmd->add_option("--init", opt.init, "initial data (expression or mode list)")->required();
  linear_cmd->add_option("--epsilon", opt.epsilon, "viscosity");
  linear_cmd->add_option("--snapshot-stride", opt.snapshot_stride, "steps between snapshots");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "vanishing-viscosity sweep");
  add_common(sweep_cmd, opt);
  sweep_cmd->add_option("--init", opt.init, "initial data (expression or mode list)")->required();
  sweep_cmd->add_option("--epsilon", eps_list, "descending comma-separated viscosities");
  sweep_cmd->add_option("--scheme", opt.scheme, "if-rk4 | explicit-rk4");
  sweep_cmd->add_option("--snapshot-stride", opt.snapshot_stride, "steps between snapshots");
  sweep_cmd->add_flag("--mollify,!--no-mollify", mollify, "heat-mollify the initial data at each viscosity");

  CLI::App* verify_cmd = app.add_subcommand("verify", "randomized property suites");
  add_common(verify_cmd, opt);
  verify_cmd->add_option("--suite", suite, "lemmas | identities | oracle | modes | all");
  verify_cmd->add_option("--amplitude", opt.amplitude, "field size for randomized cases");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "scalar model vs the vector boundary integral");
  add_common(oracle_cmd, opt);
  oracle_cmd->add_option("--amplitude", opt.amplitude, "field size");

  allow_overrides(app);
  try {
    std::vector<std::string> args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return kExitConfigError;
  }

  try {
    if (simulate_cmd->parsed()) return run_simulate(opt);
    if (linear_cmd->parsed()) return run_linear(opt);
    if (sweep_cmd->parsed()) return run_sweep(opt, eps_list, mollify);
    if (verify_cmd->parsed()) return run_verify(opt, suite);
    if (oracle_cmd->parsed()) {
      if (!oracle_cmd->count("--n")) opt.n = 512;
      return run_oracle(opt);
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return kExitConfigError;
  } catch (const GeometryError& e) {
    std::fprintf(stderr, "geometry error: %s\n", e.what());
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCheckFailed;
  }
  return kExitConfigError;
}
