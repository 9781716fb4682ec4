// Command-line surface: evaluate energies, compute lower bounds and
// simplex-transition thresholds, run particle minimization and sweeps.
//
// Exit codes: 0 success, 1 I/O error, 2 validation error, 3 unsupported
// parameter range.
//
// Option precedence (last wins): built-in default < --config file < flag.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "powerlaw/io.hpp"
#include "powerlaw/powerlaw.hpp"

namespace {

struct io_error : std::runtime_error {
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw io_error("failed reading file: " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open output file: " + path);
  out << text;
  if (!out) throw io_error("failed writing file: " + path);
}

struct ConfigDefaults {
  nlohmann::json values = nlohmann::json::object();

  template <class T>
  void apply(const std::string& key, T& target) const {
    if (values.contains(key)) target = values.at(key).get<T>();
  }
  bool has(const std::string& key) const { return values.contains(key); }
};

ConfigDefaults load_config(int argc, char** argv) {
  ConfigDefaults cfg;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") {
      cfg.values = nlohmann::json::parse(read_file(argv[i + 1]));
      if (!cfg.values.is_object())
        throw std::invalid_argument("config file must hold a JSON object");
    }
  }
  return cfg;
}

// An option counts as provided when passed as a flag or present in --config.
void require_provided(const ConfigDefaults& cfg,
                      std::initializer_list<std::pair<CLI::Option*, const char*>> opts) {
  for (const auto& [opt, key] : opts)
    if (opt->count() == 0 && !cfg.has(key))
      throw std::invalid_argument(std::string("missing required option --") + key);
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

std::vector<double> parse_grid(const std::string& text) {
  double lo = 0.0, hi = 0.0, step = 0.0;
  char c1 = 0, c2 = 0;
  std::istringstream ss(text);
  if (!(ss >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !(step > 0.0) || hi < lo)
    throw std::invalid_argument("grid must be lo:hi:step with step > 0 and hi >= lo");
  std::vector<double> vals;
  const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
  for (int i = 0; i < count; ++i) vals.push_back(lo + i * step);
  return vals;
}

int run(int argc, char** argv) {
  const ConfigDefaults cfg = load_config(argc, argv);

  CLI::App app{"Interaction energies for attractive-repulsive power-law kernels"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with default option values");

  // --- energy ---------------------------------------------------------
  auto* energy_cmd = app.add_subcommand("energy", "Evaluate the pairwise energy of a measure");
  std::string measure_path, special_kind, energy_out;
  int energy_n = 0;
  double energy_alpha = 0.0, energy_beta = 0.0, special_radius = 0.0;
  bool with_d2beta = false;
  cfg.apply("measure", measure_path);
  cfg.apply("special", special_kind);
  cfg.apply("n", energy_n);
  cfg.apply("alpha", energy_alpha);
  cfg.apply("beta", energy_beta);
  cfg.apply("radius", special_radius);
  cfg.apply("out", energy_out);
  energy_cmd->add_option("--measure", measure_path, "Measure JSON file");
  energy_cmd->add_option("--special", special_kind, "simplex | cross-polytope");
  energy_cmd->add_option("--n", energy_n, "Dimension (for --special)");
  energy_cmd->add_option("--radius", special_radius, "Radius (cross-polytope only)");
  auto* energy_alpha_opt = energy_cmd->add_option("--alpha", energy_alpha, "Attraction exponent");
  auto* energy_beta_opt = energy_cmd->add_option("--beta", energy_beta, "Repulsion exponent");
  energy_cmd->add_flag("--d2beta", with_d2beta, "Also report d^2 E / d beta^2");
  energy_cmd->add_option("--out", energy_out, "Output path (default stdout)");

  // --- bounds ---------------------------------------------------------
  auto* bounds_cmd = app.add_subcommand("bounds", "Lower bounds on the minimal energy");
  int bounds_n = 0, bounds_grid = 64;
  double bounds_alpha = 0.0, bounds_beta = 0.0;
  std::string bounds_format = "json", bounds_out;
  cfg.apply("n", bounds_n);
  cfg.apply("alpha", bounds_alpha);
  cfg.apply("beta", bounds_beta);
  cfg.apply("grid-size", bounds_grid);
  cfg.apply("format", bounds_format);
  cfg.apply("out", bounds_out);
  auto* bounds_n_opt = bounds_cmd->add_option("--n", bounds_n, "Dimension");
  auto* bounds_alpha_opt = bounds_cmd->add_option("--alpha", bounds_alpha, "Attraction exponent");
  auto* bounds_beta_opt = bounds_cmd->add_option("--beta", bounds_beta, "Repulsion exponent");
  bounds_cmd->add_option("--grid-size", bounds_grid, "Two-step search grid size");
  bounds_cmd->add_option("--format", bounds_format, "json | csv");
  bounds_cmd->add_option("--out", bounds_out, "Output path (default stdout)");

  // --- threshold ------------------------------------------------------
  auto* thr_cmd = app.add_subcommand("threshold", "Simplex-transition threshold lower bounds");
  int thr_n = 0;
  double thr_beta = 0.0;
  std::string thr_grid, thr_out;
  cfg.apply("n", thr_n);
  cfg.apply("beta", thr_beta);
  cfg.apply("grid", thr_grid);
  cfg.apply("out", thr_out);
  auto* thr_n_opt = thr_cmd->add_option("--n", thr_n, "Dimension");
  auto* thr_beta_opt = thr_cmd->add_option("--beta", thr_beta, "Single beta value");
  auto* thr_grid_opt = thr_cmd->add_option("--grid", thr_grid, "Beta grid lo:hi:step (CSV)");
  thr_cmd->add_option("--out", thr_out, "Output path (default stdout)");

  // --- minimize -------------------------------------------------------
  auto* min_cmd = app.add_subcommand("minimize", "Particle-based energy minimization");
  powerlaw::MinimizeConfig mc;
  mc.restarts = 8;
  mc.max_iters = 10000;
  int min_n = 0;
  double min_alpha = 0.0, min_beta = 0.0;
  std::string min_out;
  cfg.apply("n", min_n);
  cfg.apply("alpha", min_alpha);
  cfg.apply("beta", min_beta);
  cfg.apply("k", mc.k);
  cfg.apply("seed", mc.seed);
  cfg.apply("restarts", mc.restarts);
  cfg.apply("max-iters", mc.max_iters);
  cfg.apply("step-init", mc.step_init);
  cfg.apply("grad-tol", mc.grad_tol);
  cfg.apply("cluster-eps", mc.cluster_eps);
  cfg.apply("optimize-weights", mc.optimize_weights);
  cfg.apply("out", min_out);
  auto* min_n_opt = min_cmd->add_option("--n", min_n, "Dimension");
  auto* min_alpha_opt = min_cmd->add_option("--alpha", min_alpha, "Attraction exponent");
  auto* min_beta_opt = min_cmd->add_option("--beta", min_beta, "Repulsion exponent");
  auto* min_k_opt = min_cmd->add_option("--k", mc.k, "Particle count");
  auto* min_seed_opt = min_cmd->add_option("--seed", mc.seed, "Master RNG seed");
  min_cmd->add_option("--restarts", mc.restarts, "Independent restarts");
  min_cmd->add_option("--max-iters", mc.max_iters, "Iteration cap per descent");
  min_cmd->add_option("--step-init", mc.step_init, "Initial line-search step");
  min_cmd->add_option("--grad-tol", mc.grad_tol, "Gradient-norm stopping tolerance");
  min_cmd->add_flag("--optimize-weights", mc.optimize_weights, "Also optimize weights");
  min_cmd->add_option("--cluster-eps", mc.cluster_eps,
                      "Clustering radius (default 1e-3 e^{1/beta})");
  min_cmd->add_option("--out", min_out, "Output path (default stdout)");

  // --- sweep ----------------------------------------------------------
  auto* sweep_cmd = app.add_subcommand("sweep", "Support-cardinality sweep over beta");
  int sweep_n = 0, sweep_kcap = 512, sweep_restarts = 8, sweep_iters = 4000;
  double sweep_alpha = 0.0, sweep_gradtol = 1e-7;
  std::uint64_t sweep_seed = 0;
  std::vector<double> sweep_betas;
  std::string sweep_out;
  cfg.apply("n", sweep_n);
  cfg.apply("alpha", sweep_alpha);
  cfg.apply("betas", sweep_betas);
  cfg.apply("seed", sweep_seed);
  cfg.apply("k-cap", sweep_kcap);
  cfg.apply("restarts", sweep_restarts);
  cfg.apply("max-iters", sweep_iters);
  cfg.apply("grad-tol", sweep_gradtol);
  cfg.apply("out", sweep_out);
  auto* sweep_n_opt = sweep_cmd->add_option("--n", sweep_n, "Dimension");
  auto* sweep_alpha_opt = sweep_cmd->add_option("--alpha", sweep_alpha, "Attraction exponent");
  auto* sweep_betas_opt =
      sweep_cmd->add_option("--betas", sweep_betas, "Comma-separated beta list")->delimiter(',');
  auto* sweep_seed_opt = sweep_cmd->add_option("--seed", sweep_seed, "Master RNG seed");
  sweep_cmd->add_option("--k-cap", sweep_kcap, "Adaptive particle-count cap");
  sweep_cmd->add_option("--restarts", sweep_restarts, "Restarts at the smallest k");
  sweep_cmd->add_option("--max-iters", sweep_iters, "Iteration cap per descent");
  sweep_cmd->add_option("--grad-tol", sweep_gradtol, "Gradient-norm stopping tolerance");
  sweep_cmd->add_option("--out", sweep_out, "Output path (default stdout)");

  app.parse(argc, argv);

  if (energy_cmd->parsed()) {
    require_provided(cfg, {{energy_alpha_opt, "alpha"}, {energy_beta_opt, "beta"}});
    powerlaw::DiscreteMeasure mu;
    const bool have_measure = !measure_path.empty();
    const bool have_special = !special_kind.empty();
    if (have_measure == have_special)
      throw std::invalid_argument("energy: provide exactly one of --measure or --special");
    if (have_measure) {
      mu = powerlaw::measure_from_json(nlohmann::json::parse(read_file(measure_path)));
    } else if (special_kind == "simplex") {
      mu = powerlaw::simplex_measure(energy_n);
    } else if (special_kind == "cross-polytope") {
      if (!(special_radius > 0.0))
        throw std::invalid_argument("energy: cross-polytope requires --radius > 0");
      mu = powerlaw::cross_polytope_measure(energy_n, special_radius);
    } else {
      throw std::invalid_argument("energy: --special must be simplex or cross-polytope");
    }
    const powerlaw::Params p{energy_alpha, energy_beta, mu.dim};
    nlohmann::json j;
    j["energy"] = powerlaw::round_sig12(powerlaw::energy(p, mu));
    if (with_d2beta) j["d2beta"] = powerlaw::round_sig12(powerlaw::energy_d2beta(p, mu));
    emit(energy_out, j.dump(2) + "\n");
    return 0;
  }

  if (bounds_cmd->parsed()) {
    require_provided(cfg, {{bounds_n_opt, "n"}, {bounds_alpha_opt, "alpha"},
                           {bounds_beta_opt, "beta"}});
    auto reports = powerlaw::all_lower_bounds(bounds_alpha, bounds_beta, bounds_n, bounds_grid);
    const auto best = powerlaw::best_lower_bound(bounds_alpha, bounds_beta, bounds_n, bounds_grid);
    if (bounds_format == "csv") {
      std::ostringstream os;
      os << "alpha,beta,n,method,lower_bound,anchor0_beta,anchor0_E,anchor1_beta,anchor1_E\n";
      for (const auto& r : reports) os << powerlaw::bound_report_csv_row(r) << '\n';
      os << powerlaw::bound_report_csv_row(best) << '\n';
      emit(bounds_out, os.str());
    } else if (bounds_format == "json") {
      nlohmann::json j;
      j["bounds"] = nlohmann::json::array();
      for (const auto& r : reports) j["bounds"].push_back(powerlaw::bound_report_to_json(r));
      j["best"] = powerlaw::bound_report_to_json(best);
      emit(bounds_out, j.dump(2) + "\n");
    } else {
      throw std::invalid_argument("bounds: --format must be json or csv");
    }
    return 0;
  }

  if (thr_cmd->parsed()) {
    require_provided(cfg, {{thr_n_opt, "n"}});
    const bool have_beta = thr_beta_opt->count() > 0 || cfg.has("beta");
    const bool have_grid = thr_grid_opt->count() > 0 || cfg.has("grid");
    if (have_beta == have_grid)
      throw std::invalid_argument("threshold: provide exactly one of --beta or --grid");
    if (have_grid) {
      const auto rows = powerlaw::threshold_comparison(thr_n, parse_grid(thr_grid));
      std::ostringstream os;
      powerlaw::write_threshold_csv(os, rows);
      emit(thr_out, os.str());
    } else {
      const auto star = powerlaw::threshold_from_phi(thr_n, thr_beta);
      const auto other = powerlaw::threshold_from_f(thr_n, thr_beta);
      nlohmann::json j;
      j["n"] = thr_n;
      j["beta"] = powerlaw::round_sig12(thr_beta);
      j["alpha_star_phi"] = powerlaw::round_sig12(star.alpha_star);
      j["alpha_star_f"] = powerlaw::round_sig12(other.alpha_star);
      j["residual_phi"] = star.residual;
      j["residual_f"] = other.residual;
      j["degenerate_phi"] = star.degenerate;
      j["degenerate_f"] = other.degenerate;
      emit(thr_out, j.dump(2) + "\n");
    }
    return 0;
  }

  if (min_cmd->parsed()) {
    require_provided(cfg, {{min_n_opt, "n"},
                           {min_alpha_opt, "alpha"},
                           {min_beta_opt, "beta"},
                           {min_k_opt, "k"},
                           {min_seed_opt, "seed"}});
    mc.params = powerlaw::Params{min_alpha, min_beta, min_n};
    const auto result = powerlaw::minimize(mc);
    emit(min_out, powerlaw::minimize_result_to_json(result, mc.params).dump(2) + "\n");
    std::ostream& summary = min_out.empty() ? std::cerr : std::cout;
    summary << "minimize: energy=" << powerlaw::fmt_sig12(result.energy)
            << " grad_norm=" << powerlaw::fmt_sig12(result.grad_norm)
            << " iterations=" << result.iterations << " clusters=" << result.clusters.count
            << "\n";
    return 0;
  }

  if (sweep_cmd->parsed()) {
    require_provided(cfg, {{sweep_n_opt, "n"},
                           {sweep_alpha_opt, "alpha"},
                           {sweep_betas_opt, "betas"},
                           {sweep_seed_opt, "seed"}});
    if (sweep_betas.empty()) throw std::invalid_argument("sweep: --betas must be non-empty");
    powerlaw::MinimizeConfig base;
    base.params = powerlaw::Params{sweep_alpha, sweep_betas.front(), sweep_n};
    base.restarts = sweep_restarts;
    base.max_iters = sweep_iters;
    base.grad_tol = sweep_gradtol;
    base.seed = sweep_seed;
    const auto rows =
        powerlaw::cardinality_sweep(sweep_alpha, sweep_n, sweep_betas, base, sweep_kcap);
    std::ostringstream os;
    powerlaw::write_sweep_csv(os, rows);
    emit(sweep_out, os.str());
    std::ostream& summary = sweep_out.empty() ? std::cerr : std::cout;
    summary << "sweep: rows=" << rows.size() << " alpha=" << powerlaw::fmt_sig12(sweep_alpha)
            << " n=" << sweep_n << "\n";
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help and friends
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const powerlaw::unsupported_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
