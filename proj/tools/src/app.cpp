#include "ringflow/cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringflow/eigensolve.hpp"
#include "ringflow/error.hpp"
#include "ringflow/extrapolation.hpp"
#include "ringflow/line_limit.hpp"
#include "ringflow/ring_kernel.hpp"
#include "ringflow/state.hpp"
#include "ringflow/sweep.hpp"
#include "ringflow/two_mode.hpp"
#include "ringflow/verify/criteria.hpp"
#include "ringflow/cli/manifest.hpp"

#ifndef RINGFLOW_VERSION_STRING
#define RINGFLOW_VERSION_STRING "unknown"
#endif

namespace ringflow::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Flat `key = value` lines apply to whichever subcommand was selected.
class SubcommandConfig : public CLI::ConfigINI {
 public:
  explicit SubcommandConfig(const CLI::App* root) : root_(root) {}

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    auto items = CLI::ConfigINI::from_config(input);
    const auto selected = root_->get_subcommands();
    if (selected.empty()) return items;
    for (auto& item : items) {
      if (item.parents.empty()) item.parents = {selected.front()->get_name()};
    }
    return items;
  }

 private:
  const CLI::App* root_;
};

struct RingFlags {
  std::optional<double> alpha;
  std::optional<double> alpha_over_pi;
  double beta = 0.0;
};

struct Shared {
  RingFlags ring;
  std::string method = "auto";
  unsigned jobs = 1;
  std::string out_dir = ".";
};

void add_ring_flags(CLI::App* sub, RingFlags& ring) {
  auto* a = sub->add_option("--alpha", ring.alpha, "dimensionless alpha");
  auto* ap = sub->add_option("--alpha-over-pi", ring.alpha_over_pi, "alpha / pi");
  a->excludes(ap);
  sub->add_option("--beta", ring.beta, "magnetic flux (any real; canonicalized)")->capture_default_str();
}

void add_method_flag(CLI::App* sub, Shared& s) {
  sub->add_option("--method", s.method, "eigensolver: dense, iterative or auto")
      ->check(CLI::IsMember({"dense", "iterative", "auto"}))
      ->capture_default_str();
}

void add_jobs_flag(CLI::App* sub, Shared& s) {
  sub->add_option("--jobs", s.jobs, "worker threads")
      ->envname("RINGFLOW_JOBS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_out_dir_flag(CLI::App* sub, Shared& s) {
  sub->add_option("--out-dir", s.out_dir, "directory for output files")->capture_default_str();
}

RingParameters ring_parameters(const RingFlags& ring) {
  require(ring.alpha.has_value() || ring.alpha_over_pi.has_value(),
          "one of --alpha or --alpha-over-pi is required");
  return ring.alpha ? RingParameters::from_alpha(*ring.alpha, ring.beta)
                    : RingParameters::from_alpha_over_pi(*ring.alpha_over_pi, ring.beta);
}

json ring_json(const RingParameters& p) {
  return {{"alpha", p.alpha()},
          {"alpha_over_pi", p.alpha_over_pi()},
          {"beta", p.beta()},
          {"beta_shift", p.beta_shift()}};
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  require(count >= 1, "grid needs at least one point");
  require(count > 1 || lo == hi, "a one-point grid needs min == max");
  require(lo <= hi, "grid min must not exceed max");
  std::vector<double> v(count, lo);
  for (std::size_t i = 1; i < count; ++i) {
    v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  if (count > 1) v.back() = hi;
  return v;
}

// Collects the files of one command invocation and writes its manifest.
class Run {
 public:
  Run(std::string command, const std::string& out_dir)
      : dir_(out_dir), start_(std::chrono::steady_clock::now()) {
    manifest_.command = std::move(command);
    manifest_.tool_version = RINGFLOW_VERSION_STRING;
    manifest_.started = utc_timestamp();
    std::error_code ec;
    fs::create_directories(dir_, ec);
    require(fs::is_directory(dir_), "cannot create output directory " + dir_.string());
  }

  json& parameters() { return manifest_.parameters; }

  fs::path write(const std::string& name, const std::function<void(std::ostream&)>& body) {
    const auto path = dir_ / name;
    {
      std::ofstream out(path, std::ios::binary);
      require(static_cast<bool>(out), "cannot write " + path.string());
      body(out);
      out.flush();
      if (!out) throw ResourceError("write failed for " + path.string());
    }
    names_.push_back(name);
    return path;
  }

  fs::path write_json(const std::string& name, const json& record) {
    return write(name, [&](std::ostream& o) { o << record.dump(2) << '\n'; });
  }

  fs::path finish() {
    manifest_.finished = utc_timestamp();
    manifest_.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    for (const auto& name : names_) manifest_.outputs.push_back({name, sha256_file(dir_ / name)});
    return write_manifest(dir_, manifest_);
  }

 private:
  fs::path dir_;
  std::chrono::steady_clock::time_point start_;
  RunManifest manifest_;
  std::vector<std::string> names_;
};

std::string real(double v) { return format_real(v); }

json eigen_json(const EigenResult& r) {
  return {{"lambda_min", r.lambda_min},       {"n_trunc", r.n_trunc},
          {"residual_norm", r.residual_norm}, {"method", std::string(to_string(r.method))},
          {"iterations", r.iterations},       {"restarts", r.restarts}};
}

json fit_json(const RingParameters& p, const ExtrapolationFit& fit) {
  return {{"alpha", p.alpha()},
          {"alpha_over_pi", p.alpha_over_pi()},
          {"beta", p.beta()},
          {"schedule", fit.n_values},
          {"lambdas", fit.lambda_values},
          {"a0", fit.a0},
          {"a1", fit.a1},
          {"a2", fit.a2},
          {"residual", fit.residual},
          {"within_sanity_band", fit.within_sanity_band}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum backflow bounds on a ring", "ringflow"};
  app.set_version_flag("--version", RINGFLOW_VERSION_STRING);
  app.set_config("--config", "", "flat key = value file; flags override it");
  app.config_formatter(std::make_shared<SubcommandConfig>(&app));
  app.require_subcommand(1);
  app.fallthrough();
  app.allow_config_extras(CLI::config_extras_mode::error);

  Shared s;
  std::function<int()> action;

  // eigen
  std::size_t n_dim = 0;
  auto* eigen = app.add_subcommand("eigen", "smallest eigenvalue of the truncated kernel");
  add_ring_flags(eigen, s.ring);
  eigen->add_option("--n", n_dim, "matrix dimension (modes 0..n-1)")->required()->check(CLI::Range(2, 1 << 20));
  add_method_flag(eigen, s);
  add_out_dir_flag(eigen, s);
  eigen->callback([&] {
    action = [&] {
      Run run("eigen", s.out_dir);
      const auto params = ring_parameters(s.ring);
      const auto kernel = build_kernel(RingConfig::with_dimension(params, n_dim));
      const auto r = min_eigen(kernel, parse_eigen_method(s.method));
      json record = ring_json(params);
      record["n"] = n_dim;
      record.update(eigen_json(r));
      run.parameters() = {{"ring", ring_json(params)}, {"n", n_dim}, {"method", s.method}};
      run.write_json("eigen.json", record);
      run.finish();
      out << real(r.lambda_min) << '\n';
      return kExitOk;
    };
  });

  // extrapolate
  std::vector<std::size_t> schedule;
  bool reference = false;
  auto* extrap = app.add_subcommand("extrapolate", "N -> infinity estimate from a schedule of truncations");
  add_ring_flags(extrap, s.ring);
  extrap->add_option("--schedule", schedule, "matrix dimensions, comma separated")->delimiter(',');
  extrap->add_flag("--reference-schedule", reference, "use the 15-point high-accuracy schedule");
  add_method_flag(extrap, s);
  add_jobs_flag(extrap, s);
  add_out_dir_flag(extrap, s);
  extrap->callback([&] {
    action = [&] {
      Run run("extrapolate", s.out_dir);
      const auto params = ring_parameters(s.ring);
      require(!(reference && !schedule.empty()), "--schedule and --reference-schedule are exclusive");
      const auto sched = reference ? reference_schedule() : schedule.empty() ? default_sweep_schedule() : schedule;
      const auto r = extrapolated_infimum(params, sched, parse_eigen_method(s.method), s.jobs);
      json record = fit_json(params, r.fit);
      record["estimate"] = r.estimate;
      json solves = json::array();
      for (const auto& e : r.solves) solves.push_back(eigen_json(e));
      record["solves"] = solves;
      run.parameters() = {{"ring", ring_json(params)}, {"schedule", sched}, {"method", s.method}};
      run.write_json("extrapolate.json", record);
      run.finish();
      out << real(r.estimate) << '\n';
      if (!r.fit.within_sanity_band) err << "warning: fit outside sanity band\n";
      return kExitOk;
    };
  });

  // sweep
  double grid_min = 0.0, grid_max = 0.0;
  std::size_t steps = 0;
  auto* sweep = app.add_subcommand("sweep", "extrapolated infimum over an alpha/pi grid");
  sweep->add_option("--beta", s.ring.beta, "magnetic flux")->capture_default_str();
  sweep->add_option("--alpha-over-pi-min", grid_min)->required();
  sweep->add_option("--alpha-over-pi-max", grid_max)->required();
  sweep->add_option("--steps", steps, "grid points, endpoints included")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--schedule", schedule, "matrix dimensions, comma separated")->delimiter(',');
  add_method_flag(sweep, s);
  add_jobs_flag(sweep, s);
  add_out_dir_flag(sweep, s);
  sweep->callback([&] {
    action = [&] {
      Run run("sweep", s.out_dir);
      const auto grid = linspace(grid_min, grid_max, steps);
      const auto sched = schedule.empty() ? default_sweep_schedule() : schedule;
      require(sched.size() >= 4, "extrapolation schedule needs at least 4 entries");
      const auto records = sweep_alpha(s.ring.beta, grid, sched, {parse_eigen_method(s.method), s.jobs});
      run.parameters() = {{"beta", s.ring.beta}, {"alpha_over_pi_grid", grid},
                          {"schedule", sched},   {"method", s.method},
                          {"jobs", s.jobs}};
      run.write("sweep.csv", [&](std::ostream& o) { write_sweep_csv(o, records); });
      run.finish();
      int failures = 0;
      for (const auto& r : records) {
        if (!r.ok) {
          ++failures;
          err << "alpha/pi=" << real(r.alpha_over_pi) << ": " << r.error << '\n';
        }
      }
      out << records.size() - failures << " of " << records.size() << " points ok\n";
      return failures == 0 ? kExitOk : kExitComputation;
    };
  });

  // infimum
  std::vector<double> alpha_box{0.3, 0.45}, beta_box{-0.5, 0.0};
  std::size_t budget = 400;
  auto* infimum = app.add_subcommand("infimum", "coarse-to-fine search for the global infimum");
  infimum->add_option("--alpha-over-pi-box", alpha_box, "lo,hi")->delimiter(',')->expected(2)->capture_default_str();
  infimum->add_option("--beta-box", beta_box, "lo,hi within (-1, 0]")->delimiter(',')->expected(2)->capture_default_str();
  infimum->add_option("--budget", budget, "maximum extrapolated evaluations")->check(CLI::PositiveNumber)->capture_default_str();
  add_method_flag(infimum, s);
  add_jobs_flag(infimum, s);
  add_out_dir_flag(infimum, s);
  infimum->callback([&] {
    action = [&] {
      Run run("infimum", s.out_dir);
      InfimumOptions opts;
      opts.sweep = {parse_eigen_method(s.method), s.jobs};
      const auto r = find_infimum({alpha_box[0], alpha_box[1]}, {beta_box[0], beta_box[1]}, budget, opts);
      json stages = json::array();
      for (const auto& st : r.stages) {
        stages.push_back({{"alpha_over_pi", st.alpha_over_pi}, {"beta", st.beta}, {"p", st.p},
                          {"alpha_step", st.alpha_step}, {"evaluations", st.evaluations}});
      }
      run.parameters() = {{"alpha_over_pi_box", alpha_box}, {"beta_box", beta_box},
                          {"budget", budget},               {"method", s.method},
                          {"stage_schedules", opts.stage_schedules}};
      run.write_json("infimum.json", {{"alpha_over_pi", r.alpha_over_pi}, {"beta", r.beta},
                                      {"p", r.p},                         {"schedule", r.schedule},
                                      {"evaluations", r.evaluations},     {"budget_exhausted", r.budget_exhausted},
                                      {"stages", stages}});
      run.finish();
      out << "alpha/pi=" << real(r.alpha_over_pi) << " beta=" << real(r.beta) << " p=" << real(r.p) << '\n';
      if (r.budget_exhausted) err << "warning: budget exhausted, result is the incumbent\n";
      return kExitOk;
    };
  });

  // twomode
  int m1 = 0, m2 = 1;
  bool global = false;
  std::optional<double> beta_slice;
  double curve_min = 0.005, curve_max = 2.0;
  std::size_t curve_steps = 400;
  std::vector<double> betas = default_curve_betas();
  auto* twomode = app.add_subcommand("twomode", "closed-form two-mode bound: curve or global optimum");
  twomode->add_option("--m1", m1)->capture_default_str();
  twomode->add_option("--m2", m2)->capture_default_str();
  twomode->add_flag("--global", global, "minimize over alpha and beta");
  twomode->add_option("--beta-slice", beta_slice, "with --global: search only this beta");
  twomode->add_option("--alpha-over-pi-min", curve_min)->capture_default_str();
  twomode->add_option("--alpha-over-pi-max", curve_max)->capture_default_str();
  twomode->add_option("--steps", curve_steps)->check(CLI::PositiveNumber)->capture_default_str();
  twomode->add_option("--betas", betas, "curve beta values")->delimiter(',');
  add_out_dir_flag(twomode, s);
  twomode->callback([&] {
    action = [&] {
      Run run("twomode", s.out_dir);
      run.parameters() = {{"m1", m1}, {"m2", m2}, {"global", global}};
      if (global) {
        TwoModeSearchOptions opts;
        opts.alpha_over_pi_max = curve_max;
        opts.fixed_beta = beta_slice;
        const auto opt = global_two_mode_min(m1, m2, opts);
        const auto at = minimize_two_mode(m1, m2, opt.alpha, opt.beta);
        run.parameters()["alpha_over_pi_max"] = curve_max;
        if (beta_slice) run.parameters()["beta_slice"] = *beta_slice;
        run.write_json("twomode.json", {{"alpha", opt.alpha},       {"alpha_over_pi", opt.alpha_over_pi()},
                                        {"beta", opt.beta},         {"p_min", opt.p},
                                        {"phi_star", at.phi_star},  {"gamma_star", at.gamma_star},
                                        {"a_val", at.a_val},        {"b_val", at.b_val}});
        run.finish();
        out << "alpha/pi=" << real(opt.alpha_over_pi()) << " beta=" << real(opt.beta) << " p=" << real(opt.p)
            << '\n';
        return kExitOk;
      }
      require(curve_min > 0.0, "curve grid must start above alpha = 0");
      const auto grid = linspace(curve_min, curve_max, curve_steps);
      run.parameters()["alpha_over_pi_grid"] = {{"min", curve_min}, {"max", curve_max}, {"steps", curve_steps}};
      run.parameters()["betas"] = betas;
      run.write("twomode_curve.csv", [&](std::ostream& o) { write_two_mode_curve(o, m1, m2, grid, betas); });
      run.finish();
      out << grid.size() * betas.size() << " curve rows\n";
      return kExitOk;
    };
  });

  // state
  auto* state = app.add_subcommand("state", "backflow-maximizing state of a truncation");
  add_ring_flags(state, s.ring);
  state->add_option("--n", n_dim, "matrix dimension")->required()->check(CLI::Range(2, 1 << 20));
  add_method_flag(state, s);
  add_out_dir_flag(state, s);
  state->callback([&] {
    action = [&] {
      Run run("state", s.out_dir);
      const auto params = ring_parameters(s.ring);
      const auto ms = maximizing_state(RingConfig::with_dimension(params, n_dim), parse_eigen_method(s.method));
      const auto decay = coefficient_decay(ms.amplitudes);
      const double energy = mean_energy(ms.amplitudes);
      run.parameters() = {{"ring", ring_json(params)}, {"n", n_dim}, {"method", s.method}};
      run.write("state.csv", [&](std::ostream& o) { write_state_csv(o, ms); });
      json record = ring_json(params);
      record.update({{"n", n_dim},
                     {"n_trunc", ms.n_trunc},
                     {"lambda_min", ms.lambda_min},
                     {"residual_norm", ms.residual_norm},
                     {"mean_energy", energy},
                     {"decay", {{"worst_ratio", decay.worst_ratio},
                                {"worst_mode", decay.worst_mode},
                                {"bound_holds", decay.bound_holds()}}}});
      run.write_json("state.json", record);
      run.finish();
      out << "lambda_min=" << real(ms.lambda_min) << '\n'
          << "mean_energy=" << real(energy) << '\n'
          << "decay |c_m| m^2/|c_0| max=" << real(decay.worst_ratio) << " at m=" << decay.worst_mode
          << (decay.bound_holds() ? " (bound holds)" : " (bound violated)") << '\n';
      return kExitOk;
    };
  });

  // current
  std::string state_file;
  double theta = 0.0, tau_min = -1.5, tau_max = 1.5;
  std::size_t samples = 3001;
  auto* current = app.add_subcommand("current", "current time series T*J(theta, tau)");
  current->add_option("--state-file", state_file, "state CSV written by `state`");
  add_ring_flags(current, s.ring);
  current->add_option("--n", n_dim, "matrix dimension when no state file is given");
  current->add_option("--theta", theta)->capture_default_str();
  current->add_option("--tau-min", tau_min)->capture_default_str();
  current->add_option("--tau-max", tau_max)->capture_default_str();
  current->add_option("--samples", samples)->check(CLI::Range(2, 1 << 24))->capture_default_str();
  add_method_flag(current, s);
  add_out_dir_flag(current, s);
  current->callback([&] {
    action = [&] {
      Run run("current", s.out_dir);
      ModeAmplitudes amplitudes;
      if (!state_file.empty()) {
        require(!s.ring.alpha && !s.ring.alpha_over_pi, "--state-file excludes --alpha/--alpha-over-pi");
        std::ifstream in(state_file);
        require(static_cast<bool>(in), "cannot read state file " + state_file);
        amplitudes = read_state_csv(in).amplitudes;
        run.parameters()["state_file"] = state_file;
        run.parameters()["state_sha256"] = sha256_file(state_file);
      } else {
        require(n_dim >= 2, "--n is required without --state-file");
        const auto params = ring_parameters(s.ring);
        amplitudes = maximizing_state(RingConfig::with_dimension(params, n_dim), parse_eigen_method(s.method)).amplitudes;
        run.parameters()["ring"] = ring_json(params);
        run.parameters()["n"] = n_dim;
      }
      const auto series = current_series(amplitudes, theta, tau_min, tau_max, samples);
      run.parameters().update({{"theta", theta}, {"tau_min", tau_min}, {"tau_max", tau_max}, {"samples", samples}});
      run.write("series.csv", [&](std::ostream& o) { write_series_csv(o, series, amplitudes); });

      std::vector<double> wt, wj;
      for (std::size_t i = 0; i < series.tau_samples.size(); ++i) {
        if (series.tau_samples[i] >= -0.5 && series.tau_samples[i] <= 0.5) {
          wt.push_back(series.tau_samples[i]);
          wj.push_back(series.tj_values[i]);
        }
      }
      json record = {{"theta", theta}, {"samples", samples}, {"window", {-0.5, 0.5}}};
      if (wt.size() >= 2) {
        record["window_samples"] = wt.size();
        record["window_trapezoid"] = trapezoid(wt, wj);
        record["window_positive_samples"] = std::count_if(wj.begin(), wj.end(), [](double v) { return v > 0.0; });
      }
      run.write_json("current.json", record);
      run.finish();
      out << series.tau_samples.size() << " samples";
      if (record.contains("window_trapezoid")) {
        out << ", window integral " << real(record["window_trapezoid"].get<double>()) << ", "
            << record["window_positive_samples"].get<std::size_t>() << " positive in window";
      }
      out << '\n';
      return kExitOk;
    };
  });

  // linelimit
  double u_max = 10.0;
  std::size_t n_points = 2000, doublings = 3;
  bool ring_route = false, study = false;
  std::size_t ring_n = 1000;
  auto* line = app.add_subcommand("linelimit", "small-alpha limit and the line backflow constant");
  line->add_option("--u-max", u_max)->capture_default_str();
  line->add_option("--n-points", n_points)->capture_default_str();
  line->add_flag("--study", study, "simultaneous (u_max, n) doubling study");
  line->add_option("--doublings", doublings)->capture_default_str();
  line->add_flag("--ring-route", ring_route, "use the ring kernel at small alpha");
  add_ring_flags(line, s.ring);
  line->add_option("--n", ring_n, "ring matrix dimension")->capture_default_str();
  add_method_flag(line, s);
  add_out_dir_flag(line, s);
  line->callback([&] {
    action = [&] {
      Run run("linelimit", s.out_dir);
      const auto method = parse_eigen_method(s.method);
      json record = {{"reference", kLineBackflowConstant}};
      double lambda = 0.0;
      if (ring_route) {
        require(!study, "--study applies to the Nystrom route");
        const double alpha = s.ring.alpha ? *s.ring.alpha
                             : s.ring.alpha_over_pi ? kPi * *s.ring.alpha_over_pi
                                                    : 1e-3;
        const auto lim = ring_small_alpha_limit(alpha, s.ring.beta, ring_n, method);
        lambda = lim.lambda_min;
        run.parameters() = {{"route", "ring"}, {"alpha", alpha}, {"beta", s.ring.beta}, {"n", ring_n}};
        record.update({{"route", "ring"}, {"u_coverage", lim.u_coverage}, {"coverage_warning", lim.coverage_warning}});
        if (lim.coverage_warning) err << "warning: u coverage " << real(lim.u_coverage) << " < 8\n";
      } else if (study) {
        const auto rows = nystrom_convergence_study(u_max, n_points, doublings, method);
        lambda = rows.back().lambda_min;
        run.parameters() = {{"route", "nystrom-study"}, {"u_max", u_max}, {"n_points", n_points}, {"doublings", doublings}};
        run.write("convergence.csv", [&](std::ostream& o) { write_convergence_csv(o, rows); });
        record["route"] = "nystrom-study";
        if (rows.size() >= 2) record["richardson_in_u_max"] = richardson_in_u_max(rows);
      } else {
        lambda = nystrom_lambda_min(LineGrid(u_max, n_points), method);
        run.parameters() = {{"route", "nystrom"}, {"u_max", u_max}, {"n_points", n_points}};
        record["route"] = "nystrom";
      }
      record.update({{"lambda_min", lambda}, {"c_line_estimate", -lambda}, {"delta", -lambda - kLineBackflowConstant}});
      run.write_json("linelimit.json", record);
      run.finish();
      out << "c_line estimate " << real(-lambda) << " (reference " << real(kLineBackflowConstant) << ")\n";
      return kExitOk;
    };
  });

  // kernel
  auto* kernel = app.add_subcommand("kernel", "export the truncated kernel as CSV");
  add_ring_flags(kernel, s.ring);
  kernel->add_option("--n", n_dim, "matrix dimension")->required()->check(CLI::Range(2, 1 << 14));
  add_out_dir_flag(kernel, s);
  kernel->callback([&] {
    action = [&] {
      Run run("kernel", s.out_dir);
      const auto params = ring_parameters(s.ring);
      const auto k = build_kernel(RingConfig::with_dimension(params, n_dim));
      run.parameters() = {{"ring", ring_json(params)}, {"n", n_dim}};
      run.write("kernel.csv", [&](std::ostream& o) { write_kernel_csv(o, k); });
      run.finish();
      out << n_dim << "x" << n_dim << " kernel written\n";
      return kExitOk;
    };
  });

  // verify
  std::vector<int> criteria;
  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  verify->add_option("--criteria", criteria, "criterion ids, comma separated (default all)")->delimiter(',');
  add_out_dir_flag(verify, s);
  verify->callback([&] {
    action = [&] {
      Run run("verify", s.out_dir);
      json results = json::array();
      bool all = true;
      for (const auto& c : verify::acceptance_criteria()) {
        if (!criteria.empty() && std::find(criteria.begin(), criteria.end(), c.id) == criteria.end()) continue;
        const auto report = verify::run_criterion(c);
        out << verify::format_report(report) << std::flush;
        all = all && report.passed;
        results.push_back({{"id", report.id}, {"title", report.title}, {"passed", report.passed},
                           {"details", report.details}});
      }
      run.parameters() = {{"criteria", criteria}};
      run.write_json("verify.json", {{"passed", all}, {"criteria", results}});
      run.finish();
      return all ? kExitOk : kExitComputation;
    };
  });

  // manifest-check
  std::string manifest_path;
  auto* check = app.add_subcommand("manifest-check", "verify the digests listed in a run manifest");
  check->add_option("manifest", manifest_path, "path to <command>.manifest.json")->required();
  check->callback([&] {
    action = [&] {
      const auto problems = verify_manifest(manifest_path);
      for (const auto& p : problems) err << p << '\n';
      out << (problems.empty() ? "ok" : "FAILED") << '\n';
      return problems.empty() ? kExitOk : kExitComputation;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitValidation;
  }

  try {
    return action ? action() : kExitValidation;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
}

}  // namespace ringflow::cli
