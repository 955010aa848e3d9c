#include "ecav/driver.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

namespace ecav {

namespace fs = std::filesystem;

const char* to_string(RunStatus status)
{
  switch (status)
  {
    case RunStatus::completed: return "completed";
    case RunStatus::integration_failure: return "integration_failure";
    case RunStatus::admissibility_failure: return "admissibility_failure";
  }
  return "?";
}

int exit_code(RunStatus status)
{
  switch (status)
  {
    case RunStatus::completed: return exit_ok;
    case RunStatus::integration_failure: return exit_integration_failure;
    case RunStatus::admissibility_failure: return exit_admissibility_failure;
  }
  return exit_integration_failure;
}

Setup make_setup(const RunConfig& cfg)
{
  validate(cfg);
  Problem problem = make_problem(cfg.problem, cfg.problem_params);
  const auto mesh = make_mesh(problem.a, problem.b, cfg.K, problem.boundary);
  const auto disc = make_discretization(mesh, build_operators(cfg.N, cfg.basis, cfg.volume_rule()));
  SolutionField u0 = cfg.init == InitMode::projection ? project_initial(disc, problem.initial)
                                                       : interpolate_initial(disc, problem.initial);
  SpatialOperator op(cfg.scheme_options(), problem.ghosts);
  const double T = cfg.resolved_t_final();
  return {std::move(problem), disc, std::move(op), std::move(u0), T};
}

namespace {

struct StageRecord
{
  double eq22_rate;
  double eq22_scale;
  double boundary;
  double entropy_rate;
  double max_eps;
};

StageRecord record_of(const StageDiagnostics& d)
{
  return {d.eq22_rate, d.eq22_scale, d.boundary_term, d.entropy_rate,
          d.eps_quad.size() ? d.eps_quad.maxCoeff() : 0.0};
}

double relative(const StageRecord& r)
{
  return r.eq22_scale > 0.0 ? r.eq22_rate / r.eq22_scale : (r.eq22_rate > 0.0 ? 1.0 : 0.0);
}

struct RowAccumulator
{
  double max_rate = -std::numeric_limits<double>::infinity();
  double max_scale = 0.0;
  double max_rel = -std::numeric_limits<double>::infinity();
  double max_entropy_rate = -std::numeric_limits<double>::infinity();
  double max_eps = 0.0;

  void add(const StageRecord& r)
  {
    max_rate = std::max(max_rate, r.eq22_rate);
    max_scale = std::max(max_scale, r.eq22_scale);
    max_rel = std::max(max_rel, relative(r));
    max_entropy_rate = std::max(max_entropy_rate, r.entropy_rate);
    max_eps = std::max(max_eps, r.max_eps);
  }
};

double max_wavespeed_of(const SolutionField& u)
{
  double lam = 0.0;
  const Eigen::MatrixXd q = u.all_quad_values();
  for (Eigen::Index i = 0; i < q.rows(); ++i)
  {
    const euler::State s = q.row(i).transpose();
    lam = std::max(lam, euler::max_wavespeed(s, s));
  }
  return lam;
}

} // namespace

RunResult simulate(const RunConfig& cfg, const SnapshotCallback& on_snapshot)
{
  return simulate(cfg, make_setup(cfg), on_snapshot);
}

RunResult simulate(const RunConfig& cfg, const Setup& setup, const SnapshotCallback& on_snapshot)
{
  const auto wall_start = std::chrono::steady_clock::now();
  const auto& disc = setup.disc;
  const auto& op = setup.op;
  const double T = setup.t_final;

  RunResult res;
  res.solution = setup.initial;
  Eigen::MatrixXd u = setup.initial.coeffs;
  double t = 0.0;

  std::vector<StageRecord> stage_log;
  const RhsFunction rhs = [&](const Eigen::MatrixXd& U, double) {
    StageDiagnostics d;
    const SolutionField r = op(SolutionField(disc, U), &d);
    ++res.rhs_evaluations;
    stage_log.push_back(record_of(d));
    res.max_stage_eq22_relative = std::max(res.max_stage_eq22_relative, relative(stage_log.back()));
    return r.coeffs;
  };

  const auto exact = setup.problem.exact;
  const auto error_at = [&](const SolutionField& f, double time) {
    return exact ? l2_error(f, exact, time) : std::numeric_limits<double>::quiet_NaN();
  };

  double boundary_integral = 0.0;
  RowAccumulator acc;
  int steps_since_row = 0;
  int next_snapshot = 1;
  try
  {
    {
      StageDiagnostics d0;
      op(setup.initial, &d0);
      const auto r0 = record_of(d0);
      res.max_stage_eq22_relative = std::max(res.max_stage_eq22_relative, relative(r0));
      const double S0 = total_entropy(setup.initial);
      res.history.rows.push_back({0.0, S0, S0, r0.eq22_rate, r0.eq22_scale, relative(r0), r0.entropy_rate,
                                  error_at(setup.initial, 0.0), r0.max_eps});
    }

    AdaptiveOptions aopt;
    aopt.abs_tol = cfg.abs_tol;
    aopt.rel_tol = cfg.rel_tol;
    if (cfg.dt_max > 0.0)
      aopt.dt_max = cfg.dt_max;
    TimeController ctrl(aopt, T);

    while (t < T)
    {
      stage_log.clear();
      const double t_prev = t;
      if (cfg.time_mode == TimeMode::adaptive)
      {
        const auto step = ctrl.step(rhs, u, t);
        res.accepted_steps = ctrl.accepted_steps();
        res.rejected_steps = ctrl.rejected_steps();
        if (!step.accepted)
          continue;
      }
      else
      {
        const SolutionField cur(disc, u);
        const double lam = max_wavespeed_of(cur);
        const double dt_nominal = cfg.cfl * disc.mesh->h / lam;
        if (!(dt_nominal > 0.0) || !std::isfinite(dt_nominal))
          throw IntegrationFailure("invalid fixed time step", t);
        const double dt = std::min(dt_nominal, T - t);
        u = ssprk43_step(rhs, u, t, dt);
        t = dt == T - t ? T : t + dt;
        ++res.accepted_steps;
      }
      const double dt = t - t_prev;
      const size_t first = stage_log.size() - Ssprk43::stages;
      for (int s = 0; s < Ssprk43::stages; ++s)
      {
        boundary_integral += dt * Ssprk43::b[s] * stage_log[first + s].boundary;
        acc.add(stage_log[first + s]);
      }
      res.solution.coeffs = u;
      res.t_reached = t;
      ++steps_since_row;
      if (steps_since_row >= cfg.history_every || t >= T)
      {
        const double S = total_entropy(res.solution);
        res.history.rows.push_back({t, S, S + boundary_integral, acc.max_rate, acc.max_scale, acc.max_rel,
                                    acc.max_entropy_rate, error_at(res.solution, t), acc.max_eps});
        acc = RowAccumulator{};
        steps_since_row = 0;
      }
      while (on_snapshot && next_snapshot <= cfg.snapshots &&
             t >= T * next_snapshot / (cfg.snapshots + 1.0))
      {
        on_snapshot(t, res.solution);
        ++next_snapshot;
      }
    }
  }
  catch (const euler::AdmissibilityError& e)
  {
    res.status = RunStatus::admissibility_failure;
    res.failure = e.what();
    res.failure_element = e.element();
    res.failure_node = e.node();
  }
  catch (const IntegrationFailure& e)
  {
    res.status = RunStatus::integration_failure;
    res.failure = e.what();
  }

  res.t_reached = t;
  res.solution.coeffs = u;
  try
  {
    op(res.solution, &res.final_diagnostics);
  }
  catch (const euler::AdmissibilityError&)
  {
  }

  const Eigen::MatrixXd q = res.solution.all_quad_values();
  res.min_density = std::numeric_limits<double>::infinity();
  res.min_pressure = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < q.rows(); ++i)
  {
    const euler::State s = q.row(i).transpose();
    res.min_density = std::min(res.min_density, s(0));
    res.min_pressure = std::min(res.min_pressure, (euler::gamma - 1.0) * (s(2) - 0.5 * s(1) * s(1) / s(0)));
  }
  res.positive = res.min_density > 0.0 && res.min_pressure > 0.0 && std::isfinite(res.min_pressure);
  res.final_l2_error = error_at(res.solution, t);
  res.final_l1_density_error =
      exact ? l1_density_error(res.solution, exact, t) : std::numeric_limits<double>::quiet_NaN();
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
  return res;
}

namespace {

std::string sci(double x)
{
  std::ostringstream os;
  os << std::scientific << std::setprecision(16) << x;
  return os.str();
}

std::ofstream open_csv(const std::string& path)
{
  std::ofstream f(path);
  if (!f)
    throw std::runtime_error("cannot write '" + path + "'");
  return f;
}

} // namespace

void write_snapshot_csv(const std::string& path, const SolutionField& u, const Eigen::VectorXd& eps_quad,
                        const ExactSolution& exact, double t)
{
  auto f = open_csv(path);
  f << "x,rho,rhou,E,p,epsilon";
  if (exact)
    f << ",rho_exact";
  f << "\n";
  const Eigen::VectorXd x = u.disc.quadrature_coordinates();
  const Eigen::MatrixXd q = u.all_quad_values();
  for (Eigen::Index i = 0; i < q.rows(); ++i)
  {
    const double p = (euler::gamma - 1.0) * (q(i, 2) - 0.5 * q(i, 1) * q(i, 1) / q(i, 0));
    const double eps = i < eps_quad.size() ? eps_quad(i) : 0.0;
    f << sci(x(i)) << "," << sci(q(i, 0)) << "," << sci(q(i, 1)) << "," << sci(q(i, 2)) << "," << sci(p)
      << "," << sci(eps);
    if (exact)
      f << "," << sci(exact(x(i), t)(0));
    f << "\n";
  }
}

void write_history_csv(const std::string& path, const EntropyHistory& history)
{
  auto f = open_csv(path);
  f << "t,entropy,entropy_plus_boundary,eq22_rate,eq22_scale,eq22_relative,entropy_rate,l2_error,max_epsilon\n";
  for (const auto& r : history.rows)
    f << sci(r.t) << "," << sci(r.entropy) << "," << sci(r.entropy_plus_boundary) << "," << sci(r.max_eq22_rate)
      << "," << sci(r.eq22_scale) << "," << sci(r.max_eq22_relative) << "," << sci(r.max_entropy_rate) << ","
      << sci(r.l2_error) << "," << sci(r.max_eps) << "\n";
}

void write_convergence_csv(const std::string& path, const ConvergenceTable& table)
{
  auto f = open_csv(path);
  f << "N,K,h,error,rate,status\n";
  for (const auto& r : table.rows)
    f << r.N << "," << r.K << "," << sci(r.h) << "," << sci(r.error) << "," << sci(r.rate) << "," << r.status
      << "\n";
}

void write_residual_csv(const std::string& path, const std::vector<ResidualStudy>& studies)
{
  auto f = open_csv(path);
  f << "N,K,h,max_delta,delta_rate,max_eps,eps_rate,max_delta_uh\n";
  const auto rate = [](double a, double b, double ha, double hb) {
    return (a > 0.0 && b > 0.0) ? std::log(a / b) / std::log(ha / hb) : std::numeric_limits<double>::quiet_NaN();
  };
  for (const auto& s : studies)
  {
    for (size_t i = 0; i < s.rows.size(); ++i)
    {
      const auto& r = s.rows[i];
      double dr = std::numeric_limits<double>::quiet_NaN();
      double er = dr;
      if (i > 0)
      {
        const auto& p = s.rows[i - 1];
        dr = rate(p.max_delta, r.max_delta, p.h, r.h);
        er = rate(p.max_eps, r.max_eps, p.h, r.h);
      }
      f << s.N << "," << r.K << "," << sci(r.h) << "," << sci(r.max_delta) << "," << sci(dr) << ","
        << sci(r.max_eps) << "," << sci(er) << "," << sci(r.max_delta_uh) << "\n";
    }
  }
}

void write_spectrum_csv(const std::string& path, const SpectrumReport& report)
{
  auto f = open_csv(path);
  f << "real,imag\n";
  for (const auto& l : report.eigenvalues)
    f << sci(l.real()) << "," << sci(l.imag()) << "\n";
}

std::string manifest_text(const RunConfig& cfg, const RunResult& r)
{
  std::ostringstream os;
  os << to_text(cfg);
  os << "result.status = " << to_string(r.status) << "\n";
  if (!r.failure.empty())
    os << "result.failure = " << r.failure << "\n";
  os << "result.t_final = " << sci(cfg.resolved_t_final()) << "\n";
  os << "result.t_reached = " << sci(r.t_reached) << "\n";
  os << "result.accepted_steps = " << r.accepted_steps << "\n";
  os << "result.rejected_steps = " << r.rejected_steps << "\n";
  os << "result.rhs_evaluations = " << r.rhs_evaluations << "\n";
  os << "result.wall_seconds = " << sci(r.wall_seconds) << "\n";
  os << "result.max_stage_eq22_relative = " << sci(r.max_stage_eq22_relative) << "\n";
  os << "result.l2_error = " << sci(r.final_l2_error) << "\n";
  os << "result.l1_density_error = " << sci(r.final_l1_density_error) << "\n";
  os << "result.min_density = " << sci(r.min_density) << "\n";
  os << "result.min_pressure = " << sci(r.min_pressure) << "\n";
  return os.str();
}

namespace {

std::string read_file(const std::string& path)
{
  std::ifstream f(path);
  if (!f)
    throw ConfigError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text)
{
  std::ofstream f(path);
  if (!f)
    throw std::runtime_error("cannot write '" + path + "'");
  f << text;
}

void report_run(const RunResult& r)
{
  std::cerr << "status: " << to_string(r.status) << " at t = " << r.t_reached << " (" << r.accepted_steps
            << " steps, " << r.rejected_steps << " rejected)\n";
  if (!r.failure.empty())
    std::cerr << "failure: " << r.failure << "\n";
}

} // namespace

int run_command(const std::string& config_path, const std::optional<std::string>& out_dir)
{
  RunConfig cfg;
  std::optional<Setup> setup;
  try
  {
    cfg = load_config(config_path);
    if (out_dir)
      cfg.out_dir = *out_dir;
    setup = make_setup(cfg);
  }
  catch (const ConfigError& e)
  {
    std::cerr << "config error: " << e.what() << "\n";
    return exit_config_error;
  }
  catch (const euler::AdmissibilityError& e)
  {
    std::cerr << "inadmissible initial condition: " << e.what() << "\n";
    return exit_admissibility_failure;
  }

  fs::create_directories(cfg.out_dir);
  const auto dir = fs::path(cfg.out_dir);
  int snap = 0;
  const auto result = simulate(cfg, *setup, [&](double t, const SolutionField& u) {
    std::ostringstream name;
    name << "snapshot_" << std::setw(3) << std::setfill('0') << ++snap << ".csv";
    write_snapshot_csv((dir / name.str()).string(), u, Eigen::VectorXd(), setup->problem.exact, t);
  });
  write_snapshot_csv((dir / "snapshot.csv").string(), result.solution, result.final_diagnostics.eps_quad,
                     setup->problem.exact, result.t_reached);
  write_history_csv((dir / "history.csv").string(), result.history);
  write_text((dir / "manifest.txt").string(), manifest_text(cfg, result));
  report_run(result);
  return exit_code(result.status);
}

namespace {

struct Grid
{
  std::string kind = "error";
  std::string metric = "l2";
  std::vector<std::pair<std::string, std::vector<std::string>>> axes;
};

Grid parse_grid(const std::string& text)
{
  Grid g;
  for (const auto& [key, value] : parse_assignments(text))
  {
    if (key == "sweep.kind")
    {
      if (value != "error" && value != "residual")
        throw ConfigError("sweep.kind must be 'error' or 'residual'", 0, key);
      g.kind = value;
      continue;
    }
    if (key == "sweep.metric")
    {
      if (value != "l2" && value != "l1_density")
        throw ConfigError("sweep.metric must be 'l2' or 'l1_density'", 0, key);
      g.metric = value;
      continue;
    }
    std::vector<std::string> values;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
    {
      const auto b = item.find_first_not_of(" \t");
      if (b != std::string::npos)
        values.push_back(item.substr(b, item.find_last_not_of(" \t") - b + 1));
    }
    if (values.empty())
      throw ConfigError("grid axis '" + key + "' has no values", 0, key);
    g.axes.emplace_back(key, values);
  }
  if (g.axes.empty())
    throw ConfigError("empty sweep grid");
  return g;
}

std::vector<std::string> axis_values(const Grid& g, const std::string& key)
{
  for (const auto& [k, v] : g.axes)
    if (k == key)
      return v;
  return {};
}

} // namespace

int sweep_command(const std::string& config_path, const std::string& grid_path,
                  const std::optional<std::string>& out_dir)
{
  RunConfig base;
  Grid grid;
  try
  {
    base = load_config(config_path);
    if (out_dir)
      base.out_dir = *out_dir;
    grid = parse_grid(read_file(grid_path));
    // Validate every grid value before running anything.
    for (const auto& [key, values] : grid.axes)
      for (const auto& v : values)
      {
        RunConfig probe = base;
        apply_setting(probe, key, v);
      }
  }
  catch (const ConfigError& e)
  {
    std::cerr << "config error: " << e.what() << "\n";
    return exit_config_error;
  }
  fs::create_directories(base.out_dir);
  const auto dir = fs::path(base.out_dir);

  if (grid.kind == "residual")
  {
    auto Ns = axis_values(grid, "discretization.N");
    auto Ks = axis_values(grid, "discretization.K");
    if (Ns.empty())
      Ns = {std::to_string(base.N)};
    if (Ks.empty())
    {
      std::cerr << "config error: residual sweep needs discretization.K values\n";
      return exit_config_error;
    }
    std::vector<ResidualStudy> studies;
    try
    {
      for (const auto& n : Ns)
      {
        RunConfig c = base;
        apply_setting(c, "discretization.N", n);
        for (const auto& [key, values] : grid.axes)
          if (key != "discretization.N" && key != "discretization.K")
            apply_setting(c, key, values.front());
        validate(c);
        std::vector<int> kv;
        for (const auto& k : Ks)
          kv.push_back(std::stoi(k));
        studies.push_back(residual_convergence_study(c.N, kv, make_problem(c.problem, c.problem_params), c.basis,
                                                     c.volume_rule()));
      }
    }
    catch (const ConfigError& e)
    {
      std::cerr << "config error: " << e.what() << "\n";
      return exit_config_error;
    }
    write_residual_csv((dir / "residual.csv").string(), studies);
    for (const auto& s : studies)
      std::cerr << "N = " << s.N << ": delta slope " << s.delta_slope() << ", eps slope " << s.eps_slope() << "\n";
    return exit_ok;
  }

  // Cartesian product of the axes.
  ConvergenceTable table;
  std::vector<size_t> index(grid.axes.size(), 0);
  while (true)
  {
    RunConfig c = base;
    for (size_t a = 0; a < grid.axes.size(); ++a)
      apply_setting(c, grid.axes[a].first, grid.axes[a].second[index[a]]);
    ConvergenceRow row{c.N, c.K, 0.0, std::numeric_limits<double>::quiet_NaN(), 0.0, "ok"};
    try
    {
      const auto setup = make_setup(c);
      row.h = setup.disc.mesh->h;
      const auto r = simulate(c, setup);
      if (r.status != RunStatus::completed)
        row.status = to_string(r.status);
      else if (!setup.problem.exact)
        row.status = "no_exact_solution";
      else
        row.error = grid.metric == "l2" ? r.final_l2_error : r.final_l1_density_error;
    }
    catch (const ConfigError& e)
    {
      row.status = "config_error";
    }
    catch (const euler::AdmissibilityError& e)
    {
      row.status = "admissibility_failure";
    }
    table.rows.push_back(row);

    size_t a = 0;
    for (; a < index.size(); ++a)
    {
      if (++index[a] < grid.axes[a].second.size())
        break;
      index[a] = 0;
    }
    if (a == index.size())
      break;
  }
  table.finalize();
  write_convergence_csv((dir / "convergence.csv").string(), table);
  return exit_ok;
}

int spectrum_command(const std::string& config_path, const std::optional<std::string>& out_dir)
{
  RunConfig cfg;
  std::optional<Setup> setup;
  try
  {
    cfg = load_config(config_path);
    if (out_dir)
      cfg.out_dir = *out_dir;
    setup = make_setup(cfg);
  }
  catch (const ConfigError& e)
  {
    std::cerr << "config error: " << e.what() << "\n";
    return exit_config_error;
  }
  fs::create_directories(cfg.out_dir);
  const auto dir = fs::path(cfg.out_dir);
  const auto result = simulate(cfg, *setup);
  if (result.status != RunStatus::completed)
  {
    report_run(result);
    write_text((dir / "manifest.txt").string(), manifest_text(cfg, result));
    return exit_code(result.status);
  }
  SpectrumReport rep;
  try
  {
    rep = linearized_spectrum(
        [&](const Eigen::MatrixXd& U) { return setup->op(SolutionField(setup->disc, U)).coeffs; },
        result.solution.coeffs);
  }
  catch (const euler::AdmissibilityError& e)
  {
    std::cerr << "linearization failed: " << e.what() << "\n";
    return exit_admissibility_failure;
  }
  write_spectrum_csv((dir / "spectrum.csv").string(), rep);
  write_text((dir / "manifest.txt").string(),
             manifest_text(cfg, result) + "result.max_real = " + sci(rep.max_real) + "\n");
  std::cerr << "max real part: " << rep.max_real << "\n";
  return exit_ok;
}

} // namespace ecav
