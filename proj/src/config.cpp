#include "ecav/config.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace ecav {

ConfigError::ConfigError(const std::string& message, int line, std::string field)
  : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
    line_(line), field_(std::move(field))
{
}

namespace {

std::string trim(const std::string& s)
{
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v, int line)
{
  double x = 0.0;
  const auto* end = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(v.data(), end, x);
  if (ec != std::errc() || ptr != end)
    throw ConfigError("expected a number for '" + key + "', got '" + v + "'", line, key);
  return x;
}

int parse_int(const std::string& key, const std::string& v, int line)
{
  int x = 0;
  const auto* end = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(v.data(), end, x);
  if (ec != std::errc() || ptr != end)
    throw ConfigError("expected an integer for '" + key + "', got '" + v + "'", line, key);
  return x;
}

bool parse_bool(const std::string& key, const std::string& v, int line)
{
  if (v == "true" || v == "1")
    return true;
  if (v == "false" || v == "0")
    return false;
  throw ConfigError("expected true/false for '" + key + "'", line, key);
}

euler::Primitive parse_primitive(const std::string& key, const std::string& v, int line)
{
  std::vector<double> parts;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ','))
    parts.push_back(parse_double(key, trim(item), line));
  if (parts.size() != 3)
    throw ConfigError("expected 'rho, u, p' for '" + key + "'", line, key);
  return {parts[0], parts[1], parts[2]};
}

template <class F>
auto parse_enum(const std::string& key, const std::string& v, int line, F&& from_string)
{
  try
  {
    return from_string(v);
  }
  catch (const std::invalid_argument& e)
  {
    throw ConfigError(e.what(), line, key);
  }
}

std::string fmt(double x)
{
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

} // namespace

Quadrature1D RunConfig::volume_rule() const
{
  if (quadrature == "default" && quad_points == 0)
    return default_volume_rule(N, basis);
  const bool lobatto = quadrature == "lobatto" || (quadrature == "default" && basis == BasisKind::nodal_lobatto);
  const int n = quad_points > 0 ? quad_points : (lobatto ? N + 1 : N + 2);
  return lobatto ? gauss_lobatto(n) : gauss_legendre(n);
}

SchemeOptions RunConfig::scheme_options() const
{
  SchemeOptions o;
  o.scheme = scheme;
  o.flux = flux;
  o.volume_flux = volume_flux;
  o.viscosity = viscosity;
  o.delta_tol = delta_tol;
  if (trace == "auto")
    o.trace = (scheme == SchemeKind::dg_weak && viscosity == ViscosityMode::none) ? TraceMode::direct
                                                                                  : TraceMode::entropy_projection;
  else
    o.trace = trace == "direct" ? TraceMode::direct : TraceMode::entropy_projection;
  return o;
}

double RunConfig::resolved_t_final() const
{
  return t_final >= 0.0 ? t_final : make_problem(problem, problem_params).default_t_final;
}

void apply_setting(RunConfig& c, const std::string& key, const std::string& v, int line)
{
  if (key.rfind("result.", 0) == 0)
    return;
  if (key == "problem.name")
    c.problem = parse_enum(key, v, line, problem_kind_from_string);
  else if (key == "problem.amplitude")
    c.problem_params.amplitude = parse_double(key, v, line);
  else if (key == "problem.left")
    c.problem_params.left = parse_primitive(key, v, line);
  else if (key == "problem.right")
    c.problem_params.right = parse_primitive(key, v, line);
  else if (key == "problem.x0")
    c.problem_params.x0 = parse_double(key, v, line);
  else if (key == "problem.a")
    c.problem_params.a = parse_double(key, v, line);
  else if (key == "problem.b")
    c.problem_params.b = parse_double(key, v, line);
  else if (key == "problem.periodic")
    c.problem_params.periodic = parse_bool(key, v, line);
  else if (key == "discretization.basis")
  {
    if (v == "nodal")
      c.basis = BasisKind::nodal_lobatto;
    else if (v == "modal")
      c.basis = BasisKind::modal_gauss;
    else
      throw ConfigError("basis must be 'nodal' or 'modal'", line, key);
  }
  else if (key == "discretization.N")
    c.N = parse_int(key, v, line);
  else if (key == "discretization.K")
    c.K = parse_int(key, v, line);
  else if (key == "discretization.quadrature")
  {
    if (v != "default" && v != "gauss" && v != "lobatto")
      throw ConfigError("quadrature must be 'default', 'gauss' or 'lobatto'", line, key);
    c.quadrature = v;
  }
  else if (key == "discretization.quad_points")
    c.quad_points = parse_int(key, v, line);
  else if (key == "discretization.init")
  {
    if (v == "projection")
      c.init = InitMode::projection;
    else if (v == "interpolation")
      c.init = InitMode::interpolation;
    else
      throw ConfigError("init must be 'projection' or 'interpolation'", line, key);
  }
  else if (key == "scheme.kind")
    c.scheme = parse_enum(key, v, line, scheme_kind_from_string);
  else if (key == "scheme.flux")
    c.flux = parse_enum(key, v, line, flux_kind_from_string);
  else if (key == "scheme.volume_flux")
  {
    if (v == "ec_ranocha")
      c.volume_flux = VolumeFluxKind::ec_ranocha;
    else if (v == "central")
      c.volume_flux = VolumeFluxKind::central;
    else
      throw ConfigError("volume_flux must be 'ec_ranocha' or 'central'", line, key);
  }
  else if (key == "scheme.viscosity")
    c.viscosity = parse_enum(key, v, line, viscosity_mode_from_string);
  else if (key == "scheme.trace")
  {
    if (v != "auto" && v != "entropy_projection" && v != "direct")
      throw ConfigError("trace must be 'auto', 'entropy_projection' or 'direct'", line, key);
    c.trace = v;
  }
  else if (key == "scheme.delta_tol")
    c.delta_tol = parse_double(key, v, line);
  else if (key == "time.final")
    c.t_final = parse_double(key, v, line);
  else if (key == "time.mode")
  {
    if (v == "adaptive")
      c.time_mode = TimeMode::adaptive;
    else if (v == "fixed_cfl")
      c.time_mode = TimeMode::fixed_cfl;
    else
      throw ConfigError("time.mode must be 'adaptive' or 'fixed_cfl'", line, key);
  }
  else if (key == "time.abs_tol")
    c.abs_tol = parse_double(key, v, line);
  else if (key == "time.rel_tol")
    c.rel_tol = parse_double(key, v, line);
  else if (key == "time.cfl")
    c.cfl = parse_double(key, v, line);
  else if (key == "time.dt_max")
    c.dt_max = parse_double(key, v, line);
  else if (key == "output.dir")
    c.out_dir = v;
  else if (key == "output.history_every")
    c.history_every = parse_int(key, v, line);
  else if (key == "output.snapshots")
    c.snapshots = parse_int(key, v, line);
  else
    throw ConfigError("unknown key '" + key + "'", line, key);
}

std::vector<std::pair<std::string, std::string>> parse_assignments(const std::string& text)
{
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw))
  {
    ++line;
    const auto hash = raw.find('#');
    const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty())
      continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected 'key = value'", line);
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty())
      throw ConfigError("missing key", line);
    out.emplace_back(key, value);
  }
  return out;
}

RunConfig parse_config(const std::string& text)
{
  RunConfig c;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw))
  {
    ++line;
    for (const auto& [key, value] : parse_assignments(raw))
      apply_setting(c, key, value, line);
  }
  validate(c);
  return c;
}

RunConfig load_config(const std::string& path)
{
  std::ifstream f(path);
  if (!f)
    throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

void validate(const RunConfig& c)
{
  if (c.N < 1 || c.N > 16)
    throw ConfigError("discretization.N must be in [1, 16]", 0, "discretization.N");
  if (c.K < 1)
    throw ConfigError("discretization.K must be >= 1", 0, "discretization.K");
  if (c.quad_points < 0)
    throw ConfigError("discretization.quad_points must be >= 0", 0, "discretization.quad_points");
  if (c.basis == BasisKind::nodal_lobatto && c.quadrature == "gauss")
    throw ConfigError("the nodal basis requires Lobatto quadrature", 0, "discretization.quadrature");
  if (c.basis == BasisKind::modal_gauss && c.quadrature == "lobatto")
    throw ConfigError("the modal basis requires Gauss quadrature", 0, "discretization.quadrature");
  try
  {
    build_operators(c.N, c.basis, c.volume_rule());
  }
  catch (const std::invalid_argument& e)
  {
    throw ConfigError(e.what(), 0, "discretization.quad_points");
  }
  if (c.scheme == SchemeKind::flux_diff && c.basis != BasisKind::nodal_lobatto)
    throw ConfigError("flux differencing is implemented for the nodal basis only", 0, "scheme.kind");
  if (!(c.delta_tol > 0.0))
    throw ConfigError("scheme.delta_tol must be positive", 0, "scheme.delta_tol");
  if (c.time_mode == TimeMode::fixed_cfl && !(c.cfl > 0.0))
    throw ConfigError("time.cfl must be positive", 0, "time.cfl");
  if (!(c.abs_tol > 0.0) || !(c.rel_tol >= 0.0))
    throw ConfigError("time tolerances must be positive", 0, "time.abs_tol");
  if (c.dt_max < 0.0)
    throw ConfigError("time.dt_max must be >= 0", 0, "time.dt_max");
  if (c.history_every < 1)
    throw ConfigError("output.history_every must be >= 1", 0, "output.history_every");
  if (c.snapshots < 0)
    throw ConfigError("output.snapshots must be >= 0", 0, "output.snapshots");
  if (c.problem == ProblemKind::custom && !(c.problem_params.a < c.problem_params.b))
    throw ConfigError("problem.a must be < problem.b", 0, "problem.a");
}

std::string to_text(const RunConfig& c)
{
  const auto prim = [](const euler::Primitive& w) { return fmt(w.rho) + ", " + fmt(w.u) + ", " + fmt(w.p); };
  std::ostringstream os;
  os << "problem.name = " << to_string(c.problem) << "\n";
  os << "problem.amplitude = " << fmt(c.problem_params.amplitude) << "\n";
  os << "problem.left = " << prim(c.problem_params.left) << "\n";
  os << "problem.right = " << prim(c.problem_params.right) << "\n";
  os << "problem.x0 = " << fmt(c.problem_params.x0) << "\n";
  os << "problem.a = " << fmt(c.problem_params.a) << "\n";
  os << "problem.b = " << fmt(c.problem_params.b) << "\n";
  os << "problem.periodic = " << (c.problem_params.periodic ? "true" : "false") << "\n";
  os << "discretization.basis = " << to_string(c.basis) << "\n";
  os << "discretization.N = " << c.N << "\n";
  os << "discretization.K = " << c.K << "\n";
  os << "discretization.quadrature = " << c.quadrature << "\n";
  os << "discretization.quad_points = " << c.quad_points << "\n";
  os << "discretization.init = " << (c.init == InitMode::projection ? "projection" : "interpolation") << "\n";
  os << "scheme.kind = " << to_string(c.scheme) << "\n";
  os << "scheme.flux = " << to_string(c.flux) << "\n";
  os << "scheme.volume_flux = " << (c.volume_flux == VolumeFluxKind::ec_ranocha ? "ec_ranocha" : "central") << "\n";
  os << "scheme.viscosity = " << to_string(c.viscosity) << "\n";
  os << "scheme.trace = " << c.trace << "\n";
  os << "scheme.delta_tol = " << fmt(c.delta_tol) << "\n";
  os << "time.final = " << fmt(c.t_final) << "\n";
  os << "time.mode = " << (c.time_mode == TimeMode::adaptive ? "adaptive" : "fixed_cfl") << "\n";
  os << "time.abs_tol = " << fmt(c.abs_tol) << "\n";
  os << "time.rel_tol = " << fmt(c.rel_tol) << "\n";
  os << "time.cfl = " << fmt(c.cfl) << "\n";
  os << "time.dt_max = " << fmt(c.dt_max) << "\n";
  os << "output.dir = " << c.out_dir << "\n";
  os << "output.history_every = " << c.history_every << "\n";
  os << "output.snapshots = " << c.snapshots << "\n";
  return os.str();
}

} // namespace ecav
