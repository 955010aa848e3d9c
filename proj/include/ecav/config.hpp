#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecav/problems.hpp"
#include "ecav/spatial_operator.hpp"
#include "ecav/time_integration.hpp"

namespace ecav {

/// Parse or validation error; `line` is 0 when not tied to a line.
class ConfigError : public std::runtime_error
{
public:
  ConfigError(const std::string& message, int line = 0, std::string field = {});
  [[nodiscard]] int line() const { return line_; }
  [[nodiscard]] const std::string& field() const { return field_; }

private:
  int line_;
  std::string field_;
};

enum class TimeMode
{
  adaptive,
  fixed_cfl,
};

enum class InitMode
{
  projection,
  interpolation,
};

struct RunConfig
{
  ProblemKind problem = ProblemKind::density_wave;
  ProblemParams problem_params;

  BasisKind basis = BasisKind::nodal_lobatto;
  int N = 3;
  int K = 16;
  /// "default", "gauss" or "lobatto"; `quad_points` 0 keeps the default count.
  std::string quadrature = "default";
  int quad_points = 0;
  InitMode init = InitMode::projection;

  SchemeKind scheme = SchemeKind::dg_weak;
  FluxKind flux = FluxKind::llf_davis;
  VolumeFluxKind volume_flux = VolumeFluxKind::ec_ranocha;
  ViscosityMode viscosity = ViscosityMode::elementwise;
  /// "auto" resolves to direct traces for plain weak-form DG without
  /// viscosity and to the entropy projection otherwise.
  std::string trace = "auto";
  double delta_tol = default_delta_tol;

  double t_final = -1.0; ///< negative selects the problem default
  TimeMode time_mode = TimeMode::adaptive;
  double abs_tol = 1e-8;
  double rel_tol = 1e-6;
  double cfl = 0.1;
  double dt_max = 0.0; ///< 0 means unbounded

  std::string out_dir = "out";
  int history_every = 1;
  int snapshots = 0; ///< intermediate snapshot count (final snapshot always written)

  [[nodiscard]] Quadrature1D volume_rule() const;
  [[nodiscard]] SchemeOptions scheme_options() const;
  [[nodiscard]] double resolved_t_final() const;
};

/// Apply one `section.key = value` assignment. Keys under `result.` are ignored.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value, int line = 0);

/// Parse `section.key = value` lines; `#` starts a comment.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Raw key/value pairs in file order, used for sweep grids.
std::vector<std::pair<std::string, std::string>> parse_assignments(const std::string& text);

/// Check ranges and combinations; throws ConfigError.
void validate(const RunConfig& cfg);

/// Every setting as `key = value` lines; parse_config(to_text(c)) == c.
std::string to_text(const RunConfig& cfg);

} // namespace ecav
