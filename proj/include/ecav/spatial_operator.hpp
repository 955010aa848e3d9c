#pragma once

#include <optional>
#include <string_view>

#include "ecav/dg.hpp"
#include "ecav/flux_diff.hpp"
#include "ecav/viscosity.hpp"

namespace ecav {

enum class SchemeKind
{
  dg_weak,   ///< weak form with collocated flux evaluation, optional viscosity
  flux_diff, ///< nodal flux differencing
};

const char* to_string(SchemeKind kind);
SchemeKind scheme_kind_from_string(std::string_view name);

struct SchemeOptions
{
  SchemeKind scheme = SchemeKind::dg_weak;
  FluxKind flux = FluxKind::llf_davis;
  VolumeFluxKind volume_flux = VolumeFluxKind::ec_ranocha;
  ViscosityMode viscosity = ViscosityMode::elementwise;
  TraceMode trace = TraceMode::entropy_projection;
  double delta_tol = default_delta_tol;
};

/// Quantities computed alongside one rhs evaluation.
struct StageDiagnostics
{
  Eigen::VectorXd delta;    ///< volume entropy residual per element
  Eigen::VectorXd eps_quad; ///< viscosity coefficient per quadrature point
  Eigen::VectorXd eps_elem; ///< per-element coefficient (max over the element for subcell)
  /// sum_k (rhs, v_h)_k = d/dt of the total entropy.
  double entropy_rate = 0.0;
  /// entropy_rate plus the per-element surface terms <v_h f*_n - psi n>;
  /// non-positive for the viscosity modes.
  double eq22_rate = 0.0;
  /// Sum of absolute values of the terms entering eq22_rate.
  double eq22_scale = 0.0;
  /// Part of the surface terms located on domain-boundary faces; the total
  /// entropy plus the time integral of this quantity is non-increasing.
  double boundary_term = 0.0;
};

/// Full semi-discrete right-hand side for a scheme configuration.
class SpatialOperator
{
public:
  explicit SpatialOperator(SchemeOptions options, std::optional<GhostStates> ghosts = std::nullopt);

  [[nodiscard]] const SchemeOptions& options() const { return options_; }
  [[nodiscard]] const std::optional<GhostStates>& ghosts() const { return ghosts_; }

  /// Throws euler::AdmissibilityError on inadmissible states.
  SolutionField operator()(const SolutionField& u, StageDiagnostics* diag = nullptr) const;

private:
  SchemeOptions options_;
  std::optional<GhostStates> ghosts_;
};

} // namespace ecav
