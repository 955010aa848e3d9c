#pragma once

#include "ecav/dg.hpp"

namespace ecav {

enum class VolumeFluxKind
{
  ec_ranocha,
  central,
};

/// Nodal (Lobatto) flux-differencing DG:
///   J M du/dt = -2 sum_j Q_ij f_vol(u_i, u_j) + B f(u) - Vf^T [-f*_L; f*_R].
/// Interface fluxes use entropy-projected traces, which coincide with the
/// nodal endpoint values. Throws std::invalid_argument for the modal basis.
SolutionField flux_diff_rhs(const SolutionField& u, FluxKind interface_kind,
                            const std::optional<GhostStates>& ghosts = std::nullopt,
                            VolumeFluxKind volume = VolumeFluxKind::ec_ranocha);

/// Volume part only, given face fluxes; used by the spatial operator.
Eigen::MatrixXd flux_diff_terms(const SolutionField& u, const Eigen::MatrixXd& fluxes,
                                VolumeFluxKind volume);

} // namespace ecav
