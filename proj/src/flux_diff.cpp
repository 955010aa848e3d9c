#include "ecav/flux_diff.hpp"

#include <stdexcept>

namespace ecav {

using euler::State;

Eigen::MatrixXd flux_diff_terms(const SolutionField& u, const Eigen::MatrixXd& fluxes, VolumeFluxKind volume)
{
  const auto& ops = *u.disc.ops;
  if (!ops.collocated)
    throw std::invalid_argument("flux differencing requires the nodal Lobatto basis");
  const int K = u.disc.num_elements();
  const int np = u.disc.np();
  const double inv_J = 1.0 / u.disc.mesh->jacobian;
  const auto two_point = volume == VolumeFluxKind::ec_ranocha ? ec_volume_flux : central_volume_flux;

  Eigen::MatrixXd rhs(K * np, 3);
  Eigen::MatrixXd vol(np, 3);
  Eigen::MatrixXd f(np, 3);
  Eigen::Matrix<double, 2, 3> surface;
  for (int k = 0; k < K; ++k)
  {
    const auto U = u.element(k);
    for (int i = 0; i < np; ++i)
    {
      try
      {
        f.row(i) = euler::flux(U.row(i).transpose()).transpose();
      }
      catch (const euler::AdmissibilityError& e)
      {
        throw e.at(k, i);
      }
    }
    vol.setZero();
    // Diagonal terms use consistency; off-diagonal pairs are evaluated once.
    for (int i = 0; i < np; ++i)
    {
      vol.row(i) += 2.0 * ops.Q(i, i) * f.row(i);
      for (int j = i + 1; j < np; ++j)
      {
        const Eigen::RowVector3d fij = two_point(U.row(i).transpose(), U.row(j).transpose()).transpose();
        vol.row(i) += 2.0 * ops.Q(i, j) * fij;
        vol.row(j) += 2.0 * ops.Q(j, i) * fij;
      }
    }
    surface.row(0) = -fluxes.row(k);
    surface.row(1) = fluxes.row(k + 1);
    rhs.middleRows(k * np, np) = inv_J * ops.Minv * (-vol + ops.B * f - ops.Vf.transpose() * surface);
  }
  return rhs;
}

SolutionField flux_diff_rhs(const SolutionField& u, FluxKind interface_kind,
                            const std::optional<GhostStates>& ghosts, VolumeFluxKind volume)
{
  if (!u.disc.ops->collocated)
    throw std::invalid_argument("flux differencing requires the nodal Lobatto basis");
  const auto proj = compute_entropy_projection(u);
  const auto F = face_fluxes(*u.disc.mesh, proj.u_face, interface_kind, ghosts);
  return {u.disc, flux_diff_terms(u, F, volume)};
}

} // namespace ecav
