#include "ecav/spatial_operator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ecav {

const char* to_string(SchemeKind kind)
{
  return kind == SchemeKind::dg_weak ? "dg_weak" : "flux_diff";
}

SchemeKind scheme_kind_from_string(std::string_view name)
{
  if (name == "dg_weak")
    return SchemeKind::dg_weak;
  if (name == "flux_diff")
    return SchemeKind::flux_diff;
  throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

SpatialOperator::SpatialOperator(SchemeOptions options, std::optional<GhostStates> ghosts)
  : options_(options), ghosts_(std::move(ghosts))
{
}

SolutionField SpatialOperator::operator()(const SolutionField& u, StageDiagnostics* diag) const
{
  const auto& disc = u.disc;
  const auto& mesh = *disc.mesh;
  const int K = disc.num_elements();
  const int nq = disc.nq();

  const auto proj = compute_entropy_projection(u);
  const Eigen::MatrixXd traces = face_traces(u, proj, options_.trace);
  const Eigen::MatrixXd F = face_fluxes(mesh, traces, options_.flux, ghosts_);

  SolutionField rhs(disc);
  if (options_.scheme == SchemeKind::flux_diff)
    rhs.coeffs = flux_diff_terms(u, F, options_.volume_flux);
  else
    rhs.coeffs = weak_form_terms(u, proj.u_quad, F);

  const auto mode = options_.viscosity;
  const bool want_delta = mode != ViscosityMode::none || diag != nullptr;
  Eigen::VectorXd delta = want_delta ? volume_entropy_residual(u, proj) : Eigen::VectorXd();
  Eigen::VectorXd eps_quad = Eigen::VectorXd::Zero(K * nq);
  Eigen::VectorXd eps_elem = Eigen::VectorXd::Zero(K);

  if (mode == ViscosityMode::mv_correction || mode == ViscosityMode::deriv_correction)
  {
    const auto corr = mode == ViscosityMode::mv_correction
                          ? local_correction_mv(u, proj, delta, options_.delta_tol)
                          : local_correction_deriv(u, proj, delta, options_.delta_tol);
    if (!corr.eps.isZero(0.0))
      rhs.coeffs += corr.rhs;
    eps_elem = corr.eps;
    for (int k = 0; k < K; ++k)
      eps_quad.segment(k * nq, nq).setConstant(eps_elem(k));
  }
  else if (mode != ViscosityMode::none)
  {
    Eigen::VectorXd delta2;
    if (mode == ViscosityMode::two_inequalities)
      delta2 = second_inequality_residual(u, proj);
    const bool violated = (delta.array() < 0.0).any() || (delta2.size() > 0 && (delta2.array() < 0.0).any());
    if (violated)
    {
      const auto A0 = element_dudv(u);
      const Eigen::MatrixXd theta = br1_gradient(disc, proj.v_coeffs, proj.v_face);
      const auto dens = dissipation_density(disc, theta, A0);
      if (mode == ViscosityMode::subcell)
      {
        eps_quad = viscosity_subcell(disc, delta, dens.a, options_.delta_tol);
        for (int k = 0; k < K; ++k)
          eps_elem(k) = eps_quad.segment(k * nq, nq).maxCoeff();
      }
      else
      {
        eps_elem = viscosity_elementwise(delta, dens.d, options_.delta_tol);
        if (delta2.size() > 0)
          eps_elem = eps_elem.cwiseMax(viscosity_elementwise(delta2, dens.d, options_.delta_tol));
        for (int k = 0; k < K; ++k)
          eps_quad.segment(k * nq, nq).setConstant(eps_elem(k));
      }
      if (!eps_quad.isZero(0.0))
        rhs.coeffs += gvisc_br1(disc, eps_quad, theta, A0);
    }
  }

  if (diag == nullptr)
    return rhs;

  diag->delta = delta;
  diag->eps_quad = eps_quad;
  diag->eps_elem = eps_elem;
  const Eigen::VectorXd per_element = element_entropy_rhs_test(rhs, proj);
  diag->entropy_rate = per_element.sum();
  double surface = 0.0;
  double scale = per_element.cwiseAbs().sum();
  double boundary = 0.0;
  const bool periodic = mesh.boundary == BoundaryMode::periodic;
  for (int k = 0; k < K; ++k)
  {
    const double vf_r = proj.v_face.row(2 * k + 1).dot(F.row(k + 1));
    const double vf_l = proj.v_face.row(2 * k).dot(F.row(k));
    const double psi_r = euler::entropy_potential(traces.row(2 * k + 1).transpose());
    const double psi_l = euler::entropy_potential(traces.row(2 * k).transpose());
    surface += vf_r - psi_r - vf_l + psi_l;
    scale += std::abs(vf_r) + std::abs(psi_r) + std::abs(vf_l) + std::abs(psi_l);
    if (!periodic && k == 0)
      boundary += -vf_l + psi_l;
    if (!periodic && k == K - 1)
      boundary += vf_r - psi_r;
  }
  diag->eq22_rate = diag->entropy_rate + surface;
  diag->eq22_scale = scale;
  diag->boundary_term = boundary;
  return rhs;
}

} // namespace ecav
