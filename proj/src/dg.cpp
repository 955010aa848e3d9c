#include "ecav/dg.hpp"

#include <stdexcept>

namespace ecav {

using euler::State;

const char* to_string(TraceMode mode)
{
  return mode == TraceMode::entropy_projection ? "entropy_projection" : "direct";
}

EntropyProjection compute_entropy_projection(const SolutionField& u)
{
  const auto& ops = *u.disc.ops;
  const int K = u.disc.num_elements();
  const int np = u.disc.np();
  const int nq = u.disc.nq();

  EntropyProjection proj;
  proj.u_quad.resize(K * nq, 3);
  proj.v_coeffs.resize(K * np, 3);
  proj.v_quad.resize(K * nq, 3);
  proj.v_face.resize(2 * K, 3);
  proj.u_face.resize(2 * K, 3);
  proj.uh_face.resize(2 * K, 3);

  Eigen::MatrixXd vq(nq, 3);
  for (int k = 0; k < K; ++k)
  {
    const Eigen::MatrixXd uq = u.quad_values(k);
    proj.u_quad.middleRows(k * nq, nq) = uq;
    for (int q = 0; q < nq; ++q)
    {
      try
      {
        vq.row(q) = euler::entropy_vars(uq.row(q).transpose()).transpose();
      }
      catch (const euler::AdmissibilityError& e)
      {
        throw e.at(k, q);
      }
    }
    if (ops.collocated)
    {
      proj.v_coeffs.middleRows(k * np, np) = vq;
      proj.v_quad.middleRows(k * nq, nq) = vq;
      proj.v_face.row(2 * k) = vq.row(0);
      proj.v_face.row(2 * k + 1) = vq.row(nq - 1);
      proj.u_face.row(2 * k) = uq.row(0);
      proj.u_face.row(2 * k + 1) = uq.row(nq - 1);
      proj.uh_face.row(2 * k) = uq.row(0);
      proj.uh_face.row(2 * k + 1) = uq.row(nq - 1);
      continue;
    }
    const Eigen::MatrixXd vh = ops.Pq * vq;
    proj.v_coeffs.middleRows(k * np, np) = vh;
    proj.v_quad.middleRows(k * nq, nq) = ops.Vq * vh;
    const Eigen::MatrixXd vf = ops.Vf * vh;
    const Eigen::MatrixXd uf = ops.Vf * u.element(k);
    for (int f = 0; f < 2; ++f)
    {
      proj.v_face.row(2 * k + f) = vf.row(f);
      proj.uh_face.row(2 * k + f) = uf.row(f);
      try
      {
        proj.u_face.row(2 * k + f) = euler::cons_vars(vf.row(f).transpose()).transpose();
      }
      catch (const euler::AdmissibilityError& e)
      {
        throw e.at(k, f == 0 ? -1 : nq);
      }
    }
  }
  return proj;
}

Eigen::MatrixXd face_traces(const SolutionField&, const EntropyProjection& proj, TraceMode mode)
{
  return mode == TraceMode::entropy_projection ? proj.u_face : proj.uh_face;
}

FaceStates face_states(const Mesh1D& mesh, const Eigen::MatrixXd& traces, int face,
                       const std::optional<GhostStates>& ghosts)
{
  const int K = mesh.num_elements;
  const bool periodic = mesh.boundary == BoundaryMode::periodic;
  if (!periodic && !ghosts)
    throw std::invalid_argument("face_states: ghost states required for non-periodic mesh");
  FaceStates s;
  if (face == 0 || face == K)
  {
    if (periodic)
    {
      s.left = traces.row(2 * (K - 1) + 1).transpose();
      s.right = traces.row(0).transpose();
    }
    else if (face == 0)
    {
      s.left = ghosts->left;
      s.right = traces.row(0).transpose();
    }
    else
    {
      s.left = traces.row(2 * (K - 1) + 1).transpose();
      s.right = ghosts->right;
    }
    return s;
  }
  s.left = traces.row(2 * (face - 1) + 1).transpose();
  s.right = traces.row(2 * face).transpose();
  return s;
}

Eigen::MatrixXd face_fluxes(const Mesh1D& mesh, const Eigen::MatrixXd& traces, FluxKind kind,
                            const std::optional<GhostStates>& ghosts)
{
  const int K = mesh.num_elements;
  Eigen::MatrixXd F(K + 1, 3);
  const bool periodic = mesh.boundary == BoundaryMode::periodic;
  for (int f = 0; f <= K; ++f)
  {
    if (periodic && f == K)
    {
      F.row(K) = F.row(0);
      continue;
    }
    const auto s = face_states(mesh, traces, f, ghosts);
    try
    {
      F.row(f) = numerical_flux(kind, s.left, s.right).transpose();
    }
    catch (const euler::AdmissibilityError& e)
    {
      throw e.at(f < K ? f : K - 1, f < K ? -1 : mesh.num_elements);
    }
  }
  return F;
}

Eigen::MatrixXd weak_form_terms(const SolutionField& u, const Eigen::MatrixXd& u_quad,
                                const Eigen::MatrixXd& fluxes)
{
  const auto& ops = *u.disc.ops;
  const int K = u.disc.num_elements();
  const int np = u.disc.np();
  const int nq = u.disc.nq();
  const double inv_J = 1.0 / u.disc.mesh->jacobian;

  Eigen::MatrixXd rhs(K * np, 3);
  Eigen::MatrixXd fq(nq, 3);
  Eigen::Matrix<double, 2, 3> surface;
  for (int k = 0; k < K; ++k)
  {
    for (int q = 0; q < nq; ++q)
    {
      try
      {
        fq.row(q) = euler::flux(u_quad.row(k * nq + q).transpose()).transpose();
      }
      catch (const euler::AdmissibilityError& e)
      {
        throw e.at(k, q);
      }
    }
    surface.row(0) = -fluxes.row(k);
    surface.row(1) = fluxes.row(k + 1);
    rhs.middleRows(k * np, np) = inv_J * (ops.weak_volume * fq - ops.lift * surface);
  }
  return rhs;
}

SolutionField dg_rhs_weak(const SolutionField& u, FluxKind kind, const std::optional<GhostStates>& ghosts,
                          TraceMode mode)
{
  const auto proj = compute_entropy_projection(u);
  const auto F = face_fluxes(*u.disc.mesh, face_traces(u, proj, mode), kind, ghosts);
  return {u.disc, weak_form_terms(u, proj.u_quad, F)};
}

double total_entropy(const SolutionField& u)
{
  const int nq = u.disc.nq();
  const auto& W = u.disc.ops->W;
  double total = 0.0;
  for (int k = 0; k < u.disc.num_elements(); ++k)
  {
    const Eigen::MatrixXd uq = u.quad_values(k);
    for (int q = 0; q < nq; ++q)
    {
      try
      {
        total += W(q) * euler::entropy(uq.row(q).transpose());
      }
      catch (const euler::AdmissibilityError& e)
      {
        throw e.at(k, q);
      }
    }
  }
  return u.disc.mesh->jacobian * total;
}

Eigen::VectorXd element_entropy_rhs_test(const SolutionField& rhs, const EntropyProjection& proj)
{
  const auto& ops = *rhs.disc.ops;
  const int K = rhs.disc.num_elements();
  const int np = rhs.disc.np();
  Eigen::VectorXd out(K);
  for (int k = 0; k < K; ++k)
  {
    const auto r = rhs.element(k);
    const auto v = proj.v_coeffs.middleRows(k * np, np);
    out(k) = rhs.disc.mesh->jacobian * (r.transpose() * ops.M * v).trace();
  }
  return out;
}

double entropy_rhs_test(const SolutionField& u, const SolutionField& rhs)
{
  return element_entropy_rhs_test(rhs, compute_entropy_projection(u)).sum();
}

std::vector<State> element_averages(const SolutionField& u)
{
  const auto& W = u.disc.ops->W;
  std::vector<State> avg(u.disc.num_elements());
  for (int k = 0; k < u.disc.num_elements(); ++k)
    avg[k] = 0.5 * (u.quad_values(k).transpose() * W);
  return avg;
}

Eigen::Vector3d conserved_totals(const SolutionField& u)
{
  Eigen::Vector3d total = Eigen::Vector3d::Zero();
  for (const auto& a : element_averages(u))
    total += a;
  return total * u.disc.mesh->h;
}

} // namespace ecav
