#include "ecav/viscosity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ecav {

using euler::Matrix3;

namespace {

// v_h jump (exterior minus interior) seen from element k at side f (0 left, 1 right).
Eigen::RowVector3d jump_at(const Mesh1D& mesh, const Eigen::MatrixXd& v_face, int k, int f)
{
  const int nb = f == 0 ? mesh.left_neighbor[k] : mesh.right_neighbor[k];
  if (nb < 0)
    return Eigen::RowVector3d::Zero();
  const int ext = f == 0 ? 2 * nb + 1 : 2 * nb;
  return v_face.row(ext) - v_face.row(2 * k + f);
}

} // namespace

const char* to_string(ViscosityMode mode)
{
  switch (mode)
  {
    case ViscosityMode::none: return "none";
    case ViscosityMode::elementwise: return "elementwise";
    case ViscosityMode::subcell: return "subcell";
    case ViscosityMode::mv_correction: return "mv_correction";
    case ViscosityMode::deriv_correction: return "deriv_correction";
    case ViscosityMode::two_inequalities: return "two_inequalities";
  }
  return "?";
}

ViscosityMode viscosity_mode_from_string(std::string_view name)
{
  for (auto m : {ViscosityMode::none, ViscosityMode::elementwise, ViscosityMode::subcell,
                 ViscosityMode::mv_correction, ViscosityMode::deriv_correction,
                 ViscosityMode::two_inequalities})
    if (name == to_string(m))
      return m;
  throw std::invalid_argument("unknown viscosity mode '" + std::string(name) + "'");
}

double regularized_ratio(double a, double b, double tol)
{
  return a * b / (tol + b * b);
}

Eigen::MatrixXd br1_gradient(const Discretization& disc, const Eigen::MatrixXd& v_coeffs,
                             const Eigen::MatrixXd& v_face)
{
  const auto& ops = *disc.ops;
  const auto& mesh = *disc.mesh;
  const int K = disc.num_elements();
  const int np = disc.np();
  const double inv_J = 1.0 / mesh.jacobian;

  Eigen::MatrixXd theta(K * np, 3);
  Eigen::Matrix<double, 2, 3> surface;
  for (int k = 0; k < K; ++k)
  {
    surface.row(0) = -0.5 * jump_at(mesh, v_face, k, 0);
    surface.row(1) = 0.5 * jump_at(mesh, v_face, k, 1);
    theta.middleRows(k * np, np) = inv_J * (ops.D * v_coeffs.middleRows(k * np, np) + ops.lift * surface);
  }
  return theta;
}

namespace {

Eigen::VectorXd residual_with_faces(const SolutionField& u, const EntropyProjection& proj,
                                    const Eigen::MatrixXd& faces)
{
  const auto& ops = *u.disc.ops;
  const int K = u.disc.num_elements();
  const int np = u.disc.np();
  const int nq = u.disc.nq();
  Eigen::VectorXd delta(K);
  for (int k = 0; k < K; ++k)
  {
    const Eigen::MatrixXd dv = ops.Dq * proj.v_coeffs.middleRows(k * np, np);
    double vol = 0.0;
    for (int q = 0; q < nq; ++q)
      vol += ops.W(q) * euler::flux(proj.u_quad.row(k * nq + q).transpose()).dot(dv.row(q).transpose());
    const double psi_r = euler::entropy_potential(faces.row(2 * k + 1).transpose());
    const double psi_l = euler::entropy_potential(faces.row(2 * k).transpose());
    delta(k) = -vol + psi_r - psi_l;
  }
  return delta;
}

} // namespace

Eigen::VectorXd volume_entropy_residual(const SolutionField& u, const EntropyProjection& proj)
{
  return residual_with_faces(u, proj, proj.u_face);
}

Eigen::VectorXd second_inequality_residual(const SolutionField& u, const EntropyProjection& proj)
{
  return residual_with_faces(u, proj, proj.uh_face);
}

std::vector<Matrix3> element_dudv(const SolutionField& u)
{
  const auto avg = element_averages(u);
  std::vector<Matrix3> A0(avg.size());
  for (size_t k = 0; k < avg.size(); ++k)
  {
    try
    {
      A0[k] = euler::dudv(avg[k]);
    }
    catch (const euler::AdmissibilityError& e)
    {
      throw e.at(static_cast<int>(k), -1);
    }
  }
  return A0;
}

DissipationDensity dissipation_density(const Discretization& disc, const Eigen::MatrixXd& theta,
                                       const std::vector<Matrix3>& A0)
{
  const auto& ops = *disc.ops;
  const int K = disc.num_elements();
  const int np = disc.np();
  const int nq = disc.nq();
  DissipationDensity out{Eigen::VectorXd(K * nq), Eigen::VectorXd(K)};
  for (int k = 0; k < K; ++k)
  {
    const Eigen::MatrixXd tq = ops.Vq * theta.middleRows(k * np, np);
    double d = 0.0;
    for (int q = 0; q < nq; ++q)
    {
      const Eigen::RowVector3d t = tq.row(q);
      const double a = t * A0[k] * t.transpose();
      out.a(k * nq + q) = a;
      d += ops.W(q) * a;
    }
    out.d(k) = disc.mesh->jacobian * d;
  }
  return out;
}

Eigen::VectorXd viscosity_elementwise(const Eigen::VectorXd& delta, const Eigen::VectorXd& d, double tol)
{
  Eigen::VectorXd eps(delta.size());
  for (Eigen::Index k = 0; k < delta.size(); ++k)
    eps(k) = delta(k) >= 0.0 ? 0.0 : regularized_ratio(-delta(k), d(k), tol);
  return eps;
}

Eigen::VectorXd viscosity_subcell(const Discretization& disc, const Eigen::VectorXd& delta,
                                  const Eigen::VectorXd& a, double tol)
{
  const auto& W = disc.ops->W;
  const int K = disc.num_elements();
  const int nq = disc.nq();
  Eigen::VectorXd eps = Eigen::VectorXd::Zero(K * nq);
  for (int k = 0; k < K; ++k)
  {
    if (delta(k) >= 0.0)
      continue;
    const auto ak = a.segment(k * nq, nq);
    const double norm2 = disc.mesh->jacobian * W.dot(ak.cwiseProduct(ak));
    eps.segment(k * nq, nq) = regularized_ratio(-delta(k), norm2, tol) * ak;
  }
  return eps;
}

Eigen::MatrixXd gvisc_br1(const Discretization& disc, const Eigen::VectorXd& eps_quad,
                          const Eigen::MatrixXd& theta, const std::vector<Matrix3>& A0)
{
  const auto& ops = *disc.ops;
  const auto& mesh = *disc.mesh;
  const int K = disc.num_elements();
  const int np = disc.np();
  const int nq = disc.nq();
  const double inv_J = 1.0 / mesh.jacobian;

  // sigma = Pi_N(eps A0 Theta) in coefficients, and its face values.
  Eigen::MatrixXd sigma(K * np, 3);
  Eigen::MatrixXd sigma_face(2 * K, 3);
  for (int k = 0; k < K; ++k)
  {
    Eigen::MatrixXd sq = (ops.Vq * theta.middleRows(k * np, np)) * A0[k];
    sq.array().colwise() *= eps_quad.segment(k * nq, nq).array();
    const Eigen::MatrixXd s = ops.Pq * sq;
    sigma.middleRows(k * np, np) = s;
    sigma_face.middleRows(2 * k, 2) = ops.Vf * s;
  }

  Eigen::MatrixXd g(K * np, 3);
  Eigen::Matrix<double, 2, 3> surface;
  for (int k = 0; k < K; ++k)
  {
    const int l = mesh.left_neighbor[k];
    const int r = mesh.right_neighbor[k];
    surface.setZero();
    if (l >= 0)
      surface.row(0) = -0.5 * (sigma_face.row(2 * k) + sigma_face.row(2 * l + 1));
    if (r >= 0)
      surface.row(1) = 0.5 * (sigma_face.row(2 * k + 1) + sigma_face.row(2 * r));
    const Eigen::MatrixXd sq = ops.Vq * sigma.middleRows(k * np, np);
    g.middleRows(k * np, np) = inv_J * (-ops.weak_volume * sq + ops.lift * surface);
  }
  return g;
}

LocalCorrection local_correction_mv(const SolutionField& u, const EntropyProjection& proj,
                                    const Eigen::VectorXd& delta, double tol)
{
  const auto& ops = *u.disc.ops;
  const int K = u.disc.num_elements();
  const int np = u.disc.np();
  const double J = u.disc.mesh->jacobian;
  const auto A0 = element_dudv(u);
  const Eigen::VectorXd one = ops.constant_coefficients();
  // Scale the zero-mean variation by the element's second moment so that eps
  // carries the units of a viscosity, as for the derivative-based correction.
  const Eigen::VectorXd r = Eigen::Map<const Eigen::VectorXd>(ops.volume_rule.points.data(), ops.num_quad());
  const double second_moment = 0.5 * ops.W.dot(r.cwiseProduct(r));
  const double c = 1.0 / (J * J * second_moment);

  LocalCorrection out{Eigen::MatrixXd::Zero(K * np, 3), Eigen::VectorXd::Zero(K), Eigen::VectorXd::Zero(K)};
  for (int k = 0; k < K; ++k)
  {
    const Eigen::MatrixXd vh = proj.v_coeffs.middleRows(k * np, np);
    const Eigen::MatrixXd vq = ops.Vq * vh;
    const Eigen::RowVector3d vbar = 0.5 * (ops.W.transpose() * vq);
    const Eigen::MatrixXd dv = vh - one * vbar;
    const Eigen::MatrixXd dvq = ops.Vq * dv;
    out.dissipation(k) = c * J * (dvq * A0[k]).cwiseProduct(dvq).rowwise().sum().dot(ops.W);
    out.eps(k) = delta(k) >= 0.0 ? 0.0 : regularized_ratio(-delta(k), out.dissipation(k), tol);
    out.rhs.middleRows(k * np, np) = -(out.eps(k) * c) * dv * A0[k];
  }
  return out;
}

LocalCorrection local_correction_deriv(const SolutionField& u, const EntropyProjection& proj,
                                       const Eigen::VectorXd& delta, double tol)
{
  const auto& ops = *u.disc.ops;
  const int K = u.disc.num_elements();
  const int np = u.disc.np();
  const double J = u.disc.mesh->jacobian;
  const auto A0 = element_dudv(u);
  const Eigen::MatrixXd stiff = ops.Minv * ops.Dq.transpose() * ops.W.asDiagonal() * ops.Dq;

  LocalCorrection out{Eigen::MatrixXd::Zero(K * np, 3), Eigen::VectorXd::Zero(K), Eigen::VectorXd::Zero(K)};
  for (int k = 0; k < K; ++k)
  {
    const Eigen::MatrixXd vh = proj.v_coeffs.middleRows(k * np, np);
    const Eigen::MatrixXd dvq = ops.Dq * vh;
    out.dissipation(k) = (dvq * A0[k]).cwiseProduct(dvq).rowwise().sum().dot(ops.W) / J;
    out.eps(k) = delta(k) >= 0.0 ? 0.0 : regularized_ratio(-delta(k), out.dissipation(k), tol);
    out.rhs.middleRows(k * np, np) = -(out.eps(k) / (J * J)) * stiff * vh * A0[k];
  }
  return out;
}

} // namespace ecav
