#include "ecav/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ecav {

const char* to_string(BasisKind kind)
{
  switch (kind)
  {
  case BasisKind::nodal_lobatto:
    return "nodal";
  case BasisKind::modal_gauss:
    return "modal";
  }
  return "?";
}

Eigen::MatrixXd lagrange_differentiation(const std::vector<double>& nodes)
{
  const int n = static_cast<int>(nodes.size());
  Eigen::VectorXd bary = Eigen::VectorXd::Ones(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (k != j)
        bary(j) *= nodes[j] - nodes[k];
  bary = bary.cwiseInverse();

  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
  {
    for (int j = 0; j < n; ++j)
    {
      if (i == j)
        continue;
      D(i, j) = bary(j) / bary(i) / (nodes[i] - nodes[j]);
      D(i, i) -= D(i, j);
    }
  }
  return D;
}

Eigen::MatrixXd lagrange_interpolation(const std::vector<double>& nodes, const Eigen::VectorXd& r)
{
  const int n = static_cast<int>(nodes.size());
  Eigen::MatrixXd V(r.size(), n);
  for (int p = 0; p < r.size(); ++p)
  {
    for (int j = 0; j < n; ++j)
    {
      double l = 1.0;
      for (int k = 0; k < n; ++k)
        if (k != j)
          l *= (r(p) - nodes[k]) / (nodes[j] - nodes[k]);
      V(p, j) = l;
    }
  }
  return V;
}

Quadrature1D default_volume_rule(int N, BasisKind basis)
{
  return basis == BasisKind::nodal_lobatto ? gauss_lobatto(N + 1) : gauss_legendre(N + 2);
}

Eigen::VectorXd ElementOperators::constant_coefficients() const
{
  if (basis == BasisKind::nodal_lobatto)
    return Eigen::VectorXd::Ones(num_dofs());
  Eigen::VectorXd c = Eigen::VectorXd::Zero(num_dofs());
  c(0) = std::sqrt(2.0);
  return c;
}

Eigen::MatrixXd ElementOperators::basis_at(const Eigen::VectorXd& r) const
{
  if (basis == BasisKind::nodal_lobatto)
    return lagrange_interpolation(volume_rule.points, r);
  Eigen::MatrixXd V(r.size(), num_dofs());
  for (int p = 0; p < r.size(); ++p)
    for (int j = 0; j < num_dofs(); ++j)
      V(p, j) = orthonormal_legendre(j, r(p)).value;
  return V;
}

ElementOperators build_operators(int N, BasisKind basis, const Quadrature1D& volume_rule)
{
  if (N < 0)
    throw std::invalid_argument("build_operators: negative degree");
  const int np = N + 1;
  const int nq = static_cast<int>(volume_rule.size());
  if (basis == BasisKind::nodal_lobatto)
  {
    if (nq != np || volume_rule.points.front() != -1.0 || volume_rule.points.back() != 1.0)
      throw std::invalid_argument("build_operators: nodal_lobatto needs an " + std::to_string(np) +
                                  "-point Gauss-Lobatto rule");
  }
  else
  {
    if (nq < np || volume_rule.points.front() <= -1.0)
      throw std::invalid_argument("build_operators: modal_gauss needs a Gauss rule with at least " +
                                  std::to_string(np) + " points");
  }

  ElementOperators ops;
  ops.degree = N;
  ops.basis = basis;
  ops.volume_rule = volume_rule;
  ops.W = Eigen::Map<const Eigen::VectorXd>(volume_rule.weights.data(), nq);

  Eigen::Vector2d ends(-1.0, 1.0);
  if (basis == BasisKind::nodal_lobatto)
  {
    ops.collocated = true;
    ops.Vq = Eigen::MatrixXd::Identity(np, np);
    ops.D = lagrange_differentiation(volume_rule.points);
    ops.Dq = ops.D;
    ops.Vf = Eigen::MatrixXd::Zero(2, np);
    ops.Vf(0, 0) = 1.0;
    ops.Vf(1, N) = 1.0;
  }
  else
  {
    ops.Vq.resize(nq, np);
    ops.Dq.resize(nq, np);
    for (int q = 0; q < nq; ++q)
      for (int j = 0; j < np; ++j)
      {
        const auto [v, dv] = orthonormal_legendre(j, volume_rule.points[q]);
        ops.Vq(q, j) = v;
        ops.Dq(q, j) = dv;
      }
    ops.Vf.resize(2, np);
    for (int f = 0; f < 2; ++f)
      for (int j = 0; j < np; ++j)
        ops.Vf(f, j) = orthonormal_legendre(j, ends(f)).value;
  }

  ops.M = ops.Vq.transpose() * ops.W.asDiagonal() * ops.Vq;
  ops.Minv = ops.M.inverse();
  if (basis == BasisKind::modal_gauss)
    ops.D = ops.Minv * (ops.Vq.transpose() * ops.W.asDiagonal() * ops.Dq);
  ops.Q = ops.M * ops.D;
  ops.B = ops.Vf.transpose() * Eigen::Vector2d(-1.0, 1.0).asDiagonal() * ops.Vf;
  ops.Pq = ops.Minv * ops.Vq.transpose() * ops.W.asDiagonal();
  ops.Pi = ops.Vq * ops.Pq;
  ops.lift = ops.Minv * ops.Vf.transpose();
  ops.face_from_quad = ops.Vf * ops.Pq;
  ops.weak_volume = ops.Minv * ops.Dq.transpose() * ops.W.asDiagonal();
  return ops;
}

} // namespace ecav
