#pragma once

#include <Eigen/Dense>

#include "ecav/quadrature.hpp"

namespace ecav {

enum class BasisKind
{
  nodal_lobatto, ///< Lagrange basis collocated with Gauss-Lobatto nodes (DGSEM)
  modal_gauss,   ///< orthonormal Legendre basis with Gauss volume quadrature
};

const char* to_string(BasisKind kind);

/// Dense reference-element operators on [-1, 1] for one discretization.
///
/// Solutions are stored as N+1 basis coefficients per element (nodal values
/// for the Lobatto variant, orthonormal Legendre coefficients for the modal
/// variant). Every inner product is evaluated with the volume rule, so the
/// projection `Pq` is the quadrature-weighted L2 projection onto P^N.
struct ElementOperators
{
  int degree = 0;
  BasisKind basis = BasisKind::nodal_lobatto;
  Quadrature1D volume_rule;
  /// True when the basis is the Lagrange basis at the quadrature nodes.
  bool collocated = false;

  Eigen::MatrixXd Vq;   ///< basis values at quadrature points (nq x np)
  Eigen::MatrixXd Dq;   ///< basis derivatives at quadrature points (nq x np)
  Eigen::MatrixXd Vf;   ///< basis values at r = -1 (row 0) and r = +1 (row 1)
  Eigen::VectorXd W;    ///< quadrature weights
  Eigen::MatrixXd M;    ///< mass matrix Vq^T W Vq
  Eigen::MatrixXd Minv;
  Eigen::MatrixXd D;    ///< differentiation in coefficient space
  Eigen::MatrixXd Q;    ///< M * D
  Eigen::MatrixXd B;    ///< boundary matrix Vf^T diag(-1, 1) Vf
  Eigen::MatrixXd Pq;   ///< quadrature values -> projected coefficients
  Eigen::MatrixXd Pi;   ///< Vq * Pq, projection acting on quadrature values
  Eigen::MatrixXd lift; ///< Minv * Vf^T
  Eigen::MatrixXd face_from_quad; ///< Vf * Pq, face values of the projection
  Eigen::MatrixXd weak_volume;    ///< Minv * Dq^T * W

  [[nodiscard]] int num_dofs() const { return degree + 1; }
  [[nodiscard]] int num_quad() const { return static_cast<int>(volume_rule.size()); }

  /// Coefficients of the constant function 1.
  [[nodiscard]] Eigen::VectorXd constant_coefficients() const;
  /// Evaluate the basis at arbitrary reference points.
  [[nodiscard]] Eigen::MatrixXd basis_at(const Eigen::VectorXd& r) const;
};

/// Build operators of degree N. The Lobatto variant needs an (N+1)-point
/// Gauss-Lobatto rule; the modal variant needs a Gauss rule with at least
/// N+1 points. Throws std::invalid_argument on a rule/degree mismatch.
ElementOperators build_operators(int N, BasisKind basis, const Quadrature1D& volume_rule);

/// Default rule for a variant: N+1 Lobatto points or N+2 Gauss points.
Quadrature1D default_volume_rule(int N, BasisKind basis);

inline ElementOperators build_operators(int N, BasisKind basis)
{
  return build_operators(N, basis, default_volume_rule(N, basis));
}

/// Barycentric Lagrange differentiation matrix at distinct nodes.
Eigen::MatrixXd lagrange_differentiation(const std::vector<double>& nodes);

/// Lagrange basis at `nodes`, evaluated at points `r` (|r| x |nodes|).
Eigen::MatrixXd lagrange_interpolation(const std::vector<double>& nodes, const Eigen::VectorXd& r);

} // namespace ecav
