#pragma once

#include <memory>

#include <Eigen/Dense>

#include "ecav/euler.hpp"
#include "ecav/mesh.hpp"
#include "ecav/operators.hpp"

namespace ecav {

/// Mesh plus reference operators; both immutable and shared between fields.
struct Discretization
{
  std::shared_ptr<const Mesh1D> mesh;
  std::shared_ptr<const ElementOperators> ops;

  [[nodiscard]] int num_elements() const { return mesh->num_elements; }
  [[nodiscard]] int np() const { return ops->num_dofs(); }
  [[nodiscard]] int nq() const { return ops->num_quad(); }
  /// Physical coordinates of all volume quadrature points, element by element.
  [[nodiscard]] Eigen::VectorXd quadrature_coordinates() const;
};

Discretization make_discretization(const Mesh1D& mesh, const ElementOperators& ops);

/// Conservative variables of a DG solution: N+1 basis coefficients per element
/// and variable, stored as a (K * (N+1)) x 3 matrix with element-contiguous rows.
struct SolutionField
{
  Discretization disc;
  Eigen::MatrixXd coeffs;

  SolutionField() = default;
  SolutionField(Discretization d, Eigen::MatrixXd c) : disc(std::move(d)), coeffs(std::move(c)) {}
  /// Zero field with the layout of `d`.
  explicit SolutionField(Discretization d);

  [[nodiscard]] auto element(int k) const { return coeffs.middleRows(k * disc.np(), disc.np()); }
  [[nodiscard]] auto element(int k) { return coeffs.middleRows(k * disc.np(), disc.np()); }

  /// u_h at the volume quadrature points of element k (nq x 3).
  [[nodiscard]] Eigen::MatrixXd quad_values(int k) const;
  /// u_h at all quadrature points, (K * nq) x 3.
  [[nodiscard]] Eigen::MatrixXd all_quad_values() const;

  /// Throws euler::AdmissibilityError (with location) if any quadrature
  /// value is inadmissible.
  void check_admissible() const;
};

} // namespace ecav
