#include "ecav/field.hpp"

namespace ecav {

Eigen::VectorXd Discretization::quadrature_coordinates() const
{
  const int nq_ = nq();
  Eigen::VectorXd x(num_elements() * nq_);
  for (int k = 0; k < num_elements(); ++k)
    for (int q = 0; q < nq_; ++q)
      x(k * nq_ + q) = mesh->to_physical(k, ops->volume_rule.points[q]);
  return x;
}

Discretization make_discretization(const Mesh1D& mesh, const ElementOperators& ops)
{
  return {std::make_shared<const Mesh1D>(mesh), std::make_shared<const ElementOperators>(ops)};
}

SolutionField::SolutionField(Discretization d)
    : disc(std::move(d)), coeffs(Eigen::MatrixXd::Zero(disc.num_elements() * disc.np(), 3))
{
}

Eigen::MatrixXd SolutionField::quad_values(int k) const
{
  if (disc.ops->collocated)
    return element(k);
  return disc.ops->Vq * element(k);
}

Eigen::MatrixXd SolutionField::all_quad_values() const
{
  const int nq = disc.nq();
  Eigen::MatrixXd out(disc.num_elements() * nq, 3);
  for (int k = 0; k < disc.num_elements(); ++k)
    out.middleRows(k * nq, nq) = quad_values(k);
  return out;
}

void SolutionField::check_admissible() const
{
  for (int k = 0; k < disc.num_elements(); ++k)
  {
    const Eigen::MatrixXd uq = quad_values(k);
    for (int q = 0; q < uq.rows(); ++q)
    {
      try
      {
        euler::require_admissible(uq.row(q).transpose());
      }
      catch (const euler::AdmissibilityError& e)
      {
        throw e.at(k, q);
      }
    }
  }
}

} // namespace ecav
