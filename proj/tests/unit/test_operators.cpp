#include <cmath>

#include "doctest.h"

#include "ecav/operators.hpp"

using namespace ecav;

namespace {

double max_abs(const Eigen::MatrixXd& A)
{
  return A.cwiseAbs().maxCoeff();
}

Eigen::VectorXd quad_points(const ElementOperators& ops)
{
  return Eigen::Map<const Eigen::VectorXd>(ops.volume_rule.points.data(), ops.num_quad());
}

// Coefficients of a function from its values at quadrature points (least squares,
// exact for polynomials in P^N).
Eigen::VectorXd fit(const ElementOperators& ops, const Eigen::VectorXd& vals)
{
  return ops.Vq.colPivHouseholderQr().solve(vals);
}

} // namespace

TEST_CASE("N=1 nodal operators")
{
  const auto ops = build_operators(1, BasisKind::nodal_lobatto);
  Eigen::Matrix2d M_expected = Eigen::Matrix2d::Identity();
  Eigen::Matrix2d D_expected;
  D_expected << -0.5, 0.5, -0.5, 0.5;
  CHECK(max_abs(ops.M - M_expected) < 1e-14);
  CHECK(max_abs(ops.D - D_expected) < 1e-14);
}

TEST_CASE("N=2 nodal SBP identity")
{
  const auto ops = build_operators(2, BasisKind::nodal_lobatto);
  Eigen::Matrix3d B = Eigen::Matrix3d::Zero();
  B(0, 0) = -1.0;
  B(2, 2) = 1.0;
  CHECK(max_abs(ops.Q + ops.Q.transpose() - B) < 1e-13);
  CHECK(max_abs(ops.B - B) < 1e-13);
}

TEST_CASE("N=3 modal projection reproduces cubics at 5 Gauss points")
{
  const auto ops = build_operators(3, BasisKind::modal_gauss);
  REQUIRE(ops.num_quad() == 5);
  const Eigen::VectorXd r = quad_points(ops);
  const Eigen::VectorXd p = (1.0 + r.array() * (0.5 - r.array() * (2.0 - 3.0 * r.array()))).matrix();
  CHECK(max_abs(ops.Pi * p - p) < 1e-13);
}

TEST_CASE("operator invariants for every variant and degree")
{
  for (auto basis : {BasisKind::nodal_lobatto, BasisKind::modal_gauss})
  {
    for (int N = 1; N <= 7; ++N)
    {
      CAPTURE(N);
      const auto ops = build_operators(N, basis);
      const int np = ops.num_dofs();
      // M symmetric positive definite
      CHECK(max_abs(ops.M - ops.M.transpose()) < 1e-13);
      CHECK(ops.M.llt().info() == Eigen::Success);
      // D annihilates constants
      CHECK(max_abs(ops.D * ops.constant_coefficients()) < 1e-13);
      // Projection is idempotent
      CHECK(max_abs(ops.Pi * ops.Pi - ops.Pi) < 1e-12);
      // SBP: Q + Q^T = B holds whenever the rule integrates degree 2N - 1.
      CHECK(max_abs(ops.Q + ops.Q.transpose() - ops.B) < 1e-12);
      // D differentiates monomials x^m, m <= N, exactly
      const Eigen::VectorXd r = quad_points(ops);
      for (int m = 0; m <= N; ++m)
      {
        const Eigen::VectorXd f = r.array().pow(m).matrix();
        const Eigen::VectorXd df = m == 0 ? Eigen::VectorXd::Zero(r.size()).eval()
                                          : (m * r.array().pow(m - 1)).matrix().eval();
        const Eigen::VectorXd c = fit(ops, f);
        CHECK(max_abs(ops.Vq * ops.D * c - df) < 1e-11);
        CHECK(max_abs(ops.Dq * c - df) < 1e-11);
      }
      // Weighted inner products through M match direct weighted sums
      Eigen::VectorXd a = Eigen::VectorXd::LinSpaced(np, 0.3, -1.1);
      Eigen::VectorXd b = Eigen::VectorXd::LinSpaced(np, 2.0, 0.5);
      const double direct = (ops.Vq * a).cwiseProduct(ops.W).dot(ops.Vq * b);
      CHECK(std::abs(a.dot(ops.M * b) - direct) < 1e-14 * std::max(1.0, std::abs(direct)) + 1e-14);
      // Face values match the basis evaluated at +-1
      Eigen::Vector2d ends(-1.0, 1.0);
      CHECK(max_abs(ops.basis_at(ends) - ops.Vf) < 1e-13);
    }
  }
}

TEST_CASE("nodal variant: projection is identity and faces are endpoint values")
{
  for (int N = 1; N <= 7; ++N)
  {
    const auto ops = build_operators(N, BasisKind::nodal_lobatto);
    CHECK(ops.collocated);
    CHECK(max_abs(ops.Pq - Eigen::MatrixXd::Identity(N + 1, N + 1)) < 1e-13);
    Eigen::MatrixXd E = Eigen::MatrixXd::Zero(2, N + 1);
    E(0, 0) = 1.0;
    E(1, N) = 1.0;
    CHECK(max_abs(ops.face_from_quad - E) < 1e-13);
  }
}

TEST_CASE("modal variant with a richer rule keeps exact mass matrix")
{
  const auto ops = build_operators(4, BasisKind::modal_gauss, gauss_legendre(9));
  CHECK(max_abs(ops.M - Eigen::MatrixXd::Identity(5, 5)) < 1e-13);
  CHECK(!ops.collocated);
}

TEST_CASE("rule/degree mismatch")
{
  CHECK_THROWS_AS(build_operators(3, BasisKind::nodal_lobatto, gauss_lobatto(5)), std::invalid_argument);
  CHECK_THROWS_AS(build_operators(3, BasisKind::nodal_lobatto, gauss_legendre(4)), std::invalid_argument);
  CHECK_THROWS_AS(build_operators(3, BasisKind::modal_gauss, gauss_legendre(3)), std::invalid_argument);
  CHECK_THROWS_AS(build_operators(3, BasisKind::modal_gauss, gauss_lobatto(5)), std::invalid_argument);
  CHECK_THROWS_AS(build_operators(-1, BasisKind::modal_gauss), std::invalid_argument);
}

TEST_CASE("Lagrange differentiation is exact on the nodes")
{
  const auto q = gauss_lobatto(6);
  const Eigen::MatrixXd D = lagrange_differentiation(q.points);
  Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(q.points.data(), 6);
  const Eigen::VectorXd f = x.array().pow(5).matrix();
  CHECK(max_abs(D * f - (5.0 * x.array().pow(4)).matrix()) < 1e-11);
}
