#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"

#include "ecav/euler.hpp"

using namespace ecav;
using namespace ecav::euler;

namespace {

constexpr int samples = 1000;

Eigen::Matrix3d fd_dvdu(const State& u)
{
  // fourth-order central differences
  Eigen::Matrix3d J;
  for (int j = 0; j < 3; ++j)
  {
    // small against both the density and the internal energy
    const double h = 1e-3 * std::min(u(0), internal_energy(u)) / (1.0 + std::abs(u(1) / u(0)));
    auto at = [&](double s) {
      State w = u;
      w(j) += s * h;
      return entropy_vars(w);
    };
    J.col(j) = (-at(2.0) + 8.0 * at(1.0) - 8.0 * at(-1.0) + at(-2.0)) / (12.0 * h);
  }
  return J;
}

} // namespace

TEST_CASE("flux examples")
{
  const State u = from_primitive(1.0, 0.75, 1.0);
  CHECK(u(2) == doctest::Approx(2.78125).epsilon(1e-15));
  const State f = flux(u);
  CHECK(std::abs(f(0) - 0.75) < 1e-14);
  CHECK(std::abs(f(1) - 1.5625) < 1e-14);
  // u (E + p) = 0.75 * 3.78125
  CHECK(std::abs(f(2) - 2.8359375) < 1e-14);

  CHECK((flux(from_primitive(1.0, 0.0, 1.0)) - State(0.0, 1.0, 0.0)).norm() < 1e-15);
  CHECK((flux(from_primitive(0.125, 0.0, 0.1)) - State(0.0, 0.1, 0.0)).norm() < 1e-15);
}

TEST_CASE("inadmissible states are rejected")
{
  CHECK_THROWS_AS(flux(State(-1.0, 0.0, 1.0)), AdmissibilityError);
  CHECK_THROWS_AS(entropy_vars(State(1.0, 2.0, 1.0)), AdmissibilityError);
  CHECK_THROWS_AS(cons_vars(EntropyVars(1.0, 0.0, 0.5)), AdmissibilityError);
  CHECK_THROWS_AS(require_admissible(State(1.0, 0.0, std::nan(""))), AdmissibilityError);
  CHECK_FALSE(is_admissible(State(0.0, 0.0, 1.0)));
  CHECK(is_admissible(State(1.0, 0.0, 1.0)));
  const auto e = AdmissibilityError("bad").at(3, 2);
  CHECK(e.element() == 3);
  CHECK(e.node() == 2);
}

TEST_CASE("entropy variable examples")
{
  const auto v = entropy_vars(from_primitive(1.0, 0.0, 1.0));
  CHECK(v(1) == 0.0);
  const State u = from_primitive(1.0, 0.1, 10.0);
  const double rhoe = internal_energy(u);
  CHECK(entropy_vars(u)(2) == doctest::Approx(-1.0 / rhoe).epsilon(1e-14));
  CHECK(entropy_vars(u)(2) < 0.0);
  CHECK(std::abs(entropy(from_primitive(1.0, 0.0, 1.0))) < 1e-15);
  CHECK(entropy_potential(from_primitive(2.0, 0.0, 3.0)) == 0.0);
  // psi = (gamma - 1) rho u for S = -rho s; see ledger for the scaling.
  CHECK(entropy_potential(from_primitive(1.0, 0.75, 1.0)) == doctest::Approx(0.4 * 0.75).epsilon(1e-15));
}

TEST_CASE("round trip and entropy relations on random states")
{
  std::mt19937 rng(7);
  for (int i = 0; i < samples; ++i)
  {
    const State u = testing::random_state(rng);
    CHECK((cons_vars(entropy_vars(u)) - u).norm() < 1e-12 * u.norm());

    // v is the gradient of S
    const EntropyVars v = entropy_vars(u);
    for (int j = 0; j < 3; ++j)
    {
      const double h = 1e-6 * std::max(1.0, std::abs(u(j)));
      State up = u, um = u;
      up(j) += h;
      um(j) -= h;
      const double g = (entropy(up) - entropy(um)) / (2.0 * h);
      CHECK(std::abs(g - v(j)) <= 1e-6 * std::max(1.0, std::abs(v(j))));
    }

    // F = v^T f - psi
    CHECK(std::abs(entropy_flux(u) - (v.dot(flux(u)) - entropy_potential(u))) <
          1e-11 * std::max(1.0, std::abs(entropy_flux(u))));

    // A0 inverts dv/du and is SPD
    const Matrix3 A0 = dudv(u);
    CHECK((A0 - A0.transpose()).norm() < 1e-12 * A0.norm());
    CHECK(A0.llt().info() == Eigen::Success);
    CHECK((A0 * fd_dvdu(u) - Matrix3::Identity()).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("entropy-flux compatibility v^T df/du = dF/du")
{
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i)
  {
    const State u = testing::random_state(rng);
    const Eigen::RowVector3d lhs = entropy_vars(u).transpose() * flux_jacobian(u);
    Eigen::RowVector3d rhs;
    for (int j = 0; j < 3; ++j)
    {
      const double h = 1e-6 * std::max(1.0, std::abs(u(j)));
      State up = u, um = u;
      up(j) += h;
      um(j) -= h;
      rhs(j) = (entropy_flux(up) - entropy_flux(um)) / (2.0 * h);
    }
    CHECK((lhs - rhs).norm() <= 1e-5 * std::max(1.0, rhs.norm()));
  }
}

TEST_CASE("flux Jacobian matches finite differences")
{
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i)
  {
    const State u = testing::random_state(rng);
    Matrix3 fd;
    for (int j = 0; j < 3; ++j)
    {
      const double h = 1e-6 * std::max(1.0, std::abs(u(j)));
      State up = u, um = u;
      up(j) += h;
      um(j) -= h;
      fd.col(j) = (flux(up) - flux(um)) / (2.0 * h);
    }
    CHECK((fd - flux_jacobian(u)).norm() < 1e-6 * std::max(1.0, fd.norm()));
  }
}

TEST_CASE("A0 first row is (rho, rho u, E) up to the entropy scaling")
{
  const State u = from_primitive(1.3, -0.4, 2.1);
  const Matrix3 A0 = dudv(u);
  CHECK((A0.row(0).transpose() * (euler::gamma - 1.0) - u).norm() < 1e-13);
}

TEST_CASE("S is convex along admissible segments")
{
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> t(0.0, 1.0);
  for (int i = 0; i < 200; ++i)
  {
    const State a = testing::random_state(rng);
    const State b = testing::random_state(rng);
    const double s = t(rng);
    CHECK(entropy(s * a + (1 - s) * b) <= s * entropy(a) + (1 - s) * entropy(b) + 1e-12);
  }
}

TEST_CASE("max wavespeed")
{
  const State q = from_primitive(1.0, 0.0, 1.0);
  CHECK(max_wavespeed(q, q) == doctest::Approx(std::sqrt(1.4)).epsilon(1e-15));
  const State L = from_primitive(1.0, 0.75, 1.0);
  const State R = from_primitive(0.125, 0.0, 0.1);
  const double expected = std::max(0.75 + std::sqrt(1.4), std::sqrt(1.4 * 0.1 / 0.125));
  CHECK(expected == doctest::Approx(0.75 + std::sqrt(1.4)));
  CHECK(max_wavespeed(L, R) == doctest::Approx(expected).epsilon(1e-15));
  CHECK(max_wavespeed(R, L) == max_wavespeed(L, R));
}
