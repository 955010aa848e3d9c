#include <cmath>

#include "doctest.h"

#include "ecav/diagnostics.hpp"
#include "ecav/time_integration.hpp"

using namespace ecav;

namespace {

Eigen::MatrixXd scalar(double x)
{
  return Eigen::MatrixXd::Constant(1, 1, x);
}

} // namespace

TEST_CASE("tableau consistency")
{
  double sb = 0.0, sbe = 0.0, sbc = 0.0;
  for (int i = 0; i < Ssprk43::stages; ++i)
  {
    sb += Ssprk43::b[i];
    sbe += Ssprk43::b_embedded[i];
    sbc += Ssprk43::b[i] * Ssprk43::c[i];
  }
  CHECK(sb == doctest::Approx(1.0));
  CHECK(sbe == doctest::Approx(1.0));
  CHECK(sbc == doctest::Approx(0.5));
}

TEST_CASE("one step on u' = t^2 is exact for a third-order method")
{
  const RhsFunction f = [](const Eigen::MatrixXd&, double t) { return scalar(t * t); };
  const auto u1 = ssprk43_step(f, scalar(0.0), 0.3, 0.5, nullptr);
  const double exact = (std::pow(0.8, 3) - std::pow(0.3, 3)) / 3.0;
  CHECK(std::abs(u1(0, 0) - exact) < 1e-15);
}

TEST_CASE("adaptive integration of u' = -u reaches exp(-1)")
{
  Eigen::MatrixXd u = scalar(1.0);
  const RhsFunction f = [](const Eigen::MatrixXd& x, double) { return (-x).eval(); };
  const auto stats = integrate_adaptive(f, u, 0.0, 1.0, AdaptiveOptions{});
  CHECK(std::abs(u(0, 0) - std::exp(-1.0)) < 1e-6);
  CHECK(stats.t_reached == 1.0);
  CHECK(stats.accepted_steps > 0);
}

TEST_CASE("zero right-hand side leaves the state unchanged")
{
  Eigen::MatrixXd u(2, 3);
  u << 1, 2, 3, 4, 5, 6;
  const Eigen::MatrixXd u0 = u;
  const RhsFunction f = [](const Eigen::MatrixXd& x, double) { return Eigen::MatrixXd::Zero(x.rows(), x.cols()).eval(); };
  integrate_adaptive(f, u, 0.0, 2.0, AdaptiveOptions{});
  CHECK(u == u0);
  integrate_fixed(f, u, 0.0, 2.0, [](const Eigen::MatrixXd&) { return 0.3; });
  CHECK(u == u0);
}

namespace {

double fixed_step_slope(const RhsFunction& f, double u0, double T, double exact)
{
  std::vector<double> h, e;
  for (int n : {10, 20, 40, 80, 160})
  {
    Eigen::MatrixXd u = scalar(u0);
    const double dt = T / n;
    integrate_fixed(f, u, 0.0, T, [dt](const Eigen::MatrixXd&) { return dt; });
    h.push_back(dt);
    e.push_back(std::abs(u(0, 0) - exact));
  }
  return least_squares_slope(h, e, 0);
}

} // namespace

TEST_CASE("fixed-step convergence order")
{
  // Autonomous linear and nonlinear problems see the third-order method.
  const RhsFunction lin = [](const Eigen::MatrixXd& x, double) { return (-x).eval(); };
  CHECK(fixed_step_slope(lin, 1.0, 2.0, std::exp(-2.0)) == doctest::Approx(3.0).epsilon(0.1 / 3.0));
  const RhsFunction quad = [](const Eigen::MatrixXd& x, double) { return (-x.array().square()).matrix().eval(); };
  CHECK(fixed_step_slope(quad, 1.0, 2.0, 1.0 / 3.0) == doctest::Approx(3.0).epsilon(0.1 / 3.0));
  // Pure quadrature u' = cos t: sum b c^k = 1/(k+1) holds for k <= 3, so the
  // weights integrate to fourth order.
  const RhsFunction f = [](const Eigen::MatrixXd&, double t) { return scalar(std::cos(t)); };
  CHECK(fixed_step_slope(f, 0.0, 2.0, std::sin(2.0)) == doctest::Approx(4.0).epsilon(0.1 / 4.0));
}

TEST_CASE("linear invariants are preserved step by step")
{
  // u' = A u with columns summing to zero conserves sum(u).
  Eigen::Matrix3d A;
  A << -1.0, 0.5, 0.2, 0.6, -0.5, 0.3, 0.4, 0.0, -0.5;
  const RhsFunction f = [&](const Eigen::MatrixXd& x, double) { return (A * x).eval(); };
  Eigen::MatrixXd u(3, 1);
  u << 1.0, 2.0, 0.5;
  const double total = u.sum();
  for (int i = 0; i < 100; ++i)
    u = ssprk43_step(f, u, 0.0, 0.05, nullptr);
  CHECK(std::abs(u.sum() - total) < 1e-12);
}

TEST_CASE("embedded error estimate")
{
  const RhsFunction f = [](const Eigen::MatrixXd& x, double) { return (-x).eval(); };
  Eigen::MatrixXd err;
  (void)ssprk43_step(f, scalar(1.0), 0.0, 0.1, &err);
  CHECK(std::abs(err(0, 0)) > 0.0);
  Eigen::MatrixXd err2;
  (void)ssprk43_step(f, scalar(1.0), 0.0, 0.05, &err2);
  // second-order embedded solution: local error O(dt^3)
  CHECK(std::log2(std::abs(err(0, 0) / err2(0, 0))) == doctest::Approx(3.0).epsilon(0.05));
}

TEST_CASE("controller rejects and retries, never stepping past the end")
{
  const RhsFunction f = [](const Eigen::MatrixXd& x, double) { return (-50.0 * x).eval(); };
  AdaptiveOptions opt;
  opt.dt_initial = 0.5;
  TimeController ctl(opt, 1.0);
  Eigen::MatrixXd u = scalar(1.0);
  double t = 0.0;
  int guard = 0;
  while (t < 1.0 && guard++ < 100000)
  {
    const auto r = ctl.step(f, u, t);
    CHECK(r.dt_used > 0.0);
    CHECK(t <= 1.0);
  }
  CHECK(t == 1.0);
  CHECK(ctl.rejected_steps() > 0);
  CHECK(std::abs(u(0, 0) - std::exp(-50.0)) < 1e-6);
}

TEST_CASE("invalid fixed steps")
{
  const RhsFunction f = [](const Eigen::MatrixXd& x, double) { return x; };
  Eigen::MatrixXd u = scalar(1.0);
  CHECK_THROWS_AS(integrate_fixed(f, u, 0.0, 1.0, [](const Eigen::MatrixXd&) { return 0.0; }), std::invalid_argument);
  CHECK_THROWS_AS(integrate_fixed(f, u, 0.0, 1.0, [](const Eigen::MatrixXd&) { return std::nan(""); }),
                  std::invalid_argument);
}

TEST_CASE("step-size collapse raises an integration failure")
{
  // Blows up at t = 0.5; the controller cannot pass it.
  const RhsFunction f = [](const Eigen::MatrixXd& x, double) { return (x.array().square()).matrix().eval(); };
  Eigen::MatrixXd u = scalar(2.0);
  CHECK_THROWS_AS(integrate_adaptive(f, u, 0.0, 1.0, AdaptiveOptions{}), IntegrationFailure);
}

TEST_CASE("error norm")
{
  Eigen::MatrixXd e = Eigen::MatrixXd::Constant(2, 2, 1e-8);
  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(2, 2);
  CHECK(error_norm(e, z, z, 1e-8, 1e-6) == doctest::Approx(1.0));
}
