#include "ecav/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ecav {

namespace {

constexpr double kNewtonTol = 1e-15;
constexpr int kMaxNewton = 100;

} // namespace

LegendreValue legendre(int n, double x)
{
  if (n == 0)
    return {1.0, 0.0};
  double p_prev = 1.0;
  double p = x;
  for (int k = 2; k <= n; ++k)
  {
    const double p_next = ((2.0 * k - 1.0) * x * p - (k - 1.0) * p_prev) / k;
    p_prev = p;
    p = p_next;
  }
  // P_n' from the recurrence (1 - x^2) P_n' = n (P_{n-1} - x P_n); the
  // endpoint values are n(n+1)/2 * (+-1)^(n+1).
  double dp;
  if (std::abs(std::abs(x) - 1.0) < 1e-14)
    dp = 0.5 * n * (n + 1.0) * ((x > 0.0 || n % 2 == 1) ? 1.0 : -1.0);
  else
    dp = n * (p_prev - x * p) / (1.0 - x * x);
  return {p, dp};
}

LegendreValue orthonormal_legendre(int n, double x)
{
  const auto [p, dp] = legendre(n, x);
  const double scale = std::sqrt((2.0 * n + 1.0) / 2.0);
  return {scale * p, scale * dp};
}

Quadrature1D gauss_legendre(int n_points)
{
  if (n_points < 1)
    throw std::invalid_argument("gauss_legendre: n_points must be >= 1, got " +
                                std::to_string(n_points));
  const int n = n_points;
  Quadrature1D rule;
  rule.points.resize(n);
  rule.weights.resize(n);
  rule.exactness_degree = 2 * n - 1;
  for (int i = 0; i < n; ++i)
  {
    // Chebyshev-like initial guess, descending order.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < kMaxNewton; ++it)
    {
      const auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < kNewtonTol)
        break;
    }
    const double dp = legendre(n, x).derivative;
    rule.points[n - 1 - i] = x;
    rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  if (n % 2 == 1)
    rule.points[n / 2] = 0.0;
  return rule;
}

Quadrature1D gauss_lobatto(int n_points)
{
  if (n_points < 2)
    throw std::invalid_argument("gauss_lobatto: n_points must be >= 2, got " +
                                std::to_string(n_points));
  const int N = n_points - 1;
  Quadrature1D rule;
  rule.points.resize(n_points);
  rule.weights.resize(n_points);
  rule.exactness_degree = 2 * n_points - 3;
  rule.points.front() = -1.0;
  rule.points.back() = 1.0;
  // Interior nodes are the roots of P_N'. Newton on q(x) = (1 - x^2) P_N'(x),
  // whose derivative is -N(N+1) P_N(x).
  for (int i = 1; i < N; ++i)
  {
    double x = -std::cos(std::numbers::pi * i / N);
    for (int it = 0; it < kMaxNewton; ++it)
    {
      const auto [p, dp] = legendre(N, x);
      const double q = (1.0 - x * x) * dp;
      const double dq = -N * (N + 1.0) * p;
      const double dx = q / dq;
      x -= dx;
      if (std::abs(dx) < kNewtonTol)
        break;
    }
    rule.points[i] = x;
  }
  if (n_points % 2 == 1)
    rule.points[N / 2] = 0.0;
  for (int i = 0; i <= N; ++i)
  {
    const double p = legendre(N, rule.points[i]).value;
    rule.weights[i] = 2.0 / (N * (N + 1.0) * p * p);
  }
  return rule;
}

} // namespace ecav
