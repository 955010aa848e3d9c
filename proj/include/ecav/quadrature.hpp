#pragma once

#include <vector>

namespace ecav {

/// One-dimensional quadrature rule on the reference interval [-1, 1].
struct Quadrature1D
{
  std::vector<double> points;
  std::vector<double> weights;
  /// Polynomials of degree <= exactness_degree are integrated exactly.
  int exactness_degree = 0;

  [[nodiscard]] std::size_t size() const { return points.size(); }
};

/// Legendre polynomial P_n and its derivative at x (three-term recurrence).
struct LegendreValue
{
  double value;
  double derivative;
};
LegendreValue legendre(int n, double x);

/// Legendre polynomial normalized so that its L2 norm on [-1, 1] is one.
LegendreValue orthonormal_legendre(int n, double x);

/// Legendre-Gauss-Lobatto rule with n_points >= 2 (endpoints included).
Quadrature1D gauss_lobatto(int n_points);

/// Legendre-Gauss rule with n_points >= 1 (strictly interior nodes).
Quadrature1D gauss_legendre(int n_points);

} // namespace ecav
