#pragma once

#include <stdexcept>

#include "ecav/euler.hpp"

namespace ecav {

/// Thrown for initial data whose exact solution contains vacuum.
class UnsupportedRiemannProblem : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Exact solution of the Riemann problem for the 1D Euler equations.
class ExactRiemann
{
public:
  ExactRiemann(const euler::Primitive& left, const euler::Primitive& right);

  [[nodiscard]] double p_star() const { return p_star_; }
  [[nodiscard]] double u_star() const { return u_star_; }
  /// Residual of the pressure equation at p_star.
  [[nodiscard]] double residual() const { return residual_; }

  /// Self-similar state at speed xi = (x - x0) / t.
  [[nodiscard]] euler::Primitive sample(double xi) const;
  [[nodiscard]] euler::State state(double xi) const { return euler::from_primitive(sample(xi)); }

private:
  euler::Primitive L_;
  euler::Primitive R_;
  double aL_;
  double aR_;
  double p_star_ = 0.0;
  double u_star_ = 0.0;
  double residual_ = 0.0;
};

} // namespace ecav
