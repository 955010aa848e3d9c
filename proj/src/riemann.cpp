#include "ecav/riemann.hpp"

#include <algorithm>
#include <cmath>

namespace ecav {

namespace {

constexpr double g = euler::gamma;

// Pressure function f_K(p) and its derivative for one side.
void side_function(double p, const euler::Primitive& s, double a, double& f, double& df)
{
  if (p > s.p)
  {
    const double A = 2.0 / ((g + 1.0) * s.rho);
    const double B = (g - 1.0) / (g + 1.0) * s.p;
    const double q = std::sqrt(A / (p + B));
    f = (p - s.p) * q;
    df = q * (1.0 - 0.5 * (p - s.p) / (p + B));
  }
  else
  {
    const double r = p / s.p;
    f = 2.0 * a / (g - 1.0) * (std::pow(r, (g - 1.0) / (2.0 * g)) - 1.0);
    df = 1.0 / (s.rho * a) * std::pow(r, -(g + 1.0) / (2.0 * g));
  }
}

} // namespace

ExactRiemann::ExactRiemann(const euler::Primitive& left, const euler::Primitive& right) : L_(left), R_(right)
{
  if (L_.rho <= 0 || R_.rho <= 0 || L_.p <= 0 || R_.p <= 0)
    throw UnsupportedRiemannProblem("Riemann data must have positive density and pressure");
  aL_ = std::sqrt(g * L_.p / L_.rho);
  aR_ = std::sqrt(g * R_.p / R_.rho);
  const double du = R_.u - L_.u;
  if (2.0 * (aL_ + aR_) / (g - 1.0) <= du)
    throw UnsupportedRiemannProblem("Riemann data generate vacuum");

  // Two-rarefaction guess, then Newton on f_L(p) + f_R(p) + du = 0.
  const double z = (g - 1.0) / (2.0 * g);
  double p = std::pow((aL_ + aR_ - 0.5 * (g - 1.0) * du) / (aL_ / std::pow(L_.p, z) + aR_ / std::pow(R_.p, z)),
                      1.0 / z);
  p = std::max(p, 1e-12);
  double fL = 0, dfL = 0, fR = 0, dfR = 0;
  for (int it = 0; it < 100; ++it)
  {
    side_function(p, L_, aL_, fL, dfL);
    side_function(p, R_, aR_, fR, dfR);
    const double step = (fL + fR + du) / (dfL + dfR);
    const double p_new = std::max(p - step, 1e-14 * p);
    const double change = std::abs(p_new - p) / (0.5 * (p_new + p));
    p = p_new;
    if (change < 1e-15)
      break;
  }
  side_function(p, L_, aL_, fL, dfL);
  side_function(p, R_, aR_, fR, dfR);
  p_star_ = p;
  u_star_ = 0.5 * (L_.u + R_.u) + 0.5 * (fR - fL);
  residual_ = fL + fR + du;
}

euler::Primitive ExactRiemann::sample(double xi) const
{
  const double gm = (g - 1.0) / (g + 1.0);
  if (xi <= u_star_)
  {
    const auto& s = L_;
    const double a = aL_;
    if (p_star_ > s.p)
    {
      const double pr = p_star_ / s.p;
      const double S = s.u - a * std::sqrt((g + 1.0) / (2.0 * g) * pr + (g - 1.0) / (2.0 * g));
      if (xi <= S)
        return s;
      return {s.rho * (pr + gm) / (gm * pr + 1.0), u_star_, p_star_};
    }
    const double head = s.u - a;
    const double a_star = a * std::pow(p_star_ / s.p, (g - 1.0) / (2.0 * g));
    const double tail = u_star_ - a_star;
    if (xi <= head)
      return s;
    if (xi >= tail)
      return {s.rho * std::pow(p_star_ / s.p, 1.0 / g), u_star_, p_star_};
    const double c = 2.0 / (g + 1.0) + gm / a * (s.u - xi);
    return {s.rho * std::pow(c, 2.0 / (g - 1.0)), 2.0 / (g + 1.0) * (a + 0.5 * (g - 1.0) * s.u + xi),
            s.p * std::pow(c, 2.0 * g / (g - 1.0))};
  }
  const auto& s = R_;
  const double a = aR_;
  if (p_star_ > s.p)
  {
    const double pr = p_star_ / s.p;
    const double S = s.u + a * std::sqrt((g + 1.0) / (2.0 * g) * pr + (g - 1.0) / (2.0 * g));
    if (xi >= S)
      return s;
    return {s.rho * (pr + gm) / (gm * pr + 1.0), u_star_, p_star_};
  }
  const double head = s.u + a;
  const double a_star = a * std::pow(p_star_ / s.p, (g - 1.0) / (2.0 * g));
  const double tail = u_star_ + a_star;
  if (xi >= head)
    return s;
  if (xi <= tail)
    return {s.rho * std::pow(p_star_ / s.p, 1.0 / g), u_star_, p_star_};
  const double c = 2.0 / (g + 1.0) - gm / a * (s.u - xi);
  return {s.rho * std::pow(c, 2.0 / (g - 1.0)), 2.0 / (g + 1.0) * (-a + 0.5 * (g - 1.0) * s.u + xi),
          s.p * std::pow(c, 2.0 * g / (g - 1.0))};
}

} // namespace ecav
