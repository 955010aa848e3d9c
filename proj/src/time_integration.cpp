#include "ecav/time_integration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ecav {

Eigen::MatrixXd ssprk43_step(const RhsFunction& rhs, const Eigen::MatrixXd& u, double t, double dt,
                             Eigen::MatrixXd* error)
{
  using M = Ssprk43;
  const Eigen::MatrixXd k1 = rhs(u, t);
  const Eigen::MatrixXd u1 = u + 0.5 * dt * k1;
  const Eigen::MatrixXd k2 = rhs(u1, t + M::c[1] * dt);
  const Eigen::MatrixXd u2 = u1 + 0.5 * dt * k2;
  const Eigen::MatrixXd k3 = rhs(u2, t + M::c[2] * dt);
  const Eigen::MatrixXd u3 = (2.0 / 3.0) * u + (1.0 / 3.0) * u2 + (dt / 6.0) * k3;
  const Eigen::MatrixXd k4 = rhs(u3, t + M::c[3] * dt);
  Eigen::MatrixXd next = u3 + 0.5 * dt * k4;
  if (error)
  {
    *error = dt * ((M::b[0] - M::b_embedded[0]) * k1 + (M::b[1] - M::b_embedded[1]) * k2 +
                   (M::b[2] - M::b_embedded[2]) * k3 + (M::b[3] - M::b_embedded[3]) * k4);
  }
  return next;
}

double error_norm(const Eigen::MatrixXd& err, const Eigen::MatrixXd& u0, const Eigen::MatrixXd& u1,
                  double abs_tol, double rel_tol)
{
  const Eigen::ArrayXXd w = abs_tol + rel_tol * u0.array().abs().max(u1.array().abs());
  return std::sqrt((err.array() / w).square().mean());
}

TimeController::TimeController(AdaptiveOptions options, double t_final) : options_(options), t_final_(t_final)
{
  dt_ = options_.dt_initial;
}

double TimeController::initial_dt(const RhsFunction& rhs, const Eigen::MatrixXd& u, double t) const
{
  const Eigen::MatrixXd f0 = rhs(u, t);
  const Eigen::ArrayXXd w = options_.abs_tol + options_.rel_tol * u.array().abs();
  const double d0 = std::sqrt((u.array() / w).square().mean());
  const double d1 = std::sqrt((f0.array() / w).square().mean());
  double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
  h0 = std::min(h0, t_final_ - t);
  const Eigen::MatrixXd f1 = rhs(u + h0 * f0, t + h0);
  const double d2 = std::sqrt(((f1 - f0).array() / w).square().mean()) / h0;
  const double dmax = std::max(d1, d2);
  const double h1 = dmax <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / dmax, 1.0 / 3.0);
  return std::min({100.0 * h0, h1, options_.dt_max});
}

TimeController::Result TimeController::step(const RhsFunction& rhs, Eigen::MatrixXd& u, double& t)
{
  if (dt_ <= 0.0)
    dt_ = initial_dt(rhs, u, t);
  const double remaining = t_final_ - t;
  const double dt = std::min(dt_, remaining);
  if (dt < 1e-14 * t_final_)
    throw IntegrationFailure("time step underflow", t);

  Eigen::MatrixXd err;
  Eigen::MatrixXd next = ssprk43_step(rhs, u, t, dt, &err);
  double e = std::max(error_norm(err, u, next, options_.abs_tol, options_.rel_tol), 1e-10);
  if (!std::isfinite(e) || !next.allFinite())
    e = std::numeric_limits<double>::infinity();

  Result res{e <= 1.0, dt, e};
  if (res.accepted)
  {
    double fac = options_.safety * std::pow(e, -options_.beta1) * std::pow(err_prev_, options_.beta2);
    fac = std::clamp(fac, options_.fac_min, options_.fac_max);
    // A step shortened to land on t_final keeps the previous proposal.
    if (dt == dt_)
      dt_ = std::min(dt * fac, options_.dt_max);
    err_prev_ = e;
    u = std::move(next);
    t = dt == remaining ? t_final_ : t + dt;
    ++accepted_;
  }
  else
  {
    const double fac = std::isfinite(e) ? std::max(options_.fac_min, options_.safety * std::pow(e, -1.0 / 3.0))
                                        : options_.fac_min;
    dt_ = dt * fac;
    ++rejected_;
  }
  return res;
}

IntegrationStats integrate_adaptive(const RhsFunction& rhs, Eigen::MatrixXd& u, double t0, double t_final,
                                    const AdaptiveOptions& options,
                                    const std::function<void(double, const Eigen::MatrixXd&)>& on_accept)
{
  TimeController ctrl(options, t_final);
  double t = t0;
  while (t < t_final)
  {
    if (ctrl.step(rhs, u, t).accepted && on_accept)
      on_accept(t, u);
  }
  return {ctrl.accepted_steps(), ctrl.rejected_steps(), t};
}

IntegrationStats integrate_fixed(const RhsFunction& rhs, Eigen::MatrixXd& u, double t0, double t_final,
                                 const std::function<double(const Eigen::MatrixXd&)>& dt_of,
                                 const std::function<void(double, const Eigen::MatrixXd&)>& on_accept)
{
  IntegrationStats stats;
  double t = t0;
  while (t < t_final)
  {
    const double dt_nominal = dt_of(u);
    if (!(dt_nominal > 0.0) || !std::isfinite(dt_nominal))
      throw std::invalid_argument("fixed step size must be positive and finite");
    const double dt = std::min(dt_nominal, t_final - t);
    u = ssprk43_step(rhs, u, t, dt);
    t = dt == t_final - t ? t_final : t + dt;
    ++stats.accepted_steps;
    if (on_accept)
      on_accept(t, u);
  }
  stats.t_reached = t;
  return stats;
}

} // namespace ecav
