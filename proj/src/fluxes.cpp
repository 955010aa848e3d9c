#include "ecav/fluxes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ecav {

using euler::gamma;
using euler::State;

const char* to_string(FluxKind kind)
{
  switch (kind)
  {
  case FluxKind::llf_davis:
    return "llf_davis";
  case FluxKind::hllc:
    return "hllc";
  case FluxKind::ec_ranocha:
    return "ec_ranocha";
  case FluxKind::ec_plus_matrix_dissipation:
    return "ec_plus_matrix_dissipation";
  }
  return "?";
}

FluxKind flux_kind_from_string(std::string_view name)
{
  for (auto k : {FluxKind::llf_davis, FluxKind::hllc, FluxKind::ec_ranocha,
                 FluxKind::ec_plus_matrix_dissipation})
    if (name == to_string(k))
      return k;
  throw std::invalid_argument("unknown flux kind '" + std::string(name) + "'");
}

double log_mean(double a, double b)
{
  // xi = b / a, f = (xi - 1) / (xi + 1), u = f^2
  const double f2 = (a * (a - 2.0 * b) + b * b) / (a * (a + 2.0 * b) + b * b);
  if (f2 < 1e-4)
    return (a + b) / (2.0 + f2 * (2.0 / 3.0 + f2 * (2.0 / 5.0 + f2 * (2.0 / 7.0))));
  return (b - a) / std::log(b / a);
}

State central_volume_flux(const State& uL, const State& uR)
{
  return 0.5 * (euler::flux(uL) + euler::flux(uR));
}

State ec_volume_flux(const State& uL, const State& uR)
{
  const auto wl = euler::to_primitive(uL);
  const auto wr = euler::to_primitive(uR);
  const double rho_mean = log_mean(wl.rho, wr.rho);
  // p / rho averaged through the logarithmic mean of rho / p
  const double inv_rho_p_mean = wl.p * wr.p / log_mean(wl.rho * wr.p, wr.rho * wl.p);
  const double u_avg = 0.5 * (wl.u + wr.u);
  const double p_avg = 0.5 * (wl.p + wr.p);
  const double velocity_square_avg = 0.5 * wl.u * wr.u;

  const double f1 = rho_mean * u_avg;
  const double f2 = f1 * u_avg + p_avg;
  const double f3 = f1 * (velocity_square_avg + inv_rho_p_mean / (gamma - 1.0)) +
                    0.5 * (wl.p * wr.u + wr.p * wl.u);
  return {f1, f2, f3};
}

euler::Matrix3 matrix_dissipation(const State& u)
{
  const auto w = euler::to_primitive(u);
  const double a = std::sqrt(gamma * w.p / w.rho);
  const double H = (u(2) + w.p) / w.rho;
  euler::Matrix3 R;
  R << 1.0, 1.0, 1.0, //
      w.u - a, w.u, w.u + a, //
      H - w.u * a, 0.5 * w.u * w.u, H + w.u * a;
  const Eigen::Vector3d scale(w.rho / (2.0 * gamma), (gamma - 1.0) * w.rho / gamma,
                              w.rho / (2.0 * gamma));
  const Eigen::Vector3d lambda(std::abs(w.u - a), std::abs(w.u), std::abs(w.u + a));
  // R diag(scale) R^T / (gamma - 1) equals du/dv for the entropy variables used here.
  return R * (lambda.cwiseProduct(scale)).asDiagonal() * R.transpose() / (gamma - 1.0);
}

namespace {

State llf_davis(const State& uL, const State& uR)
{
  const double lambda = euler::max_wavespeed(uL, uR);
  return 0.5 * (euler::flux(uL) + euler::flux(uR)) - 0.5 * lambda * (uR - uL);
}

State hllc_star(const State& u, const euler::Primitive& w, double S, double S_star)
{
  const double factor = w.rho * (S - w.u) / (S - S_star);
  return {factor, factor * S_star,
          factor * (u(2) / w.rho + (S_star - w.u) * (S_star + w.p / (w.rho * (S - w.u))))};
}

State hllc(const State& uL, const State& uR)
{
  const auto wl = euler::to_primitive(uL);
  const auto wr = euler::to_primitive(uR);
  const double al = std::sqrt(gamma * wl.p / wl.rho);
  const double ar = std::sqrt(gamma * wr.p / wr.rho);
  // Davis-type bounds for the outer waves.
  const double SL = std::min(wl.u - al, wr.u - ar);
  const double SR = std::max(wl.u + al, wr.u + ar);
  const State fL = euler::flux(uL);
  const State fR = euler::flux(uR);
  if (SL >= 0.0)
    return fL;
  if (SR <= 0.0)
    return fR;
  const double S_star = (wr.p - wl.p + wl.rho * wl.u * (SL - wl.u) - wr.rho * wr.u * (SR - wr.u)) /
                        (wl.rho * (SL - wl.u) - wr.rho * (SR - wr.u));
  if (S_star >= 0.0)
    return fL + SL * (hllc_star(uL, wl, SL, S_star) - uL);
  return fR + SR * (hllc_star(uR, wr, SR, S_star) - uR);
}

State ec_matrix(const State& uL, const State& uR)
{
  const State mean = 0.5 * (uL + uR);
  const State jump_v = euler::entropy_vars(uR) - euler::entropy_vars(uL);
  return ec_volume_flux(uL, uR) - 0.5 * matrix_dissipation(mean) * jump_v;
}

} // namespace

State numerical_flux(FluxKind kind, const State& left, const State& right)
{
  switch (kind)
  {
  case FluxKind::llf_davis:
    return llf_davis(left, right);
  case FluxKind::hllc:
    return hllc(left, right);
  case FluxKind::ec_ranocha:
    return ec_volume_flux(left, right);
  case FluxKind::ec_plus_matrix_dissipation:
    return ec_matrix(left, right);
  }
  throw std::logic_error("numerical_flux: unhandled kind");
}

State interface_flux(FluxKind kind, const State& inner, const State& outer, int n)
{
  if (n == 1)
    return numerical_flux(kind, inner, outer);
  if (n == -1)
    return -numerical_flux(kind, outer, inner);
  throw std::invalid_argument("interface_flux: normal must be +1 or -1");
}

} // namespace ecav
