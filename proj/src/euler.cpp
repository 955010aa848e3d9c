#include "ecav/euler.hpp"

#include <algorithm>
#include <cmath>

namespace ecav::euler {

namespace {

std::string located(const std::string& reason, int element, int node)
{
  if (element < 0)
    return "inadmissible state: " + reason;
  return "inadmissible state at element " + std::to_string(element) + ", node " +
         std::to_string(node) + ": " + reason;
}

} // namespace

AdmissibilityError::AdmissibilityError(const std::string& what, int element, int node)
    : std::runtime_error(located(what, element, node)), reason_(what), element_(element), node_(node)
{
}

AdmissibilityError AdmissibilityError::at(int element, int node) const
{
  return AdmissibilityError(reason_, element, node);
}

State from_primitive(double rho, double u, double p)
{
  return {rho, rho * u, p / (gamma - 1.0) + 0.5 * rho * u * u};
}

double internal_energy(const State& u)
{
  return u(2) - 0.5 * u(1) * u(1) / u(0);
}

bool is_admissible(const State& u)
{
  return std::isfinite(u(0)) && std::isfinite(u(1)) && std::isfinite(u(2)) && u(0) > 0.0 &&
         internal_energy(u) > 0.0;
}

void require_admissible(const State& u)
{
  if (!(std::isfinite(u(0)) && std::isfinite(u(1)) && std::isfinite(u(2))))
    throw AdmissibilityError("non-finite state");
  if (!(u(0) > 0.0))
    throw AdmissibilityError("density " + std::to_string(u(0)) + " <= 0");
  if (!(internal_energy(u) > 0.0))
    throw AdmissibilityError("internal energy " + std::to_string(internal_energy(u)) + " <= 0");
}

Primitive to_primitive(const State& u)
{
  require_admissible(u);
  return {u(0), u(1) / u(0), (gamma - 1.0) * internal_energy(u)};
}

double pressure(const State& u)
{
  return (gamma - 1.0) * internal_energy(u);
}

double sound_speed(const State& u)
{
  const auto w = to_primitive(u);
  return std::sqrt(gamma * w.p / w.rho);
}

State flux(const State& u)
{
  const auto w = to_primitive(u);
  return {u(1), u(1) * w.u + w.p, w.u * (u(2) + w.p)};
}

Matrix3 flux_jacobian(const State& u)
{
  const auto w = to_primitive(u);
  const double H = (u(2) + w.p) / w.rho;
  const double g1 = gamma - 1.0;
  Matrix3 A;
  A << 0.0, 1.0, 0.0, //
      0.5 * (gamma - 3.0) * w.u * w.u, (3.0 - gamma) * w.u, g1, //
      w.u * (0.5 * g1 * w.u * w.u - H), H - g1 * w.u * w.u, gamma * w.u;
  return A;
}

namespace {

double physical_entropy(const Primitive& w)
{
  return std::log(w.p) - gamma * std::log(w.rho);
}

} // namespace

double entropy(const State& u)
{
  const auto w = to_primitive(u);
  return -w.rho * physical_entropy(w);
}

double entropy_flux(const State& u)
{
  const auto w = to_primitive(u);
  return -w.rho * physical_entropy(w) * w.u;
}

double entropy_potential(const State& u)
{
  require_admissible(u);
  return (gamma - 1.0) * u(1);
}

EntropyVars entropy_vars(const State& u)
{
  const auto w = to_primitive(u);
  const double rhoe = w.p / (gamma - 1.0);
  const double s = physical_entropy(w);
  return {(rhoe * (gamma + 1.0 - s) - u(2)) / rhoe, u(1) / rhoe, -u(0) / rhoe};
}

State cons_vars(const EntropyVars& v)
{
  if (!(std::isfinite(v(0)) && std::isfinite(v(1)) && std::isfinite(v(2))))
    throw AdmissibilityError("non-finite entropy variables");
  if (!(v(2) < 0.0))
    throw AdmissibilityError("entropy variable v3 = " + std::to_string(v(2)) + " >= 0");
  const double s = gamma - v(0) + v(1) * v(1) / (2.0 * v(2));
  const double rhoe = std::pow((gamma - 1.0) / std::pow(-v(2), gamma), 1.0 / (gamma - 1.0)) *
                      std::exp(-s / (gamma - 1.0));
  State u{-rhoe * v(2), rhoe * v(1), rhoe * (1.0 - v(1) * v(1) / (2.0 * v(2)))};
  require_admissible(u);
  return u;
}

Matrix3 dudv(const State& u)
{
  const auto w = to_primitive(u);
  const double a2 = gamma * w.p / w.rho;
  const double H = a2 / (gamma - 1.0) + 0.5 * w.u * w.u;
  const double E = u(2);
  Matrix3 A0;
  A0(0, 0) = w.rho;
  A0(0, 1) = u(1);
  A0(0, 2) = E;
  A0(1, 1) = u(1) * w.u + w.p;
  A0(1, 2) = w.u * (E + w.p);
  A0(2, 2) = w.rho * H * H - a2 * w.p / (gamma - 1.0);
  A0(1, 0) = A0(0, 1);
  A0(2, 0) = A0(0, 2);
  A0(2, 1) = A0(1, 2);
  // The matrix above inverts dv/du for S = -rho s / (gamma - 1).
  return A0 / (gamma - 1.0);
}

double max_wavespeed(const State& uL, const State& uR)
{
  const auto wl = to_primitive(uL);
  const auto wr = to_primitive(uR);
  return std::max(std::abs(wl.u) + std::sqrt(gamma * wl.p / wl.rho),
                  std::abs(wr.u) + std::sqrt(gamma * wr.p / wr.rho));
}

} // namespace ecav::euler
