#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

/// Pointwise physics of the 1D compressible Euler equations with an ideal gas.
namespace ecav::euler {

inline constexpr double gamma = 1.4;

/// Conservative state (rho, rho u, E).
using State = Eigen::Vector3d;
/// Entropy variables (v1, v2, v3).
using EntropyVars = Eigen::Vector3d;
using Matrix3 = Eigen::Matrix3d;

struct Primitive
{
  double rho;
  double u;
  double p;
};

/// Raised when a state has non-positive density or internal energy (or an
/// entropy-variable state has v3 >= 0). Element/node are -1 when unknown.
class AdmissibilityError : public std::runtime_error
{
public:
  explicit AdmissibilityError(const std::string& what, int element = -1, int node = -1);

  [[nodiscard]] int element() const { return element_; }
  [[nodiscard]] int node() const { return node_; }
  [[nodiscard]] const std::string& reason() const { return reason_; }
  [[nodiscard]] AdmissibilityError at(int element, int node) const;

private:
  std::string reason_;
  int element_;
  int node_;
};

State from_primitive(double rho, double u, double p);
inline State from_primitive(const Primitive& w) { return from_primitive(w.rho, w.u, w.p); }

[[nodiscard]] bool is_admissible(const State& u);
/// Throws AdmissibilityError unless rho > 0 and rho e > 0 (and finite).
void require_admissible(const State& u);

Primitive to_primitive(const State& u);
double internal_energy(const State& u); ///< rho e = E - rho u^2 / 2
double pressure(const State& u);
double sound_speed(const State& u);

State flux(const State& u);
Matrix3 flux_jacobian(const State& u);

/// S = -rho s with s = log(p / rho^gamma).
double entropy(const State& u);
/// F = -rho s u.
double entropy_flux(const State& u);
/// psi = (gamma - 1) rho u, so that F = v^T f - psi for S = -rho s.
double entropy_potential(const State& u);

EntropyVars entropy_vars(const State& u);
State cons_vars(const EntropyVars& v);

/// Symmetric positive definite Jacobian du/dv, the inverse of dv/du.
Matrix3 dudv(const State& u);

/// Davis estimate max(|uL| + aL, |uR| + aR).
double max_wavespeed(const State& uL, const State& uR);

} // namespace ecav::euler
