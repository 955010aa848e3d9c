#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ecav/dg.hpp"

namespace ecav {

enum class ViscosityMode
{
  none,
  elementwise,      ///< one coefficient per element
  subcell,          ///< minimum-norm coefficient varying within the element
  mv_correction,    ///< mean-value local entropy correction
  deriv_correction, ///< derivative-based local entropy correction
  two_inequalities, ///< elementwise, enforcing both the projected and u_h residuals
};

const char* to_string(ViscosityMode mode);
/// Throws std::invalid_argument for unknown names.
ViscosityMode viscosity_mode_from_string(std::string_view name);

inline constexpr double default_delta_tol = 1e-14;

/// a b / (tol + b^2): approximates a / b and vanishes smoothly as b -> 0.
double regularized_ratio(double a, double b, double tol = default_delta_tol);

/// BR-1 gradient of v_h: coefficients of Theta, (K np) x 3. Faces use the
/// central average; on a non-periodic mesh the domain-boundary jump is zero.
Eigen::MatrixXd br1_gradient(const Discretization& disc, const Eigen::MatrixXd& v_coeffs,
                             const Eigen::MatrixXd& v_face);

/// delta_k = -(f(u_h), d v_h/dx)_k + [psi(u~)]_k with projected face states.
Eigen::VectorXd volume_entropy_residual(const SolutionField& u, const EntropyProjection& proj);
/// Same with psi(u_h) at the faces instead of the entropy projection.
Eigen::VectorXd second_inequality_residual(const SolutionField& u, const EntropyProjection& proj);

/// du/dv at each element average.
std::vector<euler::Matrix3> element_dudv(const SolutionField& u);

/// Pointwise dissipation density a(x) = Theta^T A0 Theta at quadrature points,
/// (K nq), and its element integrals d_k.
struct DissipationDensity
{
  Eigen::VectorXd a;
  Eigen::VectorXd d;
};
DissipationDensity dissipation_density(const Discretization& disc, const Eigen::MatrixXd& theta,
                                       const std::vector<euler::Matrix3>& A0);

/// eps_k = reg(-min(0, delta_k), d_k).
Eigen::VectorXd viscosity_elementwise(const Eigen::VectorXd& delta, const Eigen::VectorXd& d,
                                      double tol = default_delta_tol);

/// eps(x_q) = reg(-min(0, delta_k), ||a||^2_k) a(x_q), per quadrature point.
Eigen::VectorXd viscosity_subcell(const Discretization& disc, const Eigen::VectorXd& delta,
                                  const Eigen::VectorXd& a, double tol = default_delta_tol);

/// Viscous term of the BR-1 discretization for a coefficient given per
/// quadrature point (K nq). The boundary faces of a non-periodic mesh carry
/// no viscous flux.
Eigen::MatrixXd gvisc_br1(const Discretization& disc, const Eigen::VectorXd& eps_quad,
                          const Eigen::MatrixXd& theta, const std::vector<euler::Matrix3>& A0);

/// Local entropy corrections. Each returns the rhs contribution and the
/// coefficient used on each element. The mean-value direction A0 (v_h - mean)
/// is divided by J^2 times the second moment of the volume rule, which makes
/// both corrections coincide for N = 1.
struct LocalCorrection
{
  Eigen::MatrixXd rhs;
  Eigen::VectorXd eps;
  Eigen::VectorXd dissipation; ///< per-element entropy dissipation divided by eps
};
LocalCorrection local_correction_mv(const SolutionField& u, const EntropyProjection& proj,
                                    const Eigen::VectorXd& delta, double tol = default_delta_tol);
LocalCorrection local_correction_deriv(const SolutionField& u, const EntropyProjection& proj,
                                       const Eigen::VectorXd& delta, double tol = default_delta_tol);

} // namespace ecav
