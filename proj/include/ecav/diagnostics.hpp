#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "ecav/problems.hpp"
#include "ecav/spatial_operator.hpp"

namespace ecav {

/// Global L2 error over all conserved variables, integrated with a Gauss rule
/// of `points` nodes per element (0 selects 2N + 4).
double l2_error(const SolutionField& u, const ExactSolution& exact, double t, int points = 0);

/// L1 error of the density, same quadrature convention.
double l1_density_error(const SolutionField& u, const ExactSolution& exact, double t, int points = 0);

/// Least-squares slope of log(error) against log(h) over the last `last` rows
/// (all rows when last <= 0). Rows with non-positive error are skipped.
double least_squares_slope(const std::vector<double>& h, const std::vector<double>& error, int last = 3);

struct ConvergenceRow
{
  int N = 0;
  int K = 0;
  double h = 0.0;
  double error = 0.0;
  double rate = 0.0; ///< log2(e_prev / e) against the previous row of the same N; NaN for the first
  std::string status = "ok";
};

struct ConvergenceTable
{
  std::vector<ConvergenceRow> rows;

  /// Sort by N then decreasing h, and fill incremental rates.
  void finalize();
  /// Least-squares slope for one degree over its finest `last` rows.
  [[nodiscard]] double slope(int N, int last = 3) const;
};

struct SpectrumReport
{
  std::vector<std::complex<double>> eigenvalues;
  double max_real = 0.0;
  int unknowns = 0;
};

/// Eigenvalues of the Jacobian of `rhs` at `u`, assembled column by column
/// with central differences of step sqrt(eps) (1 + |u_j|).
SpectrumReport linearized_spectrum(const std::function<Eigen::MatrixXd(const Eigen::MatrixXd&)>& rhs,
                                   const Eigen::MatrixXd& u);

/// Residual and viscosity coefficient of a fixed projected field.
struct ResidualRow
{
  int K = 0;
  double h = 0.0;
  double max_delta = 0.0; ///< max_k |delta_k|
  double max_eps = 0.0;   ///< max_k eps_k (elementwise)
  double max_delta_uh = 0.0; ///< max_k |delta'_k| with u_h face states
};

struct ResidualStudy
{
  int N = 0;
  std::vector<ResidualRow> rows;
  [[nodiscard]] double delta_slope(int last = 3) const;
  [[nodiscard]] double eps_slope(int last = 3) const;
  [[nodiscard]] double delta_uh_slope(int last = 3) const;
};

/// Project `problem.initial` onto meshes of each K and measure delta and eps.
ResidualStudy residual_convergence_study(int N, const std::vector<int>& Ks, const Problem& problem,
                                         BasisKind basis, const Quadrature1D& rule);

/// Null space of the global BR-1 gradient on a periodic mesh (one scalar
/// component), using a dense SVD.
struct NullspaceReport
{
  int dimension = 0;          ///< including the constant mode
  int nonconstant_dimension = 0;
  Eigen::MatrixXd modes;      ///< coefficient vectors spanning the null space, columns
  Eigen::VectorXd nonconstant_mode; ///< a unit null vector orthogonal to constants (empty if none)
  Eigen::VectorXd singular_values;
};
NullspaceReport gradient_nullspace(const Discretization& disc, double tol = 1e-10);

/// Per-element gradient of a scalar coefficient vector, replicated in three columns.
Eigen::MatrixXd scalar_br1_gradient(const Discretization& disc, const Eigen::VectorXd& coeffs);

struct HistoryRow
{
  double t = 0.0;
  double entropy = 0.0;
  double entropy_plus_boundary = 0.0;
  double max_eq22_rate = 0.0;   ///< max over the stages of the step ending at t
  double eq22_scale = 0.0;      ///< max over the same stages
  double max_eq22_relative = 0.0; ///< max over the same stages of eq22_rate / eq22_scale
  double max_entropy_rate = 0.0;
  double l2_error = 0.0;        ///< NaN when no exact solution is known
  double max_eps = 0.0;
};

struct EntropyHistory
{
  std::vector<HistoryRow> rows;

  /// True when entropy_plus_boundary never increases by more than `tol`
  /// between consecutive rows.
  [[nodiscard]] bool non_increasing(double tol) const;
  /// Largest increase of entropy_plus_boundary between consecutive rows.
  [[nodiscard]] double max_increase() const;
  /// Largest max_eq22_relative over all rows.
  [[nodiscard]] double max_relative_eq22() const;
};

} // namespace ecav
