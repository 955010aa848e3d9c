#pragma once

#include <functional>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

namespace ecav {

using RhsFunction = std::function<Eigen::MatrixXd(const Eigen::MatrixXd& u, double t)>;

/// Four-stage third-order SSP Runge-Kutta method (SSP coefficient 2) with an
/// embedded second-order solution for error control.
struct Ssprk43
{
  static constexpr int stages = 4;
  static constexpr double c[4] = {0.0, 0.5, 1.0, 0.5};
  static constexpr double b[4] = {1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0, 0.5};
  static constexpr double b_embedded[4] = {0.25, 0.25, 0.25, 0.25};
};

/// Thrown when the step size collapses before the final time.
class IntegrationFailure : public std::runtime_error
{
public:
  IntegrationFailure(const std::string& what, double t_reached)
    : std::runtime_error(what), t_reached_(t_reached)
  {
  }
  [[nodiscard]] double t_reached() const { return t_reached_; }

private:
  double t_reached_;
};

/// One SSPRK43 step. `error` (if given) receives u_{n+1} minus the embedded
/// second-order solution.
Eigen::MatrixXd ssprk43_step(const RhsFunction& rhs, const Eigen::MatrixXd& u, double t, double dt,
                             Eigen::MatrixXd* error = nullptr);

struct AdaptiveOptions
{
  double abs_tol = 1e-8;
  double rel_tol = 1e-6;
  double safety = 0.9;
  double beta1 = 0.7 / 3.0; ///< PI gains for an order-2 error estimate
  double beta2 = 0.4 / 3.0;
  double fac_min = 0.2;
  double fac_max = 5.0;
  double dt_max = std::numeric_limits<double>::infinity();
  double dt_initial = 0.0; ///< 0 selects the starting step automatically
};

/// Weighted RMS norm of `err` with weights abs_tol + rel_tol max(|u0|, |u1|).
double error_norm(const Eigen::MatrixXd& err, const Eigen::MatrixXd& u0, const Eigen::MatrixXd& u1,
                  double abs_tol, double rel_tol);

/// Embedded-pair step-size controller with a PI update.
class TimeController
{
public:
  struct Result
  {
    bool accepted = false;
    double dt_used = 0.0;   ///< step size attempted
    double error = 0.0;     ///< scaled error norm of the attempt
  };

  TimeController(AdaptiveOptions options, double t_final);

  /// Attempt one step from (u, t). On acceptance u and t are advanced. The
  /// attempted step never passes t_final. Throws IntegrationFailure if dt
  /// drops below 1e-14 t_final.
  Result step(const RhsFunction& rhs, Eigen::MatrixXd& u, double& t);

  [[nodiscard]] double dt() const { return dt_; }
  [[nodiscard]] int accepted_steps() const { return accepted_; }
  [[nodiscard]] int rejected_steps() const { return rejected_; }
  [[nodiscard]] const AdaptiveOptions& options() const { return options_; }

private:
  double initial_dt(const RhsFunction& rhs, const Eigen::MatrixXd& u, double t) const;

  AdaptiveOptions options_;
  double t_final_;
  double dt_ = 0.0;
  double err_prev_ = 1.0;
  int accepted_ = 0;
  int rejected_ = 0;
};

struct IntegrationStats
{
  int accepted_steps = 0;
  int rejected_steps = 0;
  double t_reached = 0.0;
};

/// Integrate from t0 to t_final adaptively, calling `on_accept(t, u)` after
/// each accepted step.
IntegrationStats integrate_adaptive(const RhsFunction& rhs, Eigen::MatrixXd& u, double t0, double t_final,
                                    const AdaptiveOptions& options,
                                    const std::function<void(double, const Eigen::MatrixXd&)>& on_accept = {});

/// Integrate with steps from `dt_of(u)`, shortened to land on t_final.
/// Throws std::invalid_argument if a step size is not positive and finite.
IntegrationStats integrate_fixed(const RhsFunction& rhs, Eigen::MatrixXd& u, double t0, double t_final,
                                 const std::function<double(const Eigen::MatrixXd&)>& dt_of,
                                 const std::function<void(double, const Eigen::MatrixXd&)>& on_accept = {});

} // namespace ecav
