#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "ecav/dg.hpp"

namespace ecav {

enum class ProblemKind
{
  density_wave,             ///< rho = 1 + A sin(2 pi x), u = 0.1, p = 10 on [0, 1], periodic
  modified_sod,             ///< (1, .75, 1) | (.125, 0, .1) at x = 0.3 on [0, 1]
  modified_sod_near_vacuum, ///< (1, .75, 1) | (.0125, 0, .01)
  shu_osher,                ///< sine-shock interaction on [-5, 5]
  smooth_field,             ///< smooth periodic field on [-1, 1] used for residual studies
  custom,                   ///< user Riemann data
};

const char* to_string(ProblemKind kind);
ProblemKind problem_kind_from_string(std::string_view name);

using InitialCondition = std::function<euler::State(double x)>;
using ExactSolution = std::function<euler::State(double x, double t)>;

/// Parameters only some problems read.
struct ProblemParams
{
  double amplitude = 0.5;
  euler::Primitive left{1.0, 0.0, 1.0};
  euler::Primitive right{0.125, 0.0, 0.1};
  double x0 = 0.5;
  double a = 0.0;
  double b = 1.0;
  bool periodic = false;
};

struct Problem
{
  ProblemKind kind = ProblemKind::density_wave;
  double a = 0.0;
  double b = 1.0;
  BoundaryMode boundary = BoundaryMode::periodic;
  double default_t_final = 1.0;
  InitialCondition initial;
  /// Available for the density wave and Riemann problems.
  ExactSolution exact;
  /// Frozen initial boundary states; empty for periodic problems.
  std::optional<GhostStates> ghosts;
};

Problem make_problem(ProblemKind kind, const ProblemParams& params = {});

/// L2 projection using a Gauss rule with `points` nodes per element
/// (0 selects 2N + 4).
SolutionField project_initial(const Discretization& disc, const InitialCondition& f, int points = 0);

/// Interpolation at the Lobatto nodes (nodal) or at N+1 Gauss nodes (modal).
SolutionField interpolate_initial(const Discretization& disc, const InitialCondition& f);

} // namespace ecav
