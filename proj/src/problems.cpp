#include "ecav/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ecav/riemann.hpp"

namespace ecav {

using euler::from_primitive;
using euler::State;
using std::numbers::pi;

const char* to_string(ProblemKind kind)
{
  switch (kind)
  {
    case ProblemKind::density_wave: return "density_wave";
    case ProblemKind::modified_sod: return "modified_sod";
    case ProblemKind::modified_sod_near_vacuum: return "modified_sod_near_vacuum";
    case ProblemKind::shu_osher: return "shu_osher";
    case ProblemKind::smooth_field: return "smooth_field";
    case ProblemKind::custom: return "custom";
  }
  return "?";
}

ProblemKind problem_kind_from_string(std::string_view name)
{
  for (auto k : {ProblemKind::density_wave, ProblemKind::modified_sod, ProblemKind::modified_sod_near_vacuum,
                 ProblemKind::shu_osher, ProblemKind::smooth_field, ProblemKind::custom})
    if (name == to_string(k))
      return k;
  throw std::invalid_argument("unknown problem '" + std::string(name) + "'");
}

namespace {

Problem riemann_problem(ProblemKind kind, euler::Primitive L, euler::Primitive R, double x0, double a, double b,
                        double t_final)
{
  Problem p;
  p.kind = kind;
  p.a = a;
  p.b = b;
  p.boundary = BoundaryMode::dirichlet_ghost;
  p.default_t_final = t_final;
  const State uL = from_primitive(L);
  const State uR = from_primitive(R);
  p.initial = [=](double x) { return x < x0 ? uL : uR; };
  p.ghosts = GhostStates{uL, uR};
  try
  {
    const auto solver = std::make_shared<ExactRiemann>(L, R);
    p.exact = [solver, x0, uL, uR](double x, double t) {
      if (t <= 0.0)
        return x < x0 ? uL : uR;
      return solver->state((x - x0) / t);
    };
  }
  catch (const UnsupportedRiemannProblem&)
  {
  }
  return p;
}

} // namespace

Problem make_problem(ProblemKind kind, const ProblemParams& params)
{
  switch (kind)
  {
    case ProblemKind::density_wave:
    {
      Problem p;
      p.kind = kind;
      p.default_t_final = 1.7;
      const double A = params.amplitude;
      p.exact = [A](double x, double t) {
        return from_primitive(1.0 + A * std::sin(2.0 * pi * (x - 0.1 * t)), 0.1, 10.0);
      };
      p.initial = [exact = p.exact](double x) { return exact(x, 0.0); };
      return p;
    }
    case ProblemKind::modified_sod:
      return riemann_problem(kind, {1.0, 0.75, 1.0}, {0.125, 0.0, 0.1}, 0.3, 0.0, 1.0, 0.2);
    case ProblemKind::modified_sod_near_vacuum:
      return riemann_problem(kind, {1.0, 0.75, 1.0}, {0.0125, 0.0, 0.01}, 0.3, 0.0, 1.0, 0.2);
    case ProblemKind::shu_osher:
    {
      Problem p;
      p.kind = kind;
      p.a = -5.0;
      p.b = 5.0;
      p.boundary = BoundaryMode::dirichlet_ghost;
      p.default_t_final = 1.8;
      const State uL = from_primitive(3.857143, 2.629369, 10.3333);
      p.initial = [uL](double x) {
        return x < -4.0 ? uL : from_primitive(1.0 + 0.2 * std::sin(5.0 * x), 0.0, 1.0);
      };
      p.ghosts = GhostStates{uL, p.initial(5.0)};
      return p;
    }
    case ProblemKind::smooth_field:
    {
      Problem p;
      p.kind = kind;
      p.a = -1.0;
      p.b = 1.0;
      p.initial = [](double x) {
        const double rho = 1.0 + 0.5 * std::sin(0.1 + pi * x);
        const double u = 0.5 * std::sin(0.2 + pi * x);
        return from_primitive(rho, u, std::pow(rho, euler::gamma));
      };
      return p;
    }
    case ProblemKind::custom:
    {
      if (!(params.a < params.b))
        throw std::invalid_argument("custom problem needs a < b");
      Problem p = riemann_problem(kind, params.left, params.right, params.x0, params.a, params.b, 0.2);
      if (params.periodic)
      {
        p.boundary = BoundaryMode::periodic;
        p.ghosts.reset();
        p.exact = nullptr;
      }
      return p;
    }
  }
  throw std::invalid_argument("unknown problem");
}

SolutionField project_initial(const Discretization& disc, const InitialCondition& f, int points)
{
  const auto& ops = *disc.ops;
  const auto& mesh = *disc.mesh;
  const int np = disc.np();
  const auto rule = gauss_legendre(points > 0 ? points : 2 * ops.degree + 4);
  Eigen::VectorXd r(rule.size());
  Eigen::VectorXd w(rule.size());
  for (size_t i = 0; i < rule.size(); ++i)
  {
    r(i) = rule.points[i];
    w(i) = rule.weights[i];
  }
  const Eigen::MatrixXd V = ops.basis_at(r);
  const Eigen::MatrixXd VtW = V.transpose() * w.asDiagonal();
  const Eigen::LDLT<Eigen::MatrixXd> mass(VtW * V);

  SolutionField u(disc);
  Eigen::MatrixXd vals(r.size(), 3);
  for (int k = 0; k < disc.num_elements(); ++k)
  {
    for (Eigen::Index i = 0; i < r.size(); ++i)
      vals.row(i) = f(mesh.to_physical(k, r(i))).transpose();
    u.coeffs.middleRows(k * np, np) = mass.solve(VtW * vals);
  }
  return u;
}

SolutionField interpolate_initial(const Discretization& disc, const InitialCondition& f)
{
  const auto& ops = *disc.ops;
  const auto& mesh = *disc.mesh;
  const int np = disc.np();
  const auto rule = ops.collocated ? ops.volume_rule : gauss_legendre(np);
  Eigen::VectorXd r = Eigen::Map<const Eigen::VectorXd>(rule.points.data(), rule.size());
  const Eigen::PartialPivLU<Eigen::MatrixXd> V(ops.basis_at(r));

  SolutionField u(disc);
  Eigen::MatrixXd vals(np, 3);
  for (int k = 0; k < disc.num_elements(); ++k)
  {
    for (int i = 0; i < np; ++i)
      vals.row(i) = f(mesh.to_physical(k, r(i))).transpose();
    u.coeffs.middleRows(k * np, np) = V.solve(vals);
  }
  return u;
}

} // namespace ecav
