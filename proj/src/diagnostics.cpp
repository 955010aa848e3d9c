#include "ecav/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace ecav {

namespace {

template <class Integrand>
double integrate_difference(const SolutionField& u, int points, Integrand&& g)
{
  const auto& ops = *u.disc.ops;
  const auto& mesh = *u.disc.mesh;
  const int np = u.disc.np();
  const auto rule = gauss_legendre(points > 0 ? points : 2 * ops.degree + 4);
  const Eigen::VectorXd r = Eigen::Map<const Eigen::VectorXd>(rule.points.data(), rule.size());
  const Eigen::MatrixXd V = ops.basis_at(r);
  double total = 0.0;
  for (int k = 0; k < u.disc.num_elements(); ++k)
  {
    const Eigen::MatrixXd vals = V * u.coeffs.middleRows(k * np, np);
    for (Eigen::Index i = 0; i < r.size(); ++i)
      total += rule.weights[i] * g(vals.row(i).transpose(), mesh.to_physical(k, r(i)));
  }
  return mesh.jacobian * total;
}

} // namespace

double l2_error(const SolutionField& u, const ExactSolution& exact, double t, int points)
{
  return std::sqrt(integrate_difference(u, points, [&](const euler::State& uh, double x) {
    return (uh - exact(x, t)).squaredNorm();
  }));
}

double l1_density_error(const SolutionField& u, const ExactSolution& exact, double t, int points)
{
  return integrate_difference(u, points, [&](const euler::State& uh, double x) {
    return std::abs(uh(0) - exact(x, t)(0));
  });
}

double least_squares_slope(const std::vector<double>& h, const std::vector<double>& error, int last)
{
  std::vector<double> x;
  std::vector<double> y;
  const size_t start = (last > 0 && h.size() > static_cast<size_t>(last)) ? h.size() - last : 0;
  for (size_t i = start; i < h.size(); ++i)
  {
    if (error[i] > 0.0 && std::isfinite(error[i]))
    {
      x.push_back(std::log(h[i]));
      y.push_back(std::log(error[i]));
    }
  }
  if (x.size() < 2)
    return std::numeric_limits<double>::quiet_NaN();
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i)
  {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void ConvergenceTable::finalize()
{
  std::stable_sort(rows.begin(), rows.end(), [](const ConvergenceRow& a, const ConvergenceRow& b) {
    return a.N != b.N ? a.N < b.N : a.h > b.h;
  });
  for (size_t i = 0; i < rows.size(); ++i)
  {
    rows[i].rate = std::numeric_limits<double>::quiet_NaN();
    if (i > 0 && rows[i - 1].N == rows[i].N && rows[i].status == "ok" && rows[i - 1].status == "ok")
      rows[i].rate = std::log(rows[i - 1].error / rows[i].error) / std::log(rows[i - 1].h / rows[i].h);
  }
}

double ConvergenceTable::slope(int N, int last) const
{
  std::vector<double> h;
  std::vector<double> e;
  for (const auto& r : rows)
  {
    if (r.N == N && r.status == "ok")
    {
      h.push_back(r.h);
      e.push_back(r.error);
    }
  }
  return least_squares_slope(h, e, last);
}

SpectrumReport linearized_spectrum(const std::function<Eigen::MatrixXd(const Eigen::MatrixXd&)>& rhs,
                                   const Eigen::MatrixXd& u)
{
  const Eigen::Index n = u.size();
  Eigen::MatrixXd J(n, n);
  const double root_eps = std::sqrt(std::numeric_limits<double>::epsilon());
  Eigen::MatrixXd up = u;
  for (Eigen::Index j = 0; j < n; ++j)
  {
    const double orig = u.data()[j];
    const double step = root_eps * (1.0 + std::abs(orig));
    up.data()[j] = orig + step;
    const Eigen::MatrixXd fp = rhs(up);
    up.data()[j] = orig - step;
    const Eigen::MatrixXd fm = rhs(up);
    up.data()[j] = orig;
    J.col(j) = Eigen::Map<const Eigen::VectorXd>((fp - fm).eval().data(), n) / (2.0 * step);
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(J, false);
  SpectrumReport rep;
  rep.unknowns = static_cast<int>(n);
  rep.max_real = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i)
  {
    rep.eigenvalues.push_back(es.eigenvalues()(i));
    rep.max_real = std::max(rep.max_real, es.eigenvalues()(i).real());
  }
  return rep;
}

namespace {

double max_abs(const Eigen::VectorXd& v)
{
  return v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
}

std::vector<double> column(const std::vector<ResidualRow>& rows, double ResidualRow::*field)
{
  std::vector<double> out;
  for (const auto& r : rows)
    out.push_back(r.*field);
  return out;
}

} // namespace

double ResidualStudy::delta_slope(int last) const
{
  return least_squares_slope(column(rows, &ResidualRow::h), column(rows, &ResidualRow::max_delta), last);
}

double ResidualStudy::eps_slope(int last) const
{
  return least_squares_slope(column(rows, &ResidualRow::h), column(rows, &ResidualRow::max_eps), last);
}

double ResidualStudy::delta_uh_slope(int last) const
{
  return least_squares_slope(column(rows, &ResidualRow::h), column(rows, &ResidualRow::max_delta_uh), last);
}

ResidualStudy residual_convergence_study(int N, const std::vector<int>& Ks, const Problem& problem,
                                         BasisKind basis, const Quadrature1D& rule)
{
  ResidualStudy study;
  study.N = N;
  const auto ops = build_operators(N, basis, rule);
  for (int K : Ks)
  {
    const auto disc = make_discretization(make_mesh(problem.a, problem.b, K, problem.boundary), ops);
    const auto u = project_initial(disc, problem.initial);
    const auto proj = compute_entropy_projection(u);
    const Eigen::VectorXd delta = volume_entropy_residual(u, proj);
    const auto A0 = element_dudv(u);
    const auto dens = dissipation_density(disc, br1_gradient(disc, proj.v_coeffs, proj.v_face), A0);
    const Eigen::VectorXd eps = viscosity_elementwise(delta, dens.d);
    study.rows.push_back({K, disc.mesh->h, max_abs(delta), eps.size() ? eps.maxCoeff() : 0.0,
                          max_abs(second_inequality_residual(u, proj))});
  }
  return study;
}

Eigen::MatrixXd scalar_br1_gradient(const Discretization& disc, const Eigen::VectorXd& coeffs)
{
  const int K = disc.num_elements();
  const int np = disc.np();
  Eigen::MatrixXd v(K * np, 3);
  v.colwise() = coeffs;
  Eigen::MatrixXd vf(2 * K, 3);
  for (int k = 0; k < K; ++k)
    vf.middleRows(2 * k, 2) = disc.ops->Vf * v.middleRows(k * np, np);
  return br1_gradient(disc, v, vf);
}

NullspaceReport gradient_nullspace(const Discretization& disc, double tol)
{
  const int n = disc.num_elements() * disc.np();
  Eigen::MatrixXd G(n, n);
  for (int j = 0; j < n; ++j)
    G.col(j) = scalar_br1_gradient(disc, Eigen::VectorXd::Unit(n, j)).col(0);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(G, Eigen::ComputeFullV);
  NullspaceReport rep;
  rep.singular_values = svd.singularValues();
  const double smax = rep.singular_values.size() ? rep.singular_values(0) : 0.0;
  std::vector<int> null_cols;
  for (int i = 0; i < n; ++i)
    if (rep.singular_values(i) <= tol * std::max(smax, 1.0))
      null_cols.push_back(i);
  rep.dimension = static_cast<int>(null_cols.size());
  rep.modes.resize(n, rep.dimension);
  for (int c = 0; c < rep.dimension; ++c)
    rep.modes.col(c) = svd.matrixV().col(null_cols[c]);

  // Remove the constant function from the null space.
  Eigen::VectorXd one(n);
  for (int k = 0; k < disc.num_elements(); ++k)
    one.segment(k * disc.np(), disc.np()) = disc.ops->constant_coefficients();
  one.normalize();
  Eigen::MatrixXd rest = rep.modes - one * (one.transpose() * rep.modes);
  if (rest.cols() > 0)
  {
    Eigen::JacobiSVD<Eigen::MatrixXd> r(rest, Eigen::ComputeThinU);
    for (Eigen::Index i = 0; i < r.singularValues().size(); ++i)
      if (r.singularValues()(i) > 1e-8)
        ++rep.nonconstant_dimension;
    if (rep.nonconstant_dimension > 0)
      rep.nonconstant_mode = r.matrixU().col(0);
  }
  return rep;
}

bool EntropyHistory::non_increasing(double tol) const
{
  return max_increase() <= tol;
}

double EntropyHistory::max_increase() const
{
  double worst = -std::numeric_limits<double>::infinity();
  for (size_t i = 1; i < rows.size(); ++i)
    worst = std::max(worst, rows[i].entropy_plus_boundary - rows[i - 1].entropy_plus_boundary);
  return worst;
}

double EntropyHistory::max_relative_eq22() const
{
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& r : rows)
    worst = std::max(worst, r.max_eq22_relative);
  return worst;
}

} // namespace ecav
