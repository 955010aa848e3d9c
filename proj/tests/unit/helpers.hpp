#pragma once

#include <random>

#include "ecav/problems.hpp"

namespace testing {

/// Admissible states with rho in [0.1, 5], |u| <= 3, p in [0.1, 10].
inline ecav::euler::State random_state(std::mt19937& rng)
{
  std::uniform_real_distribution<double> rho(0.1, 5.0);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> p(0.1, 10.0);
  const double r = rho(rng);
  const double v = u(rng);
  const double q = p(rng);
  return ecav::euler::from_primitive(r, v, q);
}

inline ecav::Discretization make_disc(int N, int K, ecav::BasisKind basis, double a = 0.0, double b = 1.0,
                                      ecav::BoundaryMode bc = ecav::BoundaryMode::periodic)
{
  return ecav::make_discretization(ecav::make_mesh(a, b, K, bc), ecav::build_operators(N, basis));
}

/// Density wave projected onto a periodic mesh of [0, 1].
inline ecav::SolutionField density_wave(int N, int K, ecav::BasisKind basis, double amplitude)
{
  ecav::ProblemParams params;
  params.amplitude = amplitude;
  const auto p = ecav::make_problem(ecav::ProblemKind::density_wave, params);
  return ecav::project_initial(make_disc(N, K, basis), p.initial);
}

/// Smooth field with random coefficient perturbations of relative size `noise`.
inline ecav::SolutionField random_field(int N, int K, ecav::BasisKind basis, std::mt19937& rng, double noise = 0.2)
{
  auto u = density_wave(N, K, basis, 0.3);
  std::uniform_real_distribution<double> d(-noise, noise);
  for (int k = 0; k < K; ++k)
  {
    for (int i = 0; i < u.disc.np(); ++i)
    {
      // Perturb only higher modes for the modal basis so averages stay admissible.
      const double scale = (basis == ecav::BasisKind::modal_gauss && i == 0) ? 0.0 : 1.0;
      u.coeffs(k * u.disc.np() + i, 0) *= 1.0 + scale * d(rng);
      u.coeffs(k * u.disc.np() + i, 1) += scale * d(rng);
      u.coeffs(k * u.disc.np() + i, 2) *= 1.0 + scale * d(rng);
    }
  }
  return u;
}

} // namespace testing
