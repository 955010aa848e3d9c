#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"

#include "ecav/dg.hpp"
#include "ecav/flux_diff.hpp"
#include "ecav/spatial_operator.hpp"

using namespace ecav;
using euler::State;

TEST_CASE("EC flux differencing conserves entropy semi-discretely")
{
  std::mt19937 rng(2);
  for (int N : {1, 3, 7})
  {
    const auto u = testing::density_wave(N, 8, BasisKind::nodal_lobatto, N >= 3 ? 0.98 : 0.5);
    const auto r = flux_diff_rhs(u, FluxKind::ec_ranocha);
    CHECK(std::abs(entropy_rhs_test(u, r)) < 1e-10);
    const auto w = testing::random_field(N, 5, BasisKind::nodal_lobatto, rng, 0.2);
    CHECK(std::abs(entropy_rhs_test(w, flux_diff_rhs(w, FluxKind::ec_ranocha))) < 1e-10);
  }
}

TEST_CASE("entropy-stable interface fluxes make flux differencing dissipative")
{
  std::mt19937 rng(3);
  for (auto kind : {FluxKind::llf_davis, FluxKind::hllc, FluxKind::ec_plus_matrix_dissipation})
  {
    const auto u = testing::random_field(3, 6, BasisKind::nodal_lobatto, rng, 0.2);
    CHECK(entropy_rhs_test(u, flux_diff_rhs(u, kind)) <= 1e-12);
  }
}

TEST_CASE("central volume flux reproduces the collocated weak form")
{
  std::mt19937 rng(4);
  const auto u = testing::random_field(4, 6, BasisKind::nodal_lobatto, rng, 0.2);
  for (auto kind : {FluxKind::llf_davis, FluxKind::hllc})
  {
    const auto a = flux_diff_rhs(u, kind, std::nullopt, VolumeFluxKind::central);
    const auto b = dg_rhs_weak(u, kind, std::nullopt, TraceMode::direct);
    CHECK((a.coeffs - b.coeffs).cwiseAbs().maxCoeff() < 1e-11 * std::max(1.0, b.coeffs.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("flux differencing conserves mass, momentum and energy")
{
  const auto u = testing::density_wave(3, 8, BasisKind::nodal_lobatto, 0.5);
  CHECK(conserved_totals(flux_diff_rhs(u, FluxKind::llf_davis)).norm() < 1e-12);
  CHECK(conserved_totals(flux_diff_rhs(u, FluxKind::ec_ranocha)).norm() < 1e-12);
}

TEST_CASE("free stream")
{
  const State q = euler::from_primitive(2.0, -0.3, 0.7);
  const auto disc = testing::make_disc(5, 3, BasisKind::nodal_lobatto);
  const auto u = project_initial(disc, [&](double) { return q; });
  CHECK(flux_diff_rhs(u, FluxKind::ec_ranocha).coeffs.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("spatial operator dispatches to flux differencing")
{
  const auto u = testing::density_wave(3, 8, BasisKind::nodal_lobatto, 0.98);
  SchemeOptions opt;
  opt.scheme = SchemeKind::flux_diff;
  opt.flux = FluxKind::ec_ranocha;
  opt.viscosity = ViscosityMode::none;
  StageDiagnostics d;
  const auto r = SpatialOperator(opt)(u, &d);
  CHECK((r.coeffs - flux_diff_rhs(u, FluxKind::ec_ranocha).coeffs).cwiseAbs().maxCoeff() == 0.0);
  CHECK(std::abs(d.entropy_rate) < 1e-10);
}

TEST_CASE("modal basis is rejected")
{
  const auto u = testing::density_wave(3, 4, BasisKind::modal_gauss, 0.5);
  CHECK_THROWS_AS(flux_diff_rhs(u, FluxKind::ec_ranocha), std::invalid_argument);
}
