#include "doctest.h"

#include "ecav/config.hpp"

using namespace ecav;

TEST_CASE("defaults and parsing")
{
  const auto c = parse_config(R"(# density wave study
problem.name = density_wave
problem.amplitude = 0.98   # trailing comment
discretization.basis = modal
discretization.N = 7
discretization.K = 4
scheme.viscosity = subcell
scheme.flux = hllc
time.final = 2.5
)");
  CHECK(c.problem == ProblemKind::density_wave);
  CHECK(c.problem_params.amplitude == 0.98);
  CHECK(c.basis == BasisKind::modal_gauss);
  CHECK(c.N == 7);
  CHECK(c.K == 4);
  CHECK(c.viscosity == ViscosityMode::subcell);
  CHECK(c.flux == FluxKind::hllc);
  CHECK(c.resolved_t_final() == 2.5);
  CHECK(RunConfig{}.resolved_t_final() == doctest::Approx(1.7));
}

TEST_CASE("round trip through text")
{
  RunConfig c;
  c.problem = ProblemKind::custom;
  c.problem_params.left = {2.0, -0.5, 3.0};
  c.problem_params.right = {0.25, 0.125, 0.3};
  c.problem_params.x0 = 0.4;
  c.quadrature = "gauss";
  c.quad_points = 9;
  c.basis = BasisKind::modal_gauss;
  c.time_mode = TimeMode::fixed_cfl;
  c.cfl = 0.05;
  c.delta_tol = 1e-12;
  c.out_dir = "some/dir";
  const std::string text = to_text(c);
  const auto d = parse_config(text);
  CHECK(to_text(d) == text);
  CHECK(d.problem_params.left.p == 3.0);
  CHECK(d.problem_params.right.u == 0.125);
  CHECK(d.cfl == 0.05);
}

TEST_CASE("errors carry line numbers and fields")
{
  try
  {
    (void)parse_config("problem.name = density_wave\n\ndiscretization.N = seven\n");
    FAIL("expected ConfigError");
  }
  catch (const ConfigError& e)
  {
    CHECK(e.line() == 3);
    CHECK(e.field() == "discretization.N");
  }
  CHECK_THROWS_AS(parse_config("nonsense line\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("discretization.bogus = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("scheme.flux = roe\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("discretization.N = 17\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("discretization.K = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("time.mode = fixed_cfl\ntime.cfl = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("problem.left = 1, 2\n"), ConfigError);
  // flux differencing needs the nodal basis
  CHECK_THROWS_AS(parse_config("scheme.kind = flux_diff\ndiscretization.basis = modal\n"), ConfigError);
}

TEST_CASE("result keys are ignored")
{
  const auto c = parse_config("discretization.K = 5\nresult.status = completed\nresult.t_reached = 0.2\n");
  CHECK(c.K == 5);
}

TEST_CASE("scheme options resolve the trace mode")
{
  RunConfig c;
  CHECK(c.scheme_options().trace == TraceMode::entropy_projection);
  c.viscosity = ViscosityMode::none;
  CHECK(c.scheme_options().trace == TraceMode::direct);
  c.trace = "entropy_projection";
  CHECK(c.scheme_options().trace == TraceMode::entropy_projection);
}

TEST_CASE("assignments keep file order")
{
  const auto a = parse_assignments("b = 1, 2\n# x\na = 3\n");
  REQUIRE(a.size() == 2);
  CHECK(a[0].first == "b");
  CHECK(a[0].second == "1, 2");
  CHECK(a[1].first == "a");
}
