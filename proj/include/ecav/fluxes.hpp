#pragma once

#include <string_view>

#include "ecav/euler.hpp"

namespace ecav {

enum class FluxKind
{
  llf_davis,
  hllc,
  ec_ranocha,
  ec_plus_matrix_dissipation,
};

const char* to_string(FluxKind kind);
/// Throws std::invalid_argument for unknown names.
FluxKind flux_kind_from_string(std::string_view name);

/// Logarithmic mean (a - b) / (log a - log b), with a series expansion when
/// a and b are close.
double log_mean(double a, double b);

/// Numerical flux between an ordered pair of states: `left` lives at smaller x.
/// Consistent (F(u, u) = f(u)) and entropy stable in the sense
/// (v(right) - v(left))^T F <= psi(right) - psi(left).
euler::State numerical_flux(FluxKind kind, const euler::State& left, const euler::State& right);

/// Normal flux f*_n seen from an element: `inner` is the element's own trace,
/// `outer` its neighbor's, and n = +1 (right face) or -1 (left face). Skew
/// symmetric: interface_flux(k, a, b, n) = -interface_flux(k, b, a, -n).
euler::State interface_flux(FluxKind kind, const euler::State& inner, const euler::State& outer, int n);

/// Two-point entropy conservative volume flux (Ranocha): symmetric, consistent
/// and satisfying (v(right) - v(left))^T f = psi(right) - psi(left).
euler::State ec_volume_flux(const euler::State& uL, const euler::State& uR);

/// Central two-point flux (f(uL) + f(uR)) / 2.
euler::State central_volume_flux(const euler::State& uL, const euler::State& uR);

/// Entropy-scaled Roe-type dissipation matrix R |Lambda| S R^T at state u;
/// symmetric positive semi-definite, acts on entropy-variable jumps.
euler::Matrix3 matrix_dissipation(const euler::State& u);

} // namespace ecav
