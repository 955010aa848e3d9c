#pragma once

#include <optional>

#include "ecav/field.hpp"
#include "ecav/fluxes.hpp"

namespace ecav {

/// How interface traces are formed: through the entropy projection
/// u(Pi_N v(u_h)) or directly from u_h.
enum class TraceMode
{
  entropy_projection,
  direct,
};

const char* to_string(TraceMode mode);

/// Exterior states imposed at the two ends of a non-periodic domain.
struct GhostStates
{
  euler::State left;
  euler::State right;
};

/// Projected entropy variables v_h = Pi_N v(u_h) and the states built from
/// them. Face rows are ordered (element k, r = -1) -> 2k, (k, r = +1) -> 2k+1.
struct EntropyProjection
{
  Eigen::MatrixXd u_quad;   ///< u_h at quadrature points, (K nq) x 3
  Eigen::MatrixXd v_coeffs; ///< coefficients of v_h, (K np) x 3
  Eigen::MatrixXd v_quad;   ///< v_h at quadrature points, (K nq) x 3
  Eigen::MatrixXd v_face;   ///< v_h at element faces, 2K x 3
  Eigen::MatrixXd u_face;   ///< entropy-projected states u(v_h) at faces, 2K x 3
  Eigen::MatrixXd uh_face;  ///< u_h itself at faces, 2K x 3
};

/// Throws euler::AdmissibilityError (with location) if u_h or a projected
/// face state is inadmissible. For the Lobatto variant the face states are
/// copied from u_h, since the projection reduces to nodal evaluation.
EntropyProjection compute_entropy_projection(const SolutionField& u);

/// Interface traces used by the fluxes: projected or direct.
Eigen::MatrixXd face_traces(const SolutionField& u, const EntropyProjection& proj, TraceMode mode);

/// States on either side of face f (face f = left vertex of element f).
struct FaceStates
{
  euler::State left;
  euler::State right;
};
FaceStates face_states(const Mesh1D& mesh, const Eigen::MatrixXd& traces, int face,
                       const std::optional<GhostStates>& ghosts);

/// Ordered numerical flux at faces 0..K, (K+1) x 3.
Eigen::MatrixXd face_fluxes(const Mesh1D& mesh, const Eigen::MatrixXd& traces, FluxKind kind,
                            const std::optional<GhostStates>& ghosts);

/// Weak-form volume and surface terms given precomputed face fluxes.
Eigen::MatrixXd weak_form_terms(const SolutionField& u, const Eigen::MatrixXd& u_quad,
                                const Eigen::MatrixXd& fluxes);

/// du/dt of the weak form (f(u_h), dw/dx) - <f*_n, w> with fluxes evaluated
/// at the traces chosen by `mode`. `ghosts` is required for non-periodic meshes.
SolutionField dg_rhs_weak(const SolutionField& u, FluxKind kind,
                          const std::optional<GhostStates>& ghosts = std::nullopt,
                          TraceMode mode = TraceMode::entropy_projection);

/// Sum over elements of (S(u_h), 1).
double total_entropy(const SolutionField& u);

/// Per-element (rhs, Pi_N v(u_h)); equals d/dt (S(u_h), 1) on each element.
Eigen::VectorXd element_entropy_rhs_test(const SolutionField& rhs, const EntropyProjection& proj);
double entropy_rhs_test(const SolutionField& u, const SolutionField& rhs);

/// Element averages of u_h computed with the volume quadrature.
std::vector<euler::State> element_averages(const SolutionField& u);

/// Integrals of the conserved variables over the whole domain.
Eigen::Vector3d conserved_totals(const SolutionField& u);

} // namespace ecav
