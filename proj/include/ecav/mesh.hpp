#pragma once

#include <vector>

namespace ecav {

enum class BoundaryMode
{
  periodic,
  dirichlet_ghost, ///< exterior traces frozen at the initial boundary states
};

const char* to_string(BoundaryMode mode);

/// Uniform partition of [a, b] into K elements with affine maps
/// x = center_k + J r, r in [-1, 1].
struct Mesh1D
{
  double a = 0.0;
  double b = 1.0;
  int num_elements = 1;
  double h = 1.0;
  double jacobian = 0.5;
  BoundaryMode boundary = BoundaryMode::periodic;
  /// Neighbor element index, or -1 for a domain boundary.
  std::vector<int> left_neighbor;
  std::vector<int> right_neighbor;

  [[nodiscard]] double left_vertex(int k) const { return a + k * h; }
  [[nodiscard]] double center(int k) const { return a + (k + 0.5) * h; }
  [[nodiscard]] double to_physical(int k, double r) const { return center(k) + jacobian * r; }
  /// Faces 0..K; face k sits at the left vertex of element k. Under periodic
  /// connectivity face K is the same face as face 0.
  [[nodiscard]] int num_faces() const { return num_elements + 1; }
};

/// Throws std::invalid_argument when a >= b or K < 1.
Mesh1D make_mesh(double a, double b, int K, BoundaryMode bc);

} // namespace ecav
