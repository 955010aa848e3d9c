#include "ecav/mesh.hpp"

#include <stdexcept>

namespace ecav {

const char* to_string(BoundaryMode mode)
{
  return mode == BoundaryMode::periodic ? "periodic" : "dirichlet_ghost";
}

Mesh1D make_mesh(double a, double b, int K, BoundaryMode bc)
{
  if (!(a < b))
    throw std::invalid_argument("make_mesh: require a < b");
  if (K < 1)
    throw std::invalid_argument("make_mesh: require K >= 1");
  Mesh1D mesh;
  mesh.a = a;
  mesh.b = b;
  mesh.num_elements = K;
  mesh.h = (b - a) / K;
  mesh.jacobian = 0.5 * mesh.h;
  mesh.boundary = bc;
  mesh.left_neighbor.resize(K);
  mesh.right_neighbor.resize(K);
  for (int k = 0; k < K; ++k)
  {
    mesh.left_neighbor[k] = k - 1;
    mesh.right_neighbor[k] = k + 1 < K ? k + 1 : -1;
  }
  if (bc == BoundaryMode::periodic)
  {
    mesh.left_neighbor[0] = K - 1;
    mesh.right_neighbor[K - 1] = 0;
  }
  return mesh;
}

} // namespace ecav
