#ifndef JORDAN_COHOMOLOGY_HPP
#define JORDAN_COHOMOLOGY_HPP

#include <vector>

#include "jordan/algebra.hpp"

namespace jordan {

/// Bilinear map J x J -> J as an n x n grid of values on basis pairs.
using BilinearMap = std::vector<std::vector<Element>>;

/// Coordinates of a symmetric bilinear map: index (pair(p, q), m) for p <= q.
std::size_t symmetric_coordinate_count(std::size_t n);
Vector symmetric_coordinates(const BilinearMap& h);
BilinearMap bilinear_from_coordinates(std::size_t n, const Vector& coords);

/// Algebra on J + J' (J' a copy of J, labels primed) with
/// (x, u)(y, v) = (xy, xv + uy + h(x, y)); the copy squares to zero.
Algebra null_extension(const Algebra& a, const BilinearMap& h);

/// h_mu(x, y) = mu(x) y + x mu(y) - mu(xy) for a linear map mu (matrix acting on coordinates).
BilinearMap coboundary(const Algebra& a, const Matrix& mu);

struct CocycleSpace {
  std::size_t z2_dim = 0;
  std::size_t b2_dim = 0;
  std::size_t h2_dim = 0;
  Subspace cocycles;      // in symmetric_coordinates
  Subspace coboundaries;  // in symmetric_coordinates
};

/// Z^2 = symmetric h whose null extension satisfies the linearised Jordan
/// identity; B^2 = image of mu -> h_mu; H^2 = Z^2 / B^2.
CocycleSpace cocycle_space(const Algebra& a);

}  // namespace jordan

#endif
