#pragma once

#include <string>
#include <vector>

#include "edgewise/simplicial_complex.hpp"
#include "edgewise/triangulation.hpp"

namespace edgewise {

/// A composition (i_1,...,i_n) of r into n nonnegative parts; the vertices
/// of the r-fold edgewise subdivision of the (n-1)-simplex.
struct LatticeVertex {
  std::vector<int> parts;

  int n() const { return static_cast<int>(parts.size()); }
  int r() const;

  /// Prefix sums (i_1, i_1+i_2, ..., i_1+...+i_n); the last entry is r.
  std::vector<int> prefix_sums() const;

  /// Zero-based coordinates with a positive part.
  Face support() const;

  std::string str() const;  // "(1,1,2)"

  auto operator<=>(const LatticeVertex&) const = default;
};

/// All compositions of r into n nonnegative parts, in lexicographic order;
/// there are binomial(n+r-1, n-1) of them. Requires n, r >= 1.
std::vector<LatticeVertex> omega_vertices(int n, int r);

/// True iff every pair u, v in the set satisfies the prefix-sum condition:
/// the componentwise difference of their prefix sums lies in {0,1}^n one
/// way or the other. All members must share n and r.
bool is_esd_face(const std::vector<LatticeVertex>& g);

/// The r-fold edgewise subdivision of the simplex on base vertices
/// {0,...,n-1}: the complex on the compositions of r whose faces are the
/// is_esd_face sets. Vertex ids are lexicographic ranks; each vertex
/// carries its support. Has exactly r^(n-1) facets, all of n vertices.
TriangulatedSimplex esd_simplex(int n, int r);

/// The r-fold edgewise subdivision of an arbitrary complex, with the
/// coordinate order given by the sorted vertex ids: vertices are the
/// compositions whose support is a face, and a set is a face iff the union
/// of supports is a face and the prefix-sum condition holds pairwise. The
/// restriction to each face F is isomorphic to esd_simplex(|F|, r).
SimplicialComplex esd_complex(const SimplicialComplex& base, int r);

}  // namespace edgewise
