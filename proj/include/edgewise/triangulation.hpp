#pragma once

#include <map>
#include <vector>

#include "edgewise/poly.hpp"
#include "edgewise/simplicial_complex.hpp"

namespace edgewise {

/// A triangulation of the abstract simplex on a base vertex set, together
/// with a carrier map: each vertex of the triangulation is assigned the
/// minimal face of the base simplex containing it. Carriers are the
/// combinatorial data that make restriction to a base face well defined.
///
/// Invariants, checked at construction: every vertex carries a nonempty
/// subset of the base, and each base vertex is the carrier of exactly one
/// vertex of the triangulation.
class TriangulatedSimplex {
 public:
  TriangulatedSimplex(Face base, SimplicialComplex complex, std::map<int, Face> carriers);

  /// The simplex triangulated by itself; each vertex carries itself.
  static TriangulatedSimplex trivial(Face base);

  const Face& base() const { return base_; }
  int base_size() const { return static_cast<int>(base_.size()); }
  const SimplicialComplex& complex() const { return complex_; }
  const std::map<int, Face>& carriers() const { return carriers_; }
  const Face& carrier(int vertex) const;

  /// Subcomplex on the vertices whose carrier lies inside the given base
  /// face, which triangulates that face. Restricting to the empty face
  /// yields the empty complex {∅}.
  TriangulatedSimplex restrict_to(const Face& base_face) const;

  /// Local h-polynomial: the signed sum of the h-polynomials of all 2^n
  /// restrictions, with sign (-1)^(n - |F|).
  IntPolynomial local_h() const;

  /// Cone over a fresh base vertex; the apex carries exactly that vertex,
  /// all other carriers are unchanged.
  TriangulatedSimplex cone_over(int new_base_vertex) const;

  /// Stellar subdivision on an edge of the triangulation; the new vertex
  /// carries the union of the carriers of the edge's endpoints.
  TriangulatedSimplex stellar_lift(const Face& edge, int new_vertex) const;

  /// Vertices whose carrier is the whole base.
  std::vector<int> interior_vertices() const;

  /// Cone over a fresh base vertex followed by stellar subdivision of the
  /// edge joining the apex to the given interior vertex p. The result
  /// triangulates a simplex one dimension up and satisfies
  /// local_h() = x * h(link(p)).
  TriangulatedSimplex lift_interior_vertex(int p) const;

  bool operator==(const TriangulatedSimplex& o) const = default;

 private:
  Face base_;
  SimplicialComplex complex_;
  std::map<int, Face> carriers_;
};

}  // namespace edgewise
