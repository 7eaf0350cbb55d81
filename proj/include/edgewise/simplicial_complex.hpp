#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "edgewise/poly.hpp"

namespace edgewise {

/// A face: sorted, duplicate-free list of vertex ids.
using Face = std::vector<int>;

Face sorted_face(Face f);
bool face_subset(const Face& a, const Face& b);
Face face_union(const Face& a, const Face& b);

/// Face counts by dimension: counts[i] = number of (i-1)-dimensional faces,
/// starting from the empty face (counts[0] = 1 for nonempty complexes).
struct FVector {
  std::vector<mpz_class> counts;
  bool operator==(const FVector&) const = default;
  std::string str() const;
};

/// Abstract finite simplicial complex stored by its inclusion-maximal faces
/// (the facets); closure is implicit and never stored. The void complex (no
/// faces at all) and the empty complex {∅} are distinct values.
///
/// Complexes are immutable after construction; copies share their
/// representation. The full face list is materialized on first use and
/// cached with single-assignment semantics, so concurrent readers are safe.
class SimplicialComplex {
 public:
  /// The void complex.
  SimplicialComplex();

  /// Canonicalizes to the inclusion-maximal antichain; the vertex set is
  /// the union of the facets. Labels are optional display names.
  static SimplicialComplex from_facets(std::vector<Face> facets,
                                       std::map<int, std::string> labels = {});
  static SimplicialComplex empty_complex();  // {∅}
  static SimplicialComplex full_simplex(Face vertices);

  bool is_void() const;
  /// -1 for the empty complex {∅}; rejects the void complex.
  int dimension() const;
  bool is_pure() const;

  const std::vector<Face>& facets() const;
  const Face& vertices() const;
  const std::map<int, std::string>& labels() const;
  std::string label(int v) const;

  /// Face membership (a set is a face iff it lies in some facet).
  bool contains(const Face& f) const;

  /// All faces including the empty one, ordered by (size, lex). Cached.
  const std::vector<Face>& faces() const;

  /// Exact face counts; rejects the void complex.
  FVector f_vector() const;

  /// Sum of f_(i-1) x^i (1-x)^(d-i) over 0 <= i <= d, where d-1 is the
  /// dimension. Rejects the void complex; the empty complex has h = 1.
  IntPolynomial h_polynomial() const;

  /// True iff every set of vertices pairwise joined by edges is a face;
  /// equivalently, every minimal non-face has exactly two elements.
  bool is_flag() const;

  /// Adds apex to every face; apex must not already be a vertex.
  SimplicialComplex cone(int apex) const;

  /// {G \ f : f ⊆ G ∈ Δ}; f must be a face.
  SimplicialComplex link(const Face& f) const;

  /// Removes the faces containing the edge e = {a, b} and adds F ∪ {v},
  /// F ∪ {v, a}, F ∪ {v, b} for every F in the link of e. The edge must be
  /// a face and v must be fresh.
  SimplicialComplex stellar_subdivide_edge(const Face& e, int new_vertex) const;

  /// Order complex of the poset of nonempty faces: one vertex per nonempty
  /// face, one face per chain under inclusion. Rejects the void complex.
  SimplicialComplex barycentric_subdivision() const;

  /// Subcomplex induced on the given vertices.
  SimplicialComplex induced(const Face& verts) const;

  /// Structural equality on facet sets; labels are ignored.
  bool operator==(const SimplicialComplex& o) const;

 private:
  struct Rep;
  explicit SimplicialComplex(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

}  // namespace edgewise
