#include "edgewise/triangulation.hpp"

#include <algorithm>
#include <stdexcept>

namespace edgewise {

namespace {

int fresh_vertex_id(const SimplicialComplex& cx) {
  return cx.vertices().empty() ? 0 : cx.vertices().back() + 1;
}

}  // namespace

TriangulatedSimplex::TriangulatedSimplex(Face base, SimplicialComplex complex,
                                         std::map<int, Face> carriers)
    : base_(sorted_face(std::move(base))), complex_(std::move(complex)) {
  std::map<int, int> singleton_count;
  for (int v : complex_.vertices()) {
    auto it = carriers.find(v);
    if (it == carriers.end() || it->second.empty())
      throw std::invalid_argument("TriangulatedSimplex: vertex without a nonempty carrier");
    Face c = sorted_face(it->second);
    if (!face_subset(c, base_))
      throw std::invalid_argument("TriangulatedSimplex: carrier outside the base");
    if (c.size() == 1) ++singleton_count[c[0]];
    carriers_.emplace(v, std::move(c));
  }
  for (int u : base_)
    if (singleton_count[u] != 1)
      throw std::invalid_argument(
          "TriangulatedSimplex: each base vertex must be the carrier of exactly one vertex");
}

TriangulatedSimplex TriangulatedSimplex::trivial(Face base) {
  Face b = sorted_face(std::move(base));
  if (b.empty()) throw std::invalid_argument("trivial: base must be nonempty");
  std::map<int, Face> carriers;
  for (int u : b) carriers[u] = {u};
  return TriangulatedSimplex(b, SimplicialComplex::full_simplex(b), std::move(carriers));
}

const Face& TriangulatedSimplex::carrier(int vertex) const {
  auto it = carriers_.find(vertex);
  if (it == carriers_.end()) throw std::invalid_argument("carrier: unknown vertex");
  return it->second;
}

TriangulatedSimplex TriangulatedSimplex::restrict_to(const Face& base_face) const {
  Face f = sorted_face(base_face);
  if (!face_subset(f, base_)) throw std::invalid_argument("restrict_to: not a subset of the base");
  Face keep;
  std::map<int, Face> carriers;
  for (const auto& [v, c] : carriers_) {
    if (face_subset(c, f)) {
      keep.push_back(v);
      carriers.emplace(v, c);
    }
  }
  return TriangulatedSimplex(f, complex_.induced(keep), std::move(carriers));
}

IntPolynomial TriangulatedSimplex::local_h() const {
  int n = base_size();
  IntPolynomial total;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    Face f;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) f.push_back(base_[i]);
    IntPolynomial h = restrict_to(f).complex_.h_polynomial();
    if ((n - static_cast<int>(f.size())) % 2)
      total -= h;
    else
      total += h;
  }
  return total;
}

TriangulatedSimplex TriangulatedSimplex::cone_over(int new_base_vertex) const {
  if (std::binary_search(base_.begin(), base_.end(), new_base_vertex))
    throw std::invalid_argument("cone_over: base vertex already present");
  int apex = fresh_vertex_id(complex_);
  std::map<int, Face> carriers = carriers_;
  carriers[apex] = {new_base_vertex};
  return TriangulatedSimplex(face_union(base_, {new_base_vertex}), complex_.cone(apex),
                             std::move(carriers));
}

TriangulatedSimplex TriangulatedSimplex::stellar_lift(const Face& edge, int new_vertex) const {
  Face e = sorted_face(edge);
  if (e.size() != 2) throw std::invalid_argument("stellar_lift: not an edge");
  std::map<int, Face> carriers = carriers_;
  carriers[new_vertex] = face_union(carrier(e[0]), carrier(e[1]));
  return TriangulatedSimplex(base_, complex_.stellar_subdivide_edge(e, new_vertex),
                             std::move(carriers));
}

std::vector<int> TriangulatedSimplex::interior_vertices() const {
  std::vector<int> interior;
  for (const auto& [v, c] : carriers_)
    if (c == base_) interior.push_back(v);
  return interior;
}

TriangulatedSimplex TriangulatedSimplex::lift_interior_vertex(int p) const {
  auto interior = interior_vertices();
  if (std::find(interior.begin(), interior.end(), p) == interior.end())
    throw std::invalid_argument("lift_interior_vertex: not an interior vertex");
  int new_base = base_.empty() ? 0 : base_.back() + 1;
  int apex = fresh_vertex_id(complex_);
  TriangulatedSimplex coned = cone_over(new_base);
  return coned.stellar_lift({apex, p}, fresh_vertex_id(coned.complex_));
}

}  // namespace edgewise
