#include "edgewise/simplicial_complex.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace edgewise {

Face sorted_face(Face f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

bool face_subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Face face_union(const Face& a, const Face& b) {
  Face u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

std::string FVector::str() const {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < counts.size(); ++i) out << (i ? "," : "") << counts[i].get_str();
  out << ")";
  return out.str();
}

namespace {

bool size_lex_less(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct FaceHash {
  size_t operator()(const Face& f) const {
    size_t h = 1469598103934665603ull;
    for (int v : f) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

struct SimplicialComplex::Rep {
  std::vector<Face> facets;  // canonical antichain, sorted by (size, lex)
  Face vertices;             // sorted union of the facets
  std::map<int, std::string> labels;

  mutable std::once_flag faces_once;
  mutable std::vector<Face> all_faces;

  const std::vector<Face>& faces() const {
    std::call_once(faces_once, [this] {
      std::unordered_set<Face, FaceHash> seen;
      for (const Face& facet : facets) {
        size_t k = facet.size();
        for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
          Face f;
          for (size_t i = 0; i < k; ++i)
            if (mask >> i & 1) f.push_back(facet[i]);
          seen.insert(std::move(f));
        }
      }
      all_faces.assign(seen.begin(), seen.end());
      std::sort(all_faces.begin(), all_faces.end(), size_lex_less);
    });
    return all_faces;
  }
};

SimplicialComplex::SimplicialComplex() : rep_(std::make_shared<Rep>()) {}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> facets,
                                                 std::map<int, std::string> labels) {
  for (Face& f : facets) f = sorted_face(std::move(f));
  std::sort(facets.begin(), facets.end(), size_lex_less);
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  // Drop faces contained in a strictly larger one. Faces are grouped by
  // size, so only larger groups need checking; pure input needs no work.
  auto rep = std::make_shared<Rep>();
  for (size_t i = 0; i < facets.size(); ++i) {
    bool maximal = true;
    for (size_t j = facets.size(); j-- > 0 && facets[j].size() > facets[i].size();) {
      if (face_subset(facets[i], facets[j])) {
        maximal = false;
        break;
      }
    }
    if (maximal) rep->facets.push_back(std::move(facets[i]));
  }

  Face verts;
  for (const Face& f : rep->facets) verts.insert(verts.end(), f.begin(), f.end());
  rep->vertices = sorted_face(std::move(verts));
  for (int v : rep->vertices) {
    auto it = labels.find(v);
    if (it != labels.end()) rep->labels.emplace(v, it->second);
  }
  return SimplicialComplex(std::move(rep));
}

SimplicialComplex SimplicialComplex::empty_complex() { return from_facets({Face{}}); }

SimplicialComplex SimplicialComplex::full_simplex(Face vertices) {
  return from_facets({sorted_face(std::move(vertices))});
}

bool SimplicialComplex::is_void() const { return rep_->facets.empty(); }

int SimplicialComplex::dimension() const {
  if (is_void()) throw std::invalid_argument("dimension: void complex");
  return static_cast<int>(rep_->facets.back().size()) - 1;
}

bool SimplicialComplex::is_pure() const {
  if (is_void()) return true;
  return rep_->facets.front().size() == rep_->facets.back().size();
}

const std::vector<Face>& SimplicialComplex::facets() const { return rep_->facets; }
const Face& SimplicialComplex::vertices() const { return rep_->vertices; }
const std::map<int, std::string>& SimplicialComplex::labels() const { return rep_->labels; }

std::string SimplicialComplex::label(int v) const {
  auto it = rep_->labels.find(v);
  return it != rep_->labels.end() ? it->second : std::to_string(v);
}

bool SimplicialComplex::contains(const Face& f) const {
  for (const Face& facet : rep_->facets)
    if (face_subset(f, facet)) return true;
  return false;
}

const std::vector<Face>& SimplicialComplex::faces() const { return rep_->faces(); }

FVector SimplicialComplex::f_vector() const {
  if (is_void()) throw std::invalid_argument("f_vector: void complex");
  FVector fv;
  fv.counts.assign(dimension() + 2, 0);
  for (const Face& f : faces()) ++fv.counts[f.size()];
  return fv;
}

IntPolynomial SimplicialComplex::h_polynomial() const {
  FVector fv = f_vector();
  int d = dimension() + 1;
  IntPolynomial h;
  for (int i = 0; i <= d; ++i)
    h += fv.counts[i] * (IntPolynomial::monomial(1, i) * pow(IntPolynomial{1, -1}, d - i));
  return h;
}

bool SimplicialComplex::is_flag() const {
  if (is_void()) return true;
  const Face& verts = rep_->vertices;
  std::map<int, int> index;
  for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);

  std::vector<std::vector<bool>> adj(verts.size(), std::vector<bool>(verts.size(), false));
  for (const Face& f : faces())
    if (f.size() == 2) adj[index[f[0]]][index[f[1]]] = adj[index[f[1]]][index[f[0]]] = true;

  // Flag iff adding any vertex joined to all of a face yields a face again;
  // by induction this makes every clique a face.
  const std::vector<Face>& all = faces();
  for (const Face& f : all) {
    for (size_t vi = 0; vi < verts.size(); ++vi) {
      int v = verts[vi];
      if (std::binary_search(f.begin(), f.end(), v)) continue;
      bool joined = true;
      for (int u : f)
        if (!adj[vi][index[u]]) {
          joined = false;
          break;
        }
      if (!joined) continue;
      Face g = sorted_face(face_union(f, {v}));
      if (!std::binary_search(all.begin(), all.end(), g, size_lex_less)) return false;
    }
  }
  return true;
}

SimplicialComplex SimplicialComplex::cone(int apex) const {
  if (std::binary_search(rep_->vertices.begin(), rep_->vertices.end(), apex))
    throw std::invalid_argument("cone: apex is already a vertex");
  std::vector<Face> fs;
  fs.reserve(rep_->facets.size());
  for (const Face& f : rep_->facets) fs.push_back(face_union(f, {apex}));
  return from_facets(std::move(fs), rep_->labels);
}

SimplicialComplex SimplicialComplex::link(const Face& f) const {
  Face key = sorted_face(f);
  if (!contains(key)) throw std::invalid_argument("link: not a face");
  std::vector<Face> fs;
  for (const Face& facet : rep_->facets) {
    if (!face_subset(key, facet)) continue;
    Face g;
    std::set_difference(facet.begin(), facet.end(), key.begin(), key.end(),
                        std::back_inserter(g));
    fs.push_back(std::move(g));
  }
  return from_facets(std::move(fs), rep_->labels);
}

SimplicialComplex SimplicialComplex::stellar_subdivide_edge(const Face& e, int new_vertex) const {
  Face edge = sorted_face(e);
  if (edge.size() != 2 || !contains(edge))
    throw std::invalid_argument("stellar_subdivide_edge: not an edge of the complex");
  if (std::binary_search(rep_->vertices.begin(), rep_->vertices.end(), new_vertex))
    throw std::invalid_argument("stellar_subdivide_edge: new vertex already present");

  std::vector<Face> fs;
  for (const Face& facet : rep_->facets) {
    if (!face_subset(edge, facet)) {
      fs.push_back(facet);
      continue;
    }
    for (int drop : edge) {
      Face g;
      std::copy_if(facet.begin(), facet.end(), std::back_inserter(g),
                   [&](int v) { return v != drop; });
      fs.push_back(face_union(g, {new_vertex}));
    }
  }
  return from_facets(std::move(fs), rep_->labels);
}

SimplicialComplex SimplicialComplex::barycentric_subdivision() const {
  if (is_void()) throw std::invalid_argument("barycentric_subdivision: void complex");

  std::map<Face, int> ids;
  std::map<int, std::string> labels;
  for (const Face& f : faces()) {
    if (f.empty()) continue;
    int id = static_cast<int>(ids.size());
    ids.emplace(f, id);
    std::ostringstream name;
    name << "{";
    for (size_t i = 0; i < f.size(); ++i) name << (i ? "," : "") << label(f[i]);
    name << "}";
    labels.emplace(id, name.str());
  }
  if (ids.empty()) return empty_complex();

  // Maximal chains: one per (facet, ordering of its vertices).
  std::vector<Face> chains;
  for (const Face& facet : rep_->facets) {
    Face perm = facet;
    std::sort(perm.begin(), perm.end());
    do {
      Face chain;
      Face prefix;
      for (int v : perm) {
        prefix = face_union(prefix, {v});
        chain.push_back(ids.at(prefix));
      }
      chains.push_back(sorted_face(std::move(chain)));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return from_facets(std::move(chains), std::move(labels));
}

SimplicialComplex SimplicialComplex::induced(const Face& verts) const {
  Face keep = sorted_face(verts);
  std::vector<Face> fs;
  fs.reserve(rep_->facets.size());
  for (const Face& facet : rep_->facets) {
    Face g;
    std::set_intersection(facet.begin(), facet.end(), keep.begin(), keep.end(),
                          std::back_inserter(g));
    fs.push_back(std::move(g));
  }
  return from_facets(std::move(fs), rep_->labels);
}

bool SimplicialComplex::operator==(const SimplicialComplex& o) const {
  return rep_ == o.rep_ || rep_->facets == o.rep_->facets;
}

}  // namespace edgewise
