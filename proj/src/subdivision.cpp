#include "edgewise/subdivision.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace edgewise {

int LatticeVertex::r() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<int> LatticeVertex::prefix_sums() const {
  std::vector<int> sums(parts.size());
  std::partial_sum(parts.begin(), parts.end(), sums.begin());
  return sums;
}

Face LatticeVertex::support() const {
  Face s;
  for (int j = 0; j < n(); ++j)
    if (parts[j] > 0) s.push_back(j);
  return s;
}

std::string LatticeVertex::str() const {
  std::ostringstream out;
  out << "(";
  for (int j = 0; j < n(); ++j) out << (j ? "," : "") << parts[j];
  out << ")";
  return out.str();
}

std::vector<LatticeVertex> omega_vertices(int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("omega_vertices: n and r must be >= 1");
  std::vector<LatticeVertex> out;
  std::vector<int> parts(n);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      parts[pos] = remaining;
      out.push_back(LatticeVertex{parts});
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      parts[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, r);
  return out;
}

bool is_esd_face(const std::vector<LatticeVertex>& g) {
  if (g.size() <= 1) return true;
  int n = g[0].n(), r = g[0].r();
  for (const LatticeVertex& u : g)
    if (u.n() != n || u.r() != r) throw std::invalid_argument("is_esd_face: mixed n or r");
  std::vector<std::vector<int>> sums;
  sums.reserve(g.size());
  for (const LatticeVertex& u : g) sums.push_back(u.prefix_sums());
  for (size_t a = 0; a < g.size(); ++a) {
    for (size_t b = a + 1; b < g.size(); ++b) {
      bool ge_ok = true, le_ok = true;
      for (int j = 0; j < n; ++j) {
        int d = sums[a][j] - sums[b][j];
        if (d < 0 || d > 1) ge_ok = false;
        if (d > 0 || d < -1) le_ok = false;
      }
      if (!ge_ok && !le_ok) return false;
    }
  }
  return true;
}

namespace {

// Facet chains of the subdivision, as lists of compositions: every facet
// starts at some vertex and applies the n-1 unit prefix-sum increments in
// some order, all intermediate prefix-sum vectors staying componentwise
// nondecreasing. There are exactly r^(n-1) valid chains.
std::vector<std::vector<std::vector<int>>> esd_facet_chains(int n, int r) {
  std::vector<std::vector<std::vector<int>>> chains;
  auto to_parts = [n](const std::vector<int>& sums) {
    std::vector<int> parts(n);
    for (int j = 0; j < n; ++j) parts[j] = sums[j] - (j ? sums[j - 1] : 0);
    return parts;
  };
  for (const LatticeVertex& start : omega_vertices(n, r)) {
    std::vector<int> order(n - 1);
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<int> sums = start.prefix_sums();
      std::vector<std::vector<int>> chain{start.parts};
      bool ok = true;
      for (int j : order) {
        if (sums[j] >= sums[j + 1]) {
          ok = false;
          break;
        }
        ++sums[j];
        chain.push_back(to_parts(sums));
      }
      if (ok) chains.push_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return chains;
}

}  // namespace

TriangulatedSimplex esd_simplex(int n, int r) {
  auto omega = omega_vertices(n, r);
  std::map<std::vector<int>, int> rank;
  for (size_t i = 0; i < omega.size(); ++i) rank.emplace(omega[i].parts, static_cast<int>(i));

  std::vector<Face> facets;
  for (const auto& chain : esd_facet_chains(n, r)) {
    Face f;
    for (const auto& parts : chain) f.push_back(rank.at(parts));
    facets.push_back(sorted_face(std::move(f)));
  }

  std::map<int, std::string> labels;
  std::map<int, Face> carriers;
  for (size_t i = 0; i < omega.size(); ++i) {
    labels.emplace(static_cast<int>(i), omega[i].str());
    carriers.emplace(static_cast<int>(i), omega[i].support());
  }

  Face base(n);
  std::iota(base.begin(), base.end(), 0);
  return TriangulatedSimplex(base, SimplicialComplex::from_facets(std::move(facets), std::move(labels)),
                             std::move(carriers));
}

SimplicialComplex esd_complex(const SimplicialComplex& base, int r) {
  if (r < 1) throw std::invalid_argument("esd_complex: r must be >= 1");
  if (base.is_void()) return base;
  const Face& verts = base.vertices();
  int n = static_cast<int>(verts.size());
  if (n == 0) return SimplicialComplex::empty_complex();

  auto omega = omega_vertices(n, r);
  std::map<std::vector<int>, int> rank;
  for (size_t i = 0; i < omega.size(); ++i) rank.emplace(omega[i].parts, static_cast<int>(i));

  // Position of each base vertex in the coordinate order.
  std::map<int, int> coord;
  for (int j = 0; j < n; ++j) coord.emplace(verts[j], j);

  std::vector<Face> facets;
  std::map<int, std::string> labels;
  for (const Face& facet : base.facets()) {
    int k = static_cast<int>(facet.size());
    if (k == 0) {
      facets.push_back({});
      continue;
    }
    for (const auto& chain : esd_facet_chains(k, r)) {
      Face f;
      for (const auto& parts : chain) {
        std::vector<int> full(n, 0);
        for (int j = 0; j < k; ++j) full[coord.at(facet[j])] = parts[j];
        int id = rank.at(full);
        labels.emplace(id, LatticeVertex{full}.str());
        f.push_back(id);
      }
      facets.push_back(sorted_face(std::move(f)));
    }
  }
  return SimplicialComplex::from_facets(std::move(facets), std::move(labels));
}

}  // namespace edgewise
