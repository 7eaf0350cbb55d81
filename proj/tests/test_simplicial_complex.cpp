#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <set>

#include "edgewise/simplicial_complex.hpp"

using namespace edgewise;

namespace {

const SimplicialComplex kTriangleBoundary =
    SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}});

// Every clique of the 1-skeleton must be a face: checked by enumerating all
// vertex subsets. Usable up to ~8 vertices.
bool brute_force_flag(const SimplicialComplex& c) {
  const Face& verts = c.vertices();
  size_t n = verts.size();
  REQUIRE(n <= 10);
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    Face s;
    for (size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(verts[i]);
    bool clique = true;
    for (size_t a = 0; a < s.size() && clique; ++a)
      for (size_t b = a + 1; b < s.size() && clique; ++b)
        if (!c.contains({std::min(s[a], s[b]), std::max(s[a], s[b])})) clique = false;
    if (clique && !c.contains(s)) return false;
  }
  return true;
}

SimplicialComplex random_complex(std::mt19937& rng, int max_vertex) {
  std::uniform_int_distribution<int> facet_count(1, 6);
  std::uniform_int_distribution<int> facet_size(1, 4);
  std::uniform_int_distribution<int> vertex(0, max_vertex);
  std::vector<Face> facets;
  for (int i = facet_count(rng); i > 0; --i) {
    Face f;
    for (int j = facet_size(rng); j > 0; --j) f.push_back(vertex(rng));
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

// Clique complex of a graph on {0,...,n-1} given by an edge mask.
SimplicialComplex clique_complex(int n, uint64_t edge_mask) {
  auto edge_bit = [n](int a, int b) { return a * n + b; };
  std::vector<Face> cliques;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Face s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    bool clique = true;
    for (size_t a = 0; a < s.size() && clique; ++a)
      for (size_t b = a + 1; b < s.size() && clique; ++b)
        if (!(edge_mask >> edge_bit(s[a], s[b]) & 1)) clique = false;
    if (clique) cliques.push_back(std::move(s));
  }
  return SimplicialComplex::from_facets(std::move(cliques));
}

}  // namespace

TEST_CASE("from_facets canonicalization") {
  SimplicialComplex c = SimplicialComplex::from_facets({{1, 2}, {2, 3}, {2, 1}});
  CHECK(c.facets() == std::vector<Face>{{1, 2}, {2, 3}});

  CHECK(SimplicialComplex::from_facets({{1, 2, 3}, {1, 2}}).facets() ==
        std::vector<Face>{{1, 2, 3}});

  SimplicialComplex void_complex = SimplicialComplex::from_facets({});
  CHECK(void_complex.is_void());
  CHECK_FALSE(SimplicialComplex::empty_complex().is_void());
  CHECK(SimplicialComplex::empty_complex().dimension() == -1);
  CHECK(SimplicialComplex::from_facets({{}, {4}}).facets() == std::vector<Face>{{4}});
}

TEST_CASE("from_facets is idempotent") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    SimplicialComplex c = random_complex(rng, 7);
    CHECK(SimplicialComplex::from_facets(c.facets()) == c);
  }
}

TEST_CASE("f-vectors") {
  CHECK(SimplicialComplex::full_simplex({0, 1, 2}).f_vector() == FVector{{1, 3, 3, 1}});
  CHECK(kTriangleBoundary.f_vector() == FVector{{1, 3, 3}});
  CHECK(SimplicialComplex::empty_complex().f_vector() == FVector{{1}});
  CHECK_THROWS_AS(SimplicialComplex().f_vector(), std::invalid_argument);
  CHECK(FVector{{1, 15, 30, 16}}.str() == "(1,15,30,16)");
}

TEST_CASE("h-polynomials") {
  for (int n = 1; n <= 6; ++n) {
    Face v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    CHECK(SimplicialComplex::full_simplex(v).h_polynomial() == IntPolynomial{1});
  }
  SimplicialComplex hexagon = SimplicialComplex::from_facets(
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  CHECK(hexagon.h_polynomial() == IntPolynomial{1, 4, 1});
  CHECK(SimplicialComplex::empty_complex().h_polynomial() == IntPolynomial{1});
}

TEST_CASE("h at 1 counts top-dimensional faces") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    SimplicialComplex c = random_complex(rng, 7);
    mpz_class top = c.f_vector().counts.back();
    CHECK(c.h_polynomial()(mpz_class(1)) == top);
  }
}

TEST_CASE("flagness") {
  CHECK_FALSE(kTriangleBoundary.is_flag());  // {0,1,2} is a clique, not a face
  CHECK(SimplicialComplex::from_facets({{0, 1}, {1, 2}, {2, 3}, {0, 3}}).is_flag());
  CHECK(SimplicialComplex::full_simplex({0, 1, 2, 3}).is_flag());
  CHECK(SimplicialComplex().is_flag());
}

TEST_CASE("flagness agrees with the brute-force clique oracle") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    SimplicialComplex c = random_complex(rng, 7);
    CHECK(c.is_flag() == brute_force_flag(c));
  }
}

TEST_CASE("cone") {
  CHECK(SimplicialComplex::from_facets({{0, 1}}).cone(2) ==
        SimplicialComplex::full_simplex({0, 1, 2}));
  CHECK(kTriangleBoundary.cone(9).facets() ==
        std::vector<Face>{{0, 1, 9}, {0, 2, 9}, {1, 2, 9}});
  CHECK_THROWS_AS(kTriangleBoundary.cone(1), std::invalid_argument);

  std::mt19937 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    SimplicialComplex c = random_complex(rng, 6);
    SimplicialComplex coned = c.cone(100);
    // f_i(cone) = f_i + f_(i-1)
    FVector fc = coned.f_vector(), f = c.f_vector();
    for (size_t i = 0; i < fc.counts.size(); ++i) {
      mpz_class expected = (i < f.counts.size() ? f.counts[i] : 0) + (i >= 1 ? f.counts[i - 1] : 0);
      CHECK(fc.counts[i] == expected);
    }
    // link at the apex recovers the complex
    CHECK(coned.link({100}) == c);
  }
}

TEST_CASE("link") {
  CHECK(kTriangleBoundary.link({}) == kTriangleBoundary);
  CHECK(kTriangleBoundary.link({0, 1}) == SimplicialComplex::empty_complex());
  CHECK(kTriangleBoundary.link({0}).facets() == std::vector<Face>{{1}, {2}});
  CHECK_THROWS_AS(kTriangleBoundary.link({0, 1, 2}), std::invalid_argument);
}

TEST_CASE("stellar subdivision of an edge") {
  SimplicialComplex square = kTriangleBoundary.stellar_subdivide_edge({0, 1}, 3);
  CHECK(square == SimplicialComplex::from_facets({{0, 3}, {1, 3}, {1, 2}, {0, 2}}));

  SimplicialComplex split = SimplicialComplex::full_simplex({0, 1, 2}).stellar_subdivide_edge({0, 1}, 3);
  CHECK(split == SimplicialComplex::from_facets({{0, 2, 3}, {1, 2, 3}}));

  CHECK_THROWS_AS(kTriangleBoundary.stellar_subdivide_edge({0, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex::from_facets({{0}, {1}}).stellar_subdivide_edge({0, 1}, 2),
                  std::invalid_argument);
}

TEST_CASE("stellar subdivision preserves flagness on flag complexes") {
  // All clique complexes on 5 vertices, every edge subdivided once.
  int n = 5;
  for (unsigned graph = 0; graph < (1u << 10); ++graph) {
    unsigned edge_mask = 0;
    int bit = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b, ++bit)
        if (graph >> bit & 1) edge_mask |= 1u << (a * n + b);
    SimplicialComplex c = clique_complex(n, edge_mask);
    REQUIRE(c.is_flag());
    for (const Face& f : c.faces()) {
      if (f.size() != 2) continue;
      CHECK(c.stellar_subdivide_edge(f, n).is_flag());
    }
  }

  // Random clique complexes on 8 vertices, one random edge each.
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    uint64_t edge_mask = 0;
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b)
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0)
          edge_mask |= uint64_t{1} << (a * 8 + b);
    SimplicialComplex c = clique_complex(8, edge_mask);
    std::vector<Face> edges;
    for (const Face& f : c.faces())
      if (f.size() == 2) edges.push_back(f);
    if (edges.empty()) continue;
    const Face& e = edges[std::uniform_int_distribution<size_t>(0, edges.size() - 1)(rng)];
    CHECK(c.stellar_subdivide_edge(e, 8).is_flag());
  }
}

TEST_CASE("barycentric subdivision") {
  SimplicialComplex path = SimplicialComplex::from_facets({{0, 1}}).barycentric_subdivision();
  CHECK(path.f_vector() == FVector{{1, 3, 2}});

  SimplicialComplex sd = SimplicialComplex::full_simplex({0, 1, 2}).barycentric_subdivision();
  CHECK(sd.f_vector() == FVector{{1, 7, 12, 6}});
  CHECK(sd.h_polynomial() == IntPolynomial{1, 4, 1});
  CHECK(sd.is_flag());

  CHECK(SimplicialComplex::empty_complex().barycentric_subdivision() ==
        SimplicialComplex::empty_complex());
  CHECK_THROWS_AS(SimplicialComplex().barycentric_subdivision(), std::invalid_argument);
}

TEST_CASE("induced subcomplex") {
  CHECK(kTriangleBoundary.induced({0, 1}).facets() == std::vector<Face>{{0, 1}});
  CHECK(kTriangleBoundary.induced({}) == SimplicialComplex::empty_complex());
  CHECK(kTriangleBoundary.induced({0, 1, 2}) == kTriangleBoundary);
}

TEST_CASE("labels survive constructions") {
  SimplicialComplex c = SimplicialComplex::from_facets({{0, 1}}, {{0, "a"}, {1, "b"}});
  CHECK(c.label(0) == "a");
  CHECK(c.cone(2).label(0) == "a");
  CHECK(c.cone(2).label(2) == "2");
  CHECK(c.barycentric_subdivision().label(0) == "{a}");
}
