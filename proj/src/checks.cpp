#include "edgewise/checks.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "edgewise/poly.hpp"
#include "edgewise/simplicial_complex.hpp"
#include "edgewise/smirnov.hpp"
#include "edgewise/subdivision.hpp"
#include "edgewise/triangulation.hpp"

namespace edgewise::checks {

bool CheckReport::all_pass() const {
  return std::all_of(cells.begin(), cells.end(), [](const CheckCell& c) { return c.pass; });
}

std::string CheckReport::first_witness() const {
  for (const CheckCell& c : cells)
    if (!c.pass) return c.witness;
  return {};
}

namespace {

CheckCell cell(std::map<std::string, long> params, bool pass, std::string witness = {}) {
  return CheckCell{std::move(params), pass, pass ? std::string{} : std::move(witness)};
}

std::string poly_witness(const std::string& label, const IntPolynomial& got,
                         const IntPolynomial& expected) {
  return label + ": got " + got.str() + ", expected " + expected.str();
}

}  // namespace

CheckReport golden() {
  CheckReport rep{"golden", {}};
  TriangulatedSimplex t = esd_simplex(3, 4);

  FVector fv = t.complex().f_vector();
  FVector fv_expected{{1, 15, 30, 16}};
  rep.cells.push_back(cell({{"n", 3}, {"r", 4}}, fv == fv_expected,
                           "f-vector: got " + fv.str() + ", expected " + fv_expected.str()));

  IntPolynomial h = t.complex().h_polynomial();
  IntPolynomial h_expected{1, 12, 3};
  rep.cells.push_back(
      cell({{"n", 3}, {"r", 4}}, h == h_expected, poly_witness("h", h, h_expected)));

  IntPolynomial lh = t.local_h();
  IntPolynomial lh_expected{0, 3, 3};
  rep.cells.push_back(
      cell({{"n", 3}, {"r", 4}}, lh == lh_expected, poly_witness("local h", lh, lh_expected)));
  return rep;
}

CheckReport theorem1(int n_max, int r_max) {
  CheckReport rep{"theorem1", {}};
  for (int n = 1; n <= n_max; ++n) {
    for (int r = 1; r <= r_max; ++r) {
      IntPolynomial by_def = esd_simplex(n, r).local_h();
      IntPolynomial by_op = local_h_via_operator(n, r);
      IntPolynomial by_words = local_h_via_words(n, r);
      bool ok = by_def == by_op && by_op == by_words;
      rep.cells.push_back(cell({{"n", n}, {"r", r}}, ok,
                               "definition " + by_def.str() + ", operator " + by_op.str() +
                                   ", words " + by_words.str()));
    }
  }
  return rep;
}

CheckReport h_formulas(int n_max, int r_max) {
  CheckReport rep{"h-formulas", {}};
  for (int n = 1; n <= n_max; ++n) {
    for (int r = 1; r <= r_max; ++r) {
      IntPolynomial by_faces = esd_simplex(n, r).complex().h_polynomial();
      IntPolynomial by_op = e_operator(pow(ones(r), n), r);
      IntPolynomial by_words = h_via_words(n, r);
      bool ok = by_faces == by_op && by_op == by_words;
      rep.cells.push_back(cell({{"n", n}, {"r", r}}, ok,
                               "faces " + by_faces.str() + ", operator " + by_op.str() +
                                   ", words " + by_words.str()));
    }
  }
  return rep;
}

CheckReport general_complexes(const std::vector<int>& rs) {
  CheckReport rep{"general-complexes", {}};
  std::vector<std::pair<std::string, SimplicialComplex>> suite;
  SimplicialComplex triangle_boundary =
      SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}});
  suite.emplace_back("3-cycle", triangle_boundary);
  suite.emplace_back("3-cycle+pendant",
                     SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}, {2, 3}}));
  suite.emplace_back("sd(2-simplex)",
                     SimplicialComplex::full_simplex({0, 1, 2}).barycentric_subdivision());

  for (size_t i = 0; i < suite.size(); ++i) {
    const auto& [name, delta] = suite[i];
    int d = delta.dimension() + 1;
    for (int r : rs) {
      IntPolynomial lhs = esd_complex(delta, r).h_polynomial();
      IntPolynomial rhs = e_operator(pow(ones(r), d) * delta.h_polynomial(), r);
      rep.cells.push_back(cell({{"complex", static_cast<long>(i)}, {"r", r}}, lhs == rhs,
                               name + ": subdivision h " + lhs.str() + ", formula " + rhs.str()));
    }
  }
  return rep;
}

CheckReport gamma_agreement(int n_max, int r_max) {
  CheckReport rep{"gamma", {}};
  for (int n = 1; n <= n_max; ++n) {
    for (int r = 1; r <= r_max; ++r) {
      GammaVector by_words = xi_by_words(n, r);
      GammaVector by_expand = xi_by_gamma_expand(n, r);
      IntPolynomial lh = local_h_via_operator(n, r);
      bool nonneg = std::all_of(by_words.xi.begin(), by_words.xi.end(),
                                [](const mpz_class& x) { return x >= 0; });
      bool ok = by_words == by_expand && by_words.reconstruct() == lh && nonneg;
      std::ostringstream wit;
      wit << "xi by words (";
      for (size_t i = 0; i < by_words.xi.size(); ++i) wit << (i ? "," : "") << by_words.xi[i];
      wit << "), by expansion (";
      for (size_t i = 0; i < by_expand.xi.size(); ++i) wit << (i ? "," : "") << by_expand.xi[i];
      wit << "), local h " << lh.str();
      rep.cells.push_back(cell({{"n", n}, {"r", r}}, ok, wit.str()));
    }
  }
  return rep;
}

CheckReport hop_structure(int n_max, int r_max) {
  CheckReport rep{"hop-structure", {}};
  for (int n = 1; n <= n_max; ++n) {
    for (int r = 1; r <= r_max; ++r) {
      auto words = enumerate_words(n, r);
      auto classes = hop_classes(n, r);

      size_t covered = 0;
      bool ok = true;
      std::string witness;
      for (const HopClass& cls : classes) {
        covered += cls.members.size();
        int m = match_count(cls.canonical);
        int asc = ascent_count(cls.canonical);
        if (cls.members.size() != (size_t{1} << m)) {
          ok = false;
          witness = "class of " + cls.canonical.str() + ": size " +
                    std::to_string(cls.members.size()) + " != 2^" + std::to_string(m);
          break;
        }
        if (m != n - 2 * asc) {
          ok = false;
          witness = "canonical " + cls.canonical.str() + ": m = " + std::to_string(m) +
                    ", n - 2 asc = " + std::to_string(n - 2 * asc);
          break;
        }
        int canonical_members = 0;
        for (const SmirnovWord& w : cls.members)
          if (!has_right_match(w)) ++canonical_members;
        if (canonical_members != 1 || !is_canonical(cls.canonical)) {
          ok = false;
          witness = "class of " + cls.canonical.str() + ": canonical member count " +
                    std::to_string(canonical_members);
          break;
        }
      }
      if (ok && covered != words.size()) {
        ok = false;
        witness = "classes cover " + std::to_string(covered) + " of " +
                  std::to_string(words.size()) + " words";
      }
      rep.cells.push_back(cell({{"n", n}, {"r", r}}, ok, witness));
    }
  }
  return rep;
}

CheckReport savage(int n_max, int r_max, int order) {
  CheckReport rep{"savage", {}};
  for (int n = 1; n <= n_max; ++n) {
    for (int r = 1; r <= r_max; ++r) {
      auto [lhs, rhs] = savage_sides(n, r, order);
      bool ok = series_equal(lhs, rhs);
      std::string witness;
      if (!ok) {
        for (int m = 0; m <= order; ++m) {
          if (lhs.coeff(m) != rhs.coeff(m)) {
            witness = "coefficient of x^" + std::to_string(m) + ": binomial side " +
                      lhs.coeff(m).get_str() + ", word side " + rhs.coeff(m).get_str();
            break;
          }
        }
      }
      rep.cells.push_back(cell({{"n", n}, {"r", r}, {"order", order}}, ok, witness));
    }
  }
  return rep;
}

CheckReport interior_lift(int n_max, int r_max) {
  CheckReport rep{"interior-lift", {}};
  for (int n = 1; n <= n_max; ++n) {
    for (int r = 1; r <= r_max; ++r) {
      TriangulatedSimplex t = esd_simplex(n, r);
      bool ok = true;
      std::string witness;
      for (int p : t.interior_vertices()) {
        TriangulatedSimplex lifted = t.lift_interior_vertex(p);
        IntPolynomial lhs = lifted.local_h();
        IntPolynomial rhs = IntPolynomial{0, 1} * t.complex().link({p}).h_polynomial();
        if (lhs != rhs) {
          ok = false;
          witness = "vertex " + t.complex().label(p) + ": " + poly_witness("lift", lhs, rhs);
          break;
        }
        if (lifted.complex().dimension() != t.complex().dimension() + 1) {
          ok = false;
          witness = "vertex " + t.complex().label(p) + ": dimension did not grow by one";
          break;
        }
      }
      rep.cells.push_back(cell({{"n", n}, {"r", r}}, ok, witness));
    }
  }
  return rep;
}

CheckReport structural(int n_max, int r_max, unsigned seed) {
  CheckReport rep{"structural", {}};
  std::mt19937 rng(seed);

  // One cell per constructed triangulation.
  auto inspect = [&rep](const std::string& name, int r, const TriangulatedSimplex& t,
                        bool expect_flag) {
    int n = t.base_size();
    IntPolynomial lh = t.local_h();
    bool ok = true;
    std::string witness;
    if (!is_palindromic(lh, n)) {
      ok = false;
      witness = name + ": local h " + lh.str() + " not palindromic for n = " + std::to_string(n);
    } else if (std::any_of(lh.coeffs().begin(), lh.coeffs().end(),
                           [](const mpz_class& c) { return c < 0; })) {
      ok = false;
      witness = name + ": local h " + lh.str() + " has a negative coefficient";
    } else if (lh.degree() > n - 1) {
      ok = false;
      witness = name + ": local h " + lh.str() + " exceeds degree " + std::to_string(n - 1);
    } else if (expect_flag && !t.complex().is_flag()) {
      ok = false;
      witness = name + ": complex is not flag";
    } else {
      IntPolynomial coned =
          t.cone_over(t.base().back() + 1).local_h();
      if (!coned.is_zero()) {
        ok = false;
        witness = name + ": local h of the cone is " + coned.str() + ", expected 0";
      }
    }
    rep.cells.push_back(cell({{"n", n}, {"r", r}}, ok, witness));
  };

  for (int n = 1; n <= n_max; ++n) {
    for (int r = 1; r <= r_max; ++r) {
      TriangulatedSimplex t = esd_simplex(n, r);
      std::string name = "esd(n=" + std::to_string(n) + ",r=" + std::to_string(r) + ")";
      inspect(name, r, t, true);

      // A stellar lift on a randomly chosen edge, when one exists.
      std::vector<Face> edges;
      for (const Face& f : t.complex().faces())
        if (f.size() == 2) edges.push_back(f);
      if (!edges.empty()) {
        const Face& e = edges[std::uniform_int_distribution<size_t>(0, edges.size() - 1)(rng)];
        int fresh = t.complex().vertices().back() + 1;
        inspect(name + "+stellar", r, t.stellar_lift(e, fresh), true);
      }

      for (int p : t.interior_vertices()) {
        inspect(name + "+lift", r, t.lift_interior_vertex(p), true);
        break;  // one interior vertex is enough per cell
      }
    }
  }
  return rep;
}

CheckReport real_rootedness(int n_max, int r_max) {
  CheckReport rep{"real-rootedness", {}};
  for (int n = 2; n <= n_max; ++n) {
    for (int r = 2; r <= r_max; ++r) {
      IntPolynomial lh = local_h_via_operator(n, r);
      rep.cells.push_back(
          cell({{"n", n}, {"r", r}}, is_real_rooted(lh), "local h " + lh.str() + " not real-rooted"));
    }
  }
  IntPolynomial counterexample{1, 1, 1};
  rep.cells.push_back(cell({{"n", -1}, {"r", -1}},
                           !is_real_rooted(counterexample) && real_root_count(counterexample) == 0,
                           "1 + x + x^2 misclassified"));
  return rep;
}

}  // namespace edgewise::checks
