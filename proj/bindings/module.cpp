// Python bindings for the main operations. Polynomials cross the boundary
// as lists of Python ints (ascending degree) via decimal strings, so
// arbitrary-precision coefficients survive exactly.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "edgewise/checks.hpp"
#include "edgewise/poly.hpp"
#include "edgewise/simplicial_complex.hpp"
#include "edgewise/smirnov.hpp"
#include "edgewise/subdivision.hpp"
#include "edgewise/triangulation.hpp"

namespace py = pybind11;
using namespace edgewise;

namespace {

py::int_ to_py_int(const mpz_class& z) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

mpz_class to_mpz(const py::handle& obj) {
  return mpz_class(py::str(obj).cast<std::string>());
}

IntPolynomial poly_in(const py::sequence& coeffs) {
  std::vector<mpz_class> c;
  c.reserve(coeffs.size());
  for (const auto& item : coeffs) c.push_back(to_mpz(item));
  return IntPolynomial(std::move(c));
}

py::list poly_out(const IntPolynomial& p) {
  py::list out;
  for (const mpz_class& c : p.coeffs()) out.append(to_py_int(c));
  return out;
}

py::list ints_out(const std::vector<mpz_class>& v) {
  py::list out;
  for (const mpz_class& c : v) out.append(to_py_int(c));
  return out;
}

SimplicialComplex complex_in(const std::vector<Face>& facets) {
  return SimplicialComplex::from_facets(facets);
}

py::dict triangulation_out(const TriangulatedSimplex& t) {
  py::dict out;
  out["base"] = t.base();
  py::list facets;
  for (const Face& f : t.complex().facets()) facets.append(f);
  out["facets"] = facets;
  py::dict carrier;
  for (const auto& [v, c] : t.carriers()) carrier[py::int_(v)] = c;
  out["carrier"] = carrier;
  py::dict labels;
  for (int v : t.complex().vertices()) labels[py::int_(v)] = t.complex().label(v);
  out["labels"] = labels;
  return out;
}

IntPolynomial local_h_dispatch(int n, int r, const std::string& method) {
  if (method == "definition") return esd_simplex(n, r).local_h();
  if (method == "operator") return local_h_via_operator(n, r);
  if (method == "words") return local_h_via_words(n, r);
  if (method == "transfer") return local_h_via_transfer_matrix(n, r);
  throw std::invalid_argument("unknown method: " + method);
}

}  // namespace

PYBIND11_MODULE(_edgewise, m) {
  m.doc() = "Edgewise subdivisions, local h-polynomials, Smirnov words and "
            "gamma vectors, in exact integer arithmetic";

  // Polynomials.
  m.def("poly_add", [](const py::sequence& a, const py::sequence& b) {
    return poly_out(poly_in(a) + poly_in(b));
  });
  m.def("poly_sub", [](const py::sequence& a, const py::sequence& b) {
    return poly_out(poly_in(a) - poly_in(b));
  });
  m.def("poly_mul", [](const py::sequence& a, const py::sequence& b) {
    return poly_out(poly_in(a) * poly_in(b));
  });
  m.def("e_operator",
        [](const py::sequence& p, int r) { return poly_out(e_operator(poly_in(p), r)); },
        py::arg("coeffs"), py::arg("r"));
  m.def("is_palindromic",
        [](const py::sequence& p, int n) { return is_palindromic(poly_in(p), n); },
        py::arg("coeffs"), py::arg("n"));
  m.def("gamma_expand",
        [](const py::sequence& p, int n) { return ints_out(gamma_expand(poly_in(p), n).xi); },
        py::arg("coeffs"), py::arg("n"));
  m.def("gamma_reconstruct",
        [](int n, const py::sequence& xi) {
          GammaVector g;
          g.n = n;
          for (const auto& item : xi) g.xi.push_back(to_mpz(item));
          return poly_out(g.reconstruct());
        },
        py::arg("n"), py::arg("xi"));
  m.def("real_root_count",
        [](const py::sequence& p) { return real_root_count(poly_in(p)); }, py::arg("coeffs"));
  m.def("is_real_rooted",
        [](const py::sequence& p) { return is_real_rooted(poly_in(p)); }, py::arg("coeffs"));
  m.def("evaluate",
        [](const py::sequence& p, const py::handle& num, const py::handle& den) {
          mpq_class t(to_mpz(num), to_mpz(den));
          t.canonicalize();
          mpq_class v = poly_in(p)(t);
          return py::make_tuple(to_py_int(v.get_num()), to_py_int(v.get_den()));
        },
        py::arg("coeffs"), py::arg("num"), py::arg("den") = py::int_(1),
        "Exact evaluation at num/den; returns a reduced (numerator, denominator) pair");

  // Simplicial complexes, given and returned as facet lists.
  m.def("canonical_facets",
        [](const std::vector<Face>& facets) { return complex_in(facets).facets(); },
        py::arg("facets"));
  m.def("f_vector",
        [](const std::vector<Face>& facets) { return ints_out(complex_in(facets).f_vector().counts); },
        py::arg("facets"));
  m.def("h_polynomial",
        [](const std::vector<Face>& facets) { return poly_out(complex_in(facets).h_polynomial()); },
        py::arg("facets"));
  m.def("is_flag",
        [](const std::vector<Face>& facets) { return complex_in(facets).is_flag(); },
        py::arg("facets"));
  m.def("cone",
        [](const std::vector<Face>& facets, int apex) { return complex_in(facets).cone(apex).facets(); },
        py::arg("facets"), py::arg("apex"));
  m.def("link",
        [](const std::vector<Face>& facets, const Face& f) {
          return complex_in(facets).link(f).facets();
        },
        py::arg("facets"), py::arg("face"));
  m.def("stellar_subdivide_edge",
        [](const std::vector<Face>& facets, const Face& e, int v) {
          return complex_in(facets).stellar_subdivide_edge(e, v).facets();
        },
        py::arg("facets"), py::arg("edge"), py::arg("new_vertex"));
  m.def("barycentric_subdivision",
        [](const std::vector<Face>& facets) {
          return complex_in(facets).barycentric_subdivision().facets();
        },
        py::arg("facets"));

  // Edgewise subdivisions.
  m.def("omega_vertices", [](int n, int r) {
    py::list out;
    for (const LatticeVertex& u : omega_vertices(n, r)) out.append(u.parts);
    return out;
  }, py::arg("n"), py::arg("r"));
  m.def("esd_simplex", [](int n, int r) {
    TriangulatedSimplex t = esd_simplex(n, r);
    py::dict out = triangulation_out(t);
    py::list parts;
    for (const LatticeVertex& u : omega_vertices(n, r)) parts.append(u.parts);
    out["vertices"] = parts;
    return out;
  }, py::arg("n"), py::arg("r"));
  m.def("esd_complex", [](const std::vector<Face>& facets, int r) {
    SimplicialComplex sub = esd_complex(complex_in(facets), r);
    py::dict out;
    py::list labels;
    for (int v : sub.vertices()) labels.append(sub.label(v));
    out["vertices"] = labels;
    std::map<int, int> pos;
    for (int v : sub.vertices()) pos.emplace(v, static_cast<int>(pos.size()));
    py::list fs;
    for (const Face& f : sub.facets()) {
      Face g;
      for (int v : f) g.push_back(pos.at(v));
      fs.append(g);
    }
    out["facets"] = fs;
    return out;
  }, py::arg("facets"), py::arg("r"));
  m.def("esd_h_polynomial",
        [](int n, int r) { return poly_out(esd_simplex(n, r).complex().h_polynomial()); },
        py::arg("n"), py::arg("r"));

  // Local h-polynomials and triangulation constructions.
  m.def("local_h",
        [](int n, int r, const std::string& method) {
          return poly_out(local_h_dispatch(n, r, method));
        },
        py::arg("n"), py::arg("r"), py::arg("method") = "operator",
        "method: definition | operator | words | transfer");
  m.def("interior_vertices", [](int n, int r) {
    TriangulatedSimplex t = esd_simplex(n, r);
    py::list out;
    for (int p : t.interior_vertices()) out.append(p);
    return out;
  }, py::arg("n"), py::arg("r"));
  m.def("lift_interior_vertex", [](int n, int r, int p) {
    return triangulation_out(esd_simplex(n, r).lift_interior_vertex(p));
  }, py::arg("n"), py::arg("r"), py::arg("p"));
  m.def("local_h_of", [](const py::dict& t) {
    std::vector<Face> facets;
    for (const auto& f : t["facets"]) facets.push_back(f.cast<Face>());
    std::map<int, Face> carriers;
    for (const auto& [k, v] : t["carrier"].cast<py::dict>())
      carriers[k.cast<int>()] = v.cast<Face>();
    TriangulatedSimplex ts(t["base"].cast<Face>(),
                           SimplicialComplex::from_facets(std::move(facets)),
                           std::move(carriers));
    return poly_out(ts.local_h());
  }, py::arg("triangulation"),
     "Local h-polynomial of a {base, facets, carrier} triangulation");

  // Smirnov words.
  m.def("enumerate_words", [](int n, int r) {
    py::list out;
    for (const SmirnovWord& w : enumerate_words(n, r)) out.append(w.entries);
    return out;
  }, py::arg("n"), py::arg("r"));
  m.def("word_stats", [](const std::vector<int>& entries, int r) {
    SmirnovWord w(entries, r);
    WordStats s = word_stats(w);
    py::dict out;
    out["asc"] = s.ascents;
    out["des"] = s.descents;
    out["double_ascents"] = s.double_ascents;
    out["double_descents"] = s.double_descents;
    out["canonical"] = is_canonical(w);
    out["match_count"] = match_count(w);
    return out;
  }, py::arg("entries"), py::arg("r"));
  m.def("hop_classes", [](int n, int r) {
    py::list out;
    for (const HopClass& cls : hop_classes(n, r)) {
      py::dict jc;
      jc["canonical"] = cls.canonical.entries;
      py::list members;
      for (const SmirnovWord& w : cls.members) members.append(w.entries);
      jc["members"] = members;
      jc["ascent_polynomial"] = poly_out(cls.ascent_polynomial());
      out.append(jc);
    }
    return out;
  }, py::arg("n"), py::arg("r"));
  m.def("xi_coefficients",
        [](int n, int r, const std::string& method) {
          if (method == "words") return ints_out(xi_by_words(n, r).xi);
          if (method == "expand") return ints_out(xi_by_gamma_expand(n, r).xi);
          throw std::invalid_argument("unknown method: " + method);
        },
        py::arg("n"), py::arg("r"), py::arg("method") = "words");
  m.def("savage_check", &savage_check, py::arg("n"), py::arg("r"), py::arg("order"));
  m.def("h_via_words", [](int n, int r) { return poly_out(h_via_words(n, r)); },
        py::arg("n"), py::arg("r"));

  // Check suites.
  m.def("run_checks", [](const std::string& suite, int n_max, int r_max) {
    using namespace edgewise::checks;
    CheckReport rep;
    if (suite == "golden") rep = golden();
    else if (suite == "theorem1") rep = theorem1(n_max, r_max);
    else if (suite == "h-formulas") rep = h_formulas(n_max, r_max);
    else if (suite == "gamma") rep = gamma_agreement(n_max, r_max);
    else if (suite == "hop-structure") rep = hop_structure(n_max, r_max);
    else if (suite == "savage") rep = savage(n_max, r_max, 8);
    else if (suite == "interior-lift") rep = interior_lift(n_max, r_max);
    else if (suite == "real-rootedness") rep = real_rootedness(n_max, r_max);
    else throw std::invalid_argument("unknown suite: " + suite);
    return py::make_tuple(rep.all_pass(), rep.first_witness());
  }, py::arg("suite"), py::arg("n_max") = 4, py::arg("r_max") = 4);
}
