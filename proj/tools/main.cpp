// Command-line front end: constructions, tables and the property-check
// suites, with machine-readable output.
//
// Exit codes: 0 success (and all checks passing), 1 a check failed,
// 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "edgewise/checks.hpp"
#include "edgewise/json_io.hpp"
#include "edgewise/poly.hpp"
#include "edgewise/simplicial_complex.hpp"
#include "edgewise/smirnov.hpp"
#include "edgewise/subdivision.hpp"
#include "edgewise/triangulation.hpp"

#if defined(_WIN32)
#include <io.h>
#define EDGEWISE_ISATTY _isatty(_fileno(stdout))
#else
#include <unistd.h>
#define EDGEWISE_ISATTY isatty(fileno(stdout))
#endif

namespace {

using edgewise::Face;
using edgewise::GammaVector;
using edgewise::IntPolynomial;
using edgewise::SimplicialComplex;
using edgewise::SmirnovWord;
using edgewise::TriangulatedSimplex;
using nlohmann::json;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

constexpr int kMaxLatticeN = 7;
constexpr int kMaxLatticeR = 6;
constexpr int kDefaultMaxCells = 100;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "pretty";
  unsigned seed = 0;
  bool unsafe_large = false;
};

bool use_color() {
  static const bool color = EDGEWISE_ISATTY && std::getenv("NO_COLOR") == nullptr;
  return color;
}

std::string pass_fail(bool pass) {
  std::string text = pass ? "PASS" : "FAIL";
  if (!use_color()) return text;
  return (pass ? "\033[32m" : "\033[31m") + text + "\033[0m";
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string xi_str(const GammaVector& g) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < g.xi.size(); ++i) out << (i ? "," : "") << g.xi[i].get_str();
  out << ")";
  return out.str();
}

void require_positive(int value, const std::string& name) {
  if (value < 1) throw UsageError(name + " must be >= 1");
}

// Commands that enumerate full face lattices refuse large parameters
// unless explicitly overridden; exponential blowups should fail loudly
// rather than hang.
void guard_lattice_size(int n, int r, const Options& opts) {
  if (opts.unsafe_large) return;
  if (n > kMaxLatticeN || r > kMaxLatticeR)
    throw UsageError("n <= " + std::to_string(kMaxLatticeN) + " and r <= " +
                     std::to_string(kMaxLatticeR) +
                     " for face-lattice commands (use --unsafe-large to override)");
}

// Word enumerations grow like (r-1)^(n-1); refuse ones that cannot finish.
void guard_word_count(int n, int r, const Options& opts) {
  if (opts.unsafe_large) return;
  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), std::max(r - 1, 1), n - 1);
  if (bound > 10'000'000)
    throw UsageError("about " + bound.get_str() +
                     " words; refine n or r (use --unsafe-large to override)");
}

void emit(const json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

json report_to_json(const edgewise::checks::CheckReport& rep) {
  json cells = json::array();
  for (const auto& c : rep.cells) {
    json params = json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    json jc{{"params", params}, {"pass", c.pass}};
    if (!c.pass) jc["witness"] = c.witness;
    cells.push_back(std::move(jc));
  }
  return json{{"check", rep.name}, {"pass", rep.all_pass()}, {"cells", cells}};
}

std::string params_str(const std::map<std::string, long>& params) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : params) {
    out << (first ? "" : ",") << k << "=" << v;
    first = false;
  }
  return out.str();
}

int print_reports(const std::vector<edgewise::checks::CheckReport>& reports,
                  const Options& opts) {
  bool all = true;
  for (const auto& rep : reports) all = all && rep.all_pass();

  if (opts.format == "json") {
    json out = json::array();
    for (const auto& rep : reports) out.push_back(report_to_json(rep));
    emit(out, std::cout);
  } else if (opts.format == "csv") {
    std::cout << "check,params,pass,witness\n";
    for (const auto& rep : reports)
      for (const auto& c : rep.cells)
        std::cout << rep.name << "," << csv_quote(params_str(c.params)) << ","
                  << (c.pass ? "true" : "false") << "," << csv_quote(c.witness) << "\n";
  } else {
    for (const auto& rep : reports) {
      size_t passed = 0;
      for (const auto& c : rep.cells) {
        if (c.pass)
          ++passed;
        else
          std::cout << "  " << pass_fail(false) << " " << rep.name << " ["
                    << params_str(c.params) << "] " << c.witness << "\n";
      }
      std::cout << pass_fail(rep.all_pass()) << " " << rep.name << " (" << passed << "/"
                << rep.cells.size() << " cells)\n";
    }
  }
  return all ? 0 : kExitCheckFailed;
}

SimplicialComplex read_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  json j;
  in >> j;
  return edgewise::complex_from_json(j);
}

// ---------------------------------------------------------------------------

int run_esd(int n, int r, const std::string& complex_path, const std::string& out_path,
            const Options& opts) {
  require_positive(r, "r");
  json j;
  if (!complex_path.empty()) {
    SimplicialComplex delta = read_complex(complex_path);
    // The construction is facet-based, so the cap applies to the facet
    // size, plus a bound on the composition lattice that indexes vertices.
    int top = delta.is_void() ? 0 : delta.dimension() + 1;
    int verts = static_cast<int>(delta.vertices().size());
    guard_lattice_size(top, r, opts);
    if (!opts.unsafe_large && verts > 0 &&
        edgewise::binomial(verts + r - 1, verts - 1) > 200000)
      throw UsageError("composition lattice too large (use --unsafe-large to override)");
    j = edgewise::complex_to_json(esd_complex(delta, r));
  } else {
    require_positive(n, "n");
    guard_lattice_size(n, r, opts);
    j = edgewise::triangulation_to_json(edgewise::esd_simplex(n, r));
  }
  if (out_path.empty()) {
    emit(j, std::cout);
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    emit(j, out);
  }
  return 0;
}

int run_local_h(int n, int r, const std::string& method, const Options& opts) {
  require_positive(n, "n");
  require_positive(r, "r");
  std::vector<std::pair<std::string, IntPolynomial>> results;
  if (method == "definition" || method == "all") {
    guard_lattice_size(n, r, opts);
    results.emplace_back("definition", edgewise::esd_simplex(n, r).local_h());
  }
  if (method == "operator" || method == "all")
    results.emplace_back("operator", edgewise::local_h_via_operator(n, r));
  if (method == "words" || method == "all")
    results.emplace_back("words", edgewise::local_h_via_words(n, r));
  if (results.empty()) throw UsageError("unknown method: " + method);

  bool agree = true;
  for (const auto& [name, p] : results) agree = agree && p == results.front().second;

  if (opts.format == "json") {
    json methods = json::object();
    for (const auto& [name, p] : results) methods[name] = edgewise::poly_to_json(p);
    emit(json{{"n", n}, {"r", r}, {"methods", methods}, {"agree", agree}}, std::cout);
  } else if (opts.format == "csv") {
    std::cout << "n,r,method,polynomial,agree\n";
    for (const auto& [name, p] : results)
      std::cout << n << "," << r << "," << name << "," << csv_quote(p.str()) << ","
                << (agree ? "true" : "false") << "\n";
  } else {
    for (const auto& [name, p] : results)
      std::cout << name << ": " << p.str() << "\n";
    if (results.size() > 1) std::cout << "agree: " << (agree ? "yes" : "no") << "\n";
  }
  return agree ? 0 : kExitCheckFailed;
}

int run_gamma(int n, int r, const std::string& method, const Options& opts) {
  require_positive(n, "n");
  require_positive(r, "r");
  std::optional<GammaVector> by_words, by_expand;
  if (method == "words" || method == "both") by_words = edgewise::xi_by_words(n, r);
  if (method == "expand" || method == "both") by_expand = edgewise::xi_by_gamma_expand(n, r);
  if (!by_words && !by_expand) throw UsageError("unknown method: " + method);
  bool agree = !by_words || !by_expand || *by_words == *by_expand;
  const GammaVector& g = by_words ? *by_words : *by_expand;

  if (opts.format == "json") {
    json j = edgewise::gamma_to_json(g);
    j["r"] = r;
    if (by_words && by_expand) j["methods_agree"] = agree;
    emit(j, std::cout);
  } else if (opts.format == "csv") {
    std::cout << "n,r,xi,agree\n"
              << n << "," << r << "," << csv_quote(xi_str(g)) << ","
              << (agree ? "true" : "false") << "\n";
  } else {
    std::cout << "xi = " << xi_str(g) << "\n";
    if (by_words && by_expand) std::cout << "methods agree: " << (agree ? "yes" : "no") << "\n";
  }
  return agree ? 0 : kExitCheckFailed;
}

int run_words(int n, int r, bool canonical_only, bool stats, const Options& opts) {
  require_positive(n, "n");
  require_positive(r, "r");
  guard_word_count(n, r, opts);
  auto words = edgewise::enumerate_words(n, r);

  if (opts.format == "json") {
    json out = json::array();
    for (const SmirnovWord& w : words) {
      if (canonical_only && !edgewise::is_canonical(w)) continue;
      auto s = edgewise::word_stats(w);
      json jw{{"word", w.entries},
              {"asc", s.ascents},
              {"des", s.descents},
              {"doubleAsc", static_cast<int>(s.double_ascents.size())}};
      if (stats) {
        jw["doubleDesc"] = static_cast<int>(s.double_descents.size());
        jw["canonical"] = edgewise::is_canonical(w);
        jw["matchCount"] = edgewise::match_count(w);
      }
      out.push_back(std::move(jw));
    }
    emit(out, std::cout);
    return 0;
  }

  std::cout << "word,asc,des,doubleAsc";
  if (stats) std::cout << ",doubleDesc,canonical,matchCount";
  std::cout << "\n";
  for (const SmirnovWord& w : words) {
    if (canonical_only && !edgewise::is_canonical(w)) continue;
    auto s = edgewise::word_stats(w);
    std::cout << csv_quote(w.str()) << "," << s.ascents << "," << s.descents << ","
              << s.double_ascents.size();
    if (stats)
      std::cout << "," << s.double_descents.size() << ","
                << (edgewise::is_canonical(w) ? "true" : "false") << ","
                << edgewise::match_count(w);
    std::cout << "\n";
  }
  return 0;
}

int run_hop_class(int n, int r, const std::string& word_csv, const Options& opts) {
  require_positive(n, "n");
  require_positive(r, "r");
  std::vector<edgewise::HopClass> classes;
  if (word_csv.empty()) {
    guard_word_count(n, r, opts);
    classes = edgewise::hop_classes(n, r);
  } else {
    std::vector<int> entries;
    std::stringstream ss(word_csv);
    for (std::string item; std::getline(ss, item, ',');) entries.push_back(std::stoi(item));
    SmirnovWord w(std::move(entries), r);
    if (w.n() != n) throw UsageError("--word has n = " + std::to_string(w.n()) +
                                     ", inconsistent with --n " + std::to_string(n));
    classes.push_back(edgewise::hop_class(w));
  }

  if (opts.format == "json") {
    json out = json::array();
    for (const auto& cls : classes) {
      json members = json::array();
      for (const SmirnovWord& w : cls.members) members.push_back(w.entries);
      out.push_back(json{{"canonical", cls.canonical.entries},
                         {"size", cls.members.size()},
                         {"asc", edgewise::ascent_count(cls.canonical)},
                         {"match_count", edgewise::match_count(cls.canonical)},
                         {"polynomial", edgewise::poly_to_json(cls.ascent_polynomial())},
                         {"members", members}});
    }
    emit(out, std::cout);
  } else {
    std::cout << "canonical,size,asc,match_count,polynomial\n";
    for (const auto& cls : classes)
      std::cout << csv_quote(cls.canonical.str()) << "," << cls.members.size() << ","
                << edgewise::ascent_count(cls.canonical) << ","
                << edgewise::match_count(cls.canonical) << ","
                << csv_quote(cls.ascent_polynomial().str()) << "\n";
  }
  return 0;
}

int run_lemma41(int n, int r, const std::string& vertex_label, const Options& opts) {
  require_positive(n, "n");
  require_positive(r, "r");
  guard_lattice_size(n, r, opts);
  TriangulatedSimplex t = edgewise::esd_simplex(n, r);

  std::vector<int> vertices;
  for (int p : t.interior_vertices())
    if (vertex_label.empty() || t.complex().label(p) == vertex_label) vertices.push_back(p);
  if (!vertex_label.empty() && vertices.empty())
    throw UsageError("no interior vertex labelled " + vertex_label);

  bool all_agree = true;
  json out = json::array();
  for (int p : vertices) {
    TriangulatedSimplex lifted = t.lift_interior_vertex(p);
    IntPolynomial lhs = lifted.local_h();
    IntPolynomial rhs = IntPolynomial{0, 1} * t.complex().link({p}).h_polynomial();
    bool agree = lhs == rhs;
    all_agree = all_agree && agree;
    if (opts.format == "json") {
      out.push_back(json{{"vertex", t.complex().label(p)},
                         {"lift_local_h", edgewise::poly_to_json(lhs)},
                         {"x_times_link_h", edgewise::poly_to_json(rhs)},
                         {"agree", agree}});
    } else if (opts.format == "csv") {
      if (out.empty()) std::cout << "vertex,lift_local_h,x_times_link_h,agree\n";
      out.push_back(true);
      std::cout << csv_quote(t.complex().label(p)) << "," << csv_quote(lhs.str()) << ","
                << csv_quote(rhs.str()) << "," << (agree ? "true" : "false") << "\n";
    } else {
      std::cout << "vertex " << t.complex().label(p) << ": lift local h = " << lhs.str()
                << ", x*h(link) = " << rhs.str() << " " << pass_fail(agree) << "\n";
    }
  }
  if (opts.format == "json") emit(out, std::cout);
  if (vertices.empty() && opts.format == "pretty")
    std::cout << "no interior vertices for n=" << n << ", r=" << r << "\n";
  return all_agree ? 0 : kExitCheckFailed;
}

int run_roots(int n, int r, const Options& opts) {
  require_positive(n, "n");
  require_positive(r, "r");
  IntPolynomial lh = edgewise::local_h_via_operator(n, r);
  bool rooted = edgewise::is_real_rooted(lh);
  int distinct = lh.is_zero() ? 0 : edgewise::real_root_count(lh);

  if (opts.format == "json") {
    emit(json{{"n", n},
              {"r", r},
              {"polynomial", edgewise::poly_to_json(lh)},
              {"real_rooted", rooted},
              {"distinct_real_roots", distinct}},
         std::cout);
  } else if (opts.format == "csv") {
    std::cout << "n,r,polynomial,real_rooted,distinct_real_roots\n"
              << n << "," << r << "," << csv_quote(lh.str()) << ","
              << (rooted ? "true" : "false") << "," << distinct << "\n";
  } else {
    std::cout << "real-rooted: " << (rooted ? "true" : "false") << ", polynomial " << lh.str()
              << ", distinct real roots " << distinct << "\n";
  }
  return 0;
}

int run_check(const std::string& suite, int n_max, int r_max, int order, std::vector<int> rs,
              const Options& opts) {
  using namespace edgewise::checks;
  if (rs.empty()) rs = {2, 3};
  std::vector<CheckReport> reports;
  auto pick = [&](const std::string& name) { return suite == name || suite == "all"; };

  // Defaults are per suite; explicit --n-max/--r-max override them.
  auto nm = [&](int dflt) { return n_max > 0 ? n_max : dflt; };
  auto rm = [&](int dflt) { return r_max > 0 ? r_max : dflt; };

  if (pick("golden")) reports.push_back(golden());
  if (pick("theorem1")) reports.push_back(theorem1(nm(6), rm(5)));
  if (pick("h-formulas")) reports.push_back(h_formulas(nm(6), rm(5)));
  if (pick("general-complexes")) reports.push_back(general_complexes(rs));
  if (pick("gamma")) reports.push_back(gamma_agreement(nm(10), rm(4)));
  if (pick("hop-structure")) reports.push_back(hop_structure(nm(8), rm(4)));
  if (pick("savage")) reports.push_back(savage(nm(4), rm(4), order));
  if (pick("interior-lift")) reports.push_back(interior_lift(nm(4), rm(4)));
  if (pick("structural")) reports.push_back(structural(nm(4), rm(4), opts.seed));
  if (pick("real-rootedness")) reports.push_back(real_rootedness(nm(8), rm(5)));
  if (reports.empty()) throw UsageError("unknown suite: " + suite);
  return print_reports(reports, opts);
}

struct TableRow {
  int n, r;
  std::string f_vector;  // empty when skipped
  IntPolynomial h, local_h;
  GammaVector xi;
  std::string real_rooted;
};

void print_table(const std::vector<TableRow>& rows, bool with_f, const Options& opts) {
  if (opts.format == "json") {
    json out = json::array();
    for (const auto& row : rows) {
      json j{{"n", row.n},
             {"r", row.r},
             {"h", edgewise::poly_to_json(row.h)},
             {"local_h", edgewise::poly_to_json(row.local_h)},
             {"xi", edgewise::gamma_to_json(row.xi)},
             {"real_rooted", row.real_rooted}};
      if (with_f) j["f_vector"] = row.f_vector;
      out.push_back(std::move(j));
    }
    emit(out, std::cout);
    return;
  }
  std::cout << "n,r," << (with_f ? "f_vector," : "") << "h,local_h,xi,real_rooted\n";
  for (const auto& row : rows) {
    std::cout << row.n << "," << row.r << ",";
    if (with_f) std::cout << csv_quote(row.f_vector) << ",";
    std::cout << csv_quote(row.h.str()) << "," << csv_quote(row.local_h.str()) << ","
              << csv_quote(xi_str(row.xi)) << "," << row.real_rooted << "\n";
  }
}

std::string real_rooted_str(const IntPolynomial& p) {
  return edgewise::is_real_rooted(p) ? "true" : "false";
}

int run_table(int n_min, int n_max, int r_min, int r_max, int max_cells, const Options& opts) {
  require_positive(n_min, "n-min");
  require_positive(r_min, "r-min");
  if (n_max < n_min || r_max < r_min) throw UsageError("empty parameter grid");
  long cells = static_cast<long>(n_max - n_min + 1) * (r_max - r_min + 1);
  if (cells > max_cells)
    throw UsageError("grid of " + std::to_string(cells) + " cells exceeds the limit of " +
                     std::to_string(max_cells) +
                     "; use the streaming esd-stats command for large sweeps");

  std::vector<TableRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    for (int r = r_min; r <= r_max; ++r) {
      guard_lattice_size(n, r, opts);
      TriangulatedSimplex t = edgewise::esd_simplex(n, r);
      TableRow row;
      row.n = n;
      row.r = r;
      row.f_vector = t.complex().f_vector().str();
      row.h = t.complex().h_polynomial();
      row.local_h = t.local_h();
      row.xi = edgewise::gamma_expand(row.local_h, n);
      row.real_rooted = real_rooted_str(row.local_h);
      rows.push_back(std::move(row));
    }
  }
  print_table(rows, true, opts);
  return 0;
}

int run_esd_stats(int n_min, int n_max, int r_min, int r_max, const Options& opts) {
  require_positive(n_min, "n-min");
  require_positive(r_min, "r-min");
  if (n_max < n_min || r_max < r_min) throw UsageError("empty parameter grid");
  std::vector<TableRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    for (int r = r_min; r <= r_max; ++r) {
      TableRow row;
      row.n = n;
      row.r = r;
      row.h = edgewise::e_operator(edgewise::pow(edgewise::ones(r), n), r);
      row.local_h = edgewise::local_h_via_operator(n, r);
      row.xi = edgewise::gamma_expand(row.local_h, n);
      row.real_rooted = real_rooted_str(row.local_h);
      rows.push_back(std::move(row));
    }
  }
  print_table(rows, false, opts);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edgewise subdivisions of simplicial complexes: h-polynomials, "
               "local h-polynomials, Smirnov words, gamma vectors and the "
               "property-check suites"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  app.failure_message(CLI::FailureMessage::simple);

  Options opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"pretty", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", opts.seed, "Seed for randomized check ordering")
      ->capture_default_str();
  app.add_flag("--unsafe-large", opts.unsafe_large,
               "Disable the size guard on face-lattice commands");

  int n = 0, r = 0;

  auto* esd = app.add_subcommand("esd", "Construct the r-fold edgewise subdivision");
  std::string complex_path, out_path;
  esd->add_option("--n", n, "Number of base simplex vertices");
  esd->add_option("--r", r, "Subdivision parameter")->required();
  esd->add_option("--complex", complex_path, "Subdivide the complex in this JSON file instead");
  esd->add_option("--out", out_path, "Output file (default: stdout)");

  auto* local_h = app.add_subcommand("local-h", "Local h-polynomial of the subdivided simplex");
  std::string method = "all";
  local_h->add_option("--n", n)->required();
  local_h->add_option("--r", r)->required();
  local_h->add_option("--method", method, "definition|operator|words|all")
      ->capture_default_str();

  auto* gamma = app.add_subcommand("gamma", "Gamma vector of the local h-polynomial");
  std::string gamma_method = "both";
  gamma->add_option("--n", n)->required();
  gamma->add_option("--r", r)->required();
  gamma->add_option("--method", gamma_method, "words|expand|both")->capture_default_str();

  auto* words = app.add_subcommand("words", "Enumerate the anchored Smirnov words");
  bool canonical_only = false, stats = false;
  words->add_option("--n", n)->required();
  words->add_option("--r", r)->required();
  words->add_flag("--canonical-only", canonical_only, "Only hop-class representatives");
  words->add_flag("--stats", stats, "Add double-descent, canonical and match-count columns");

  auto* hop = app.add_subcommand("hop-class", "Hop classes of the words");
  std::string word_csv;
  hop->add_option("--n", n)->required();
  hop->add_option("--r", r)->required();
  hop->add_option("--word", word_csv, "Single class of this word (comma-separated entries)");

  auto* lemma41 = app.add_subcommand(
      "lemma41", "Cone-plus-stellar lift at interior vertices: local h vs x*h(link)");
  std::string vertex_label;
  lemma41->add_option("--n", n)->required();
  lemma41->add_option("--r", r)->required();
  lemma41->add_option("--vertex", vertex_label, "Interior vertex label, e.g. \"(1,1,1)\"");

  auto* roots = app.add_subcommand("roots", "Real-rootedness of the local h-polynomial");
  roots->add_option("--n", n)->required();
  roots->add_option("--r", r)->required();

  auto* check = app.add_subcommand("check", "Run a property-check suite");
  std::string suite = "all";
  int n_max = 0, r_max = 0, order = 8;
  std::vector<int> rs;
  check->add_option("--suite", suite,
                    "golden|theorem1|h-formulas|general-complexes|gamma|hop-structure|savage|"
                    "interior-lift|structural|real-rootedness|all")
      ->capture_default_str();
  check->add_option("--n-max", n_max, "Override the suite's default grid bound");
  check->add_option("--r-max", r_max, "Override the suite's default grid bound");
  check->add_option("--order", order, "Truncation order for the savage suite")
      ->capture_default_str();
  check->add_option("--rs", rs, "Subdivision depths for the general-complexes suite");

  auto* table = app.add_subcommand("table", "Tabulate invariants over a parameter grid");
  int n_min = 1, r_min = 1, t_n_max = 3, t_r_max = 3, max_cells = kDefaultMaxCells;
  table->add_option("--n-min", n_min)->capture_default_str();
  table->add_option("--n-max", t_n_max)->capture_default_str();
  table->add_option("--r-min", r_min)->capture_default_str();
  table->add_option("--r-max", t_r_max)->capture_default_str();
  table->add_option("--max-cells", max_cells, "Grid size limit")->capture_default_str();

  auto* esd_stats = app.add_subcommand(
      "esd-stats", "Stream closed-formula invariants over a grid (no face enumeration)");
  int s_n_min = 1, s_n_max = 8, s_r_min = 1, s_r_max = 5;
  esd_stats->add_option("--n-min", s_n_min)->capture_default_str();
  esd_stats->add_option("--n-max", s_n_max)->capture_default_str();
  esd_stats->add_option("--r-min", s_r_min)->capture_default_str();
  esd_stats->add_option("--r-max", s_r_max)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*esd) return run_esd(n, r, complex_path, out_path, opts);
    if (*local_h) return run_local_h(n, r, method, opts);
    if (*gamma) return run_gamma(n, r, gamma_method, opts);
    if (*words) return run_words(n, r, canonical_only, stats, opts);
    if (*hop) return run_hop_class(n, r, word_csv, opts);
    if (*lemma41) return run_lemma41(n, r, vertex_label, opts);
    if (*roots) return run_roots(n, r, opts);
    if (*check) return run_check(suite, n_max, r_max, order, rs, opts);
    if (*table) return run_table(n_min, t_n_max, r_min, t_r_max, max_cells, opts);
    if (*esd_stats) return run_esd_stats(s_n_min, s_n_max, s_r_min, s_r_max, opts);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
