#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "tl/combin.hpp"
#include "tl/jacobsthal.hpp"

namespace tl::cli {

namespace {

using nlohmann::ordered_json;

ordered_json json_int(Integer const& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

std::string join(std::vector<std::string> const& items, char const* sep) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k > 0) out += sep;
    out += items[k];
  }
  return out;
}

// ---- tables ---------------------------------------------------------------

int emit_sequence(std::string const& kind, int first, std::vector<Integer> const& values, Format format,
                  std::ostream& out) {
  switch (format) {
    case Format::text: {
      std::vector<std::string> cells;
      for (auto const& v : values) cells.push_back(v.get_str());
      out << kind << ": " << join(cells, ", ") << '\n';
      break;
    }
    case Format::csv:
      out << "n," << kind << '\n';
      for (std::size_t k = 0; k < values.size(); ++k) out << first + static_cast<int>(k) << ',' << values[k].get_str() << '\n';
      break;
    case Format::json: {
      ordered_json doc;
      doc["schema"] = kSchemaVersion;
      doc["kind"] = kind;
      doc["first_n"] = first;
      doc["values"] = ordered_json::array();
      for (auto const& v : values) doc["values"].push_back(json_int(v));
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return 0;
}

int emit_bgrid(int max_n, Format format, std::ostream& out) {
  switch (format) {
    case Format::text:
      for (int n = 0; n <= max_n; ++n) {
        std::vector<std::string> cells;
        for (int m = 0; m <= n; ++m) cells.push_back(first_peak_count_B(n, m).get_str());
        out << "n=" << n << ": " << join(cells, " ") << '\n';
      }
      break;
    case Format::csv:
      out << "n,m,B\n";
      for (int n = 0; n <= max_n; ++n)
        for (int m = 0; m <= n; ++m) out << n << ',' << m << ',' << first_peak_count_B(n, m).get_str() << '\n';
      break;
    case Format::json: {
      ordered_json doc;
      doc["schema"] = kSchemaVersion;
      doc["kind"] = "bgrid";
      doc["rows"] = ordered_json::array();
      for (int n = 0; n <= max_n; ++n) {
        ordered_json row = ordered_json::array();
        for (int m = 0; m <= n; ++m) row.push_back(json_int(first_peak_count_B(n, m)));
        doc["rows"].push_back(row);
      }
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return 0;
}

int emit_multiplicities(int max_n, Format format, std::ostream& out) {
  ordered_json doc;
  doc["schema"] = kSchemaVersion;
  doc["kind"] = "multiplicities";
  doc["rows"] = ordered_json::array();
  if (format == Format::csv) out << "n,shape,multiplicity,syt\n";
  for (int n = 0; n <= max_n; ++n) {
    std::vector<std::string> cells;
    for (auto shape : two_column_partitions(n)) {
      Integer mult = theorem_C_multiplicity(shape);
      auto f = enumerate_syt(shape).size();
      cells.push_back(to_string(shape) + "=" + mult.get_str());
      if (format == Format::csv) out << n << ',' << '"' << to_string(shape) << '"' << ',' << mult.get_str() << ',' << f << '\n';
      doc["rows"].push_back({{"n", n}, {"shape", to_string(shape)}, {"multiplicity", json_int(mult)}, {"syt", f}});
    }
    if (format == Format::text) out << "n=" << n << ": " << join(cells, " ") << '\n';
  }
  if (format == Format::json) out << doc.dump(2) << '\n';
  return 0;
}

// ---- verify ---------------------------------------------------------------

struct CheckResult {
  bool pass;
  ordered_json details;
};

// Lazily built per-n artifacts shared by the checks of one run.
class Workspace {
 public:
  Workspace(Convention convention, std::vector<Rational> points)
      : convention_(std::move(convention)), points_(std::move(points)) {}

  Convention const& convention() const { return convention_; }
  std::vector<Rational> const& points() const { return points_; }

  ChainComplexData const& complex(int n) {
    auto it = complexes_.find(n);
    if (it == complexes_.end()) it = complexes_.emplace(n, build_complex(n, convention_)).first;
    return it->second;
  }

  HomologyReport const& homology(int n) {
    auto it = homology_.find(n);
    if (it == homology_.end()) it = homology_.emplace(n, homology_ranks(complex(n), points_)).first;
    return it->second;
  }

  TheoremDReport const& theorem_D(int n) {
    auto it = theorem_D_.find(n);
    if (it == theorem_D_.end()) it = theorem_D_.emplace(n, verify_theorem_D(complex(n))).first;
    return it->second;
  }

  std::map<int, ChainComplexData> const& complexes() const { return complexes_; }

 private:
  Convention convention_;
  std::vector<Rational> points_;
  std::map<int, ChainComplexData> complexes_;
  std::map<int, HomologyReport> homology_;
  std::map<int, TheoremDReport> theorem_D_;
};

CheckResult check_relations(int n, Workspace&) {
  long checked = 0;
  bool ok = true;
  ordered_json failures = ordered_json::array();
  for (int i = 1; i <= n - 1; ++i) {
    Diagram ui = generator_U(n, i);
    auto sq = multiply(ui, ui);
    ++checked;
    if (!(sq.diagram == ui && sq.loops == 1)) {
      ok = false;
      failures.push_back("U_" + std::to_string(i) + "^2");
    }
    for (int j = 1; j <= n - 1; ++j) {
      if (j == i) continue;
      Diagram uj = generator_U(n, j);
      ++checked;
      if (std::abs(i - j) >= 2) {
        auto ab = multiply(ui, uj);
        auto ba = multiply(uj, ui);
        if (!(ab.diagram == ba.diagram && ab.loops == 0 && ba.loops == 0)) {
          ok = false;
          failures.push_back("U_" + std::to_string(i) + " U_" + std::to_string(j) + " commute");
        }
      } else {
        auto ij = multiply(ui, uj);
        auto iji = multiply(ij.diagram, ui);
        if (!(iji.diagram == ui && ij.loops + iji.loops == 0)) {
          ok = false;
          failures.push_back("U_" + std::to_string(i) + " U_" + std::to_string(j) + " U_" + std::to_string(i));
        }
      }
    }
  }
  return {ok, {{"relations_checked", checked}, {"failures", failures}}};
}

CheckResult check_braid(int n, Workspace& ws) {
  auto const& c = ws.convention();
  long checked = 0;
  bool ok = true;
  ordered_json failures = ordered_json::array();
  Element one = Element::one(n);
  for (int i = 1; i <= n - 1; ++i) {
    Element si = braiding_s(n, i, c);
    Element si_inv = braiding_s_inv(n, i, c);
    checked += 3;
    if (!(si * si_inv == one && si_inv * si == one)) {
      ok = false;
      failures.push_back("s_" + std::to_string(i) + " inverse");
    }
    if (augment(si) != c.lambda) {
      ok = false;
      failures.push_back("s_" + std::to_string(i) + " on the trivial module");
    }
    for (int j = i + 1; j <= n - 1; ++j) {
      Element sj = braiding_s(n, j, c);
      ++checked;
      bool holds = (j - i >= 2) ? (si * sj == sj * si) : (si * sj * si == sj * si * sj);
      if (!holds) {
        ok = false;
        failures.push_back("braid s_" + std::to_string(i) + ", s_" + std::to_string(j));
      }
    }
  }
  return {ok, {{"relations_checked", checked}, {"failures", failures}}};
}

CheckResult check_bijection(int n, Workspace&) {
  auto diagrams = enumerate_diagrams(n);
  bool ok = true;
  std::set<std::string> words;
  for (auto const& x : diagrams) {
    DyckWord w = to_dyck(x);
    if (!(from_dyck(w) == x)) ok = false;
    words.insert(w.str());
  }
  ok = ok && words.size() == diagrams.size();
  return {ok, {{"diagrams", diagrams.size()}, {"distinct_words", words.size()}}};
}

CheckResult check_bcounts(int n, Workspace&) {
  std::size_t total = enumerate_diagrams(n).size();
  bool ok = Integer(static_cast<unsigned long>(total)) == catalan(n);
  ordered_json sizes = ordered_json::array();
  for (int m = 0; m <= n; ++m) {
    std::size_t size = black_box_basis(n, m)->size();
    sizes.push_back(size);
    if (Integer(static_cast<unsigned long>(size)) != first_peak_count_B(n, m)) ok = false;
  }
  return {ok, {{"diagrams", total}, {"catalan", json_int(catalan(n))}, {"black_box_sizes", sizes}}};
}

CheckResult check_ddzero(int n, Workspace& ws) {
  int bad = first_nonzero_composite(ws.complex(n));
  ordered_json details{{"first_nonzero_composite", bad < 0 ? ordered_json(nullptr) : ordered_json(bad)}};
  return {bad < 0, details};
}

CheckResult check_euler(int n, Workspace&) {
  auto ranks = chain_ranks(n);
  long chi = euler_characteristic(ranks);
  Integer expected = fine_by_enumeration(n);
  if (n % 2 == 0) expected = -expected;
  return {Integer(chi) == expected, {{"chain_ranks", ranks}, {"chi", chi}, {"expected", json_int(expected)}}};
}

CheckResult check_homology(int n, Workspace& ws) {
  try {
    auto const& h = ws.homology(n);
    ordered_json ranks = ordered_json::array();
    for (auto const& d : h.degrees) ranks.push_back(d.homology_rank);
    Integer f = fine(n);
    bool ok = h.lower_homology_vanishes && Integer(h.fineberg_rank) == f;
    return {ok, {{"homology_ranks", ranks}, {"fineberg_rank", h.fineberg_rank}, {"fine", json_int(f)}}};
  } catch (std::runtime_error const& e) {
    return {false, {{"error", e.what()}}};
  }
}

CheckResult check_hopf(int n, Workspace& ws) {
  try {
    auto const& h = ws.homology(n);
    return {h.euler_characteristic == h.homology_euler_characteristic,
            {{"chain_euler", h.euler_characteristic}, {"homology_euler", h.homology_euler_characteristic}}};
  } catch (std::runtime_error const& e) {
    return {false, {{"error", e.what()}}};
  }
}

CheckResult check_thmB(int n, Workspace&) {
  Integer alternating = fine_by_alternating_B(n);
  return {theorem_B_rank_identity(n), {{"alternating_sum", json_int(alternating)}}};
}

CheckResult check_thmC(int n, Workspace&) {
  bool ok = true;
  Integer weighted = 0;
  ordered_json shapes = ordered_json::array();
  auto partitions = two_column_partitions(n);
  for (auto shape : partitions) {
    Integer odd_top = multiplicity_by_odd_top(shape);
    Integer alternating = multiplicity_by_alternating_N(shape);
    auto f = static_cast<long>(enumerate_syt(shape).size());
    if (odd_top != alternating) ok = false;
    weighted += odd_top * f;
    shapes.push_back({{"shape", to_string(shape)}, {"multiplicity", json_int(odd_top)},
                      {"alternating_N", json_int(alternating)}, {"syt", f}});
  }
  Integer f_n = fine(n);
  if (weighted != f_n) ok = false;
  bool induction = true;
  for (int m = 0; m <= n; ++m) {
    Integer total = 0;
    for (auto shape : partitions) total += count_N(shape, m) * static_cast<long>(enumerate_syt(shape).size());
    if (total != first_peak_count_B(n, m)) induction = false;
  }
  ok = ok && induction;
  return {ok, {{"shapes", shapes}, {"weighted_sum", json_int(weighted)}, {"fine", json_int(f_n)},
               {"induction_identity", induction}}};
}

CheckResult check_thmD(int n, Workspace& ws) {
  auto const& report = ws.theorem_D(n);
  ordered_json degrees = ordered_json::array();
  for (auto const& cmp : report.comparisons) {
    ordered_json entry{{"degree", cmp.degree}, {"ratio_sign", cmp.ratio_sign}, {"match", cmp.match}};
    if (cmp.first_difference) {
      auto const& d = *cmp.first_difference;
      entry["first_difference"] = {{"row", d.row}, {"col", d.col}, {"differential", d.left.to_string()},
                                   {"jacobsthal", d.right.to_string()}};
    }
    degrees.push_back(entry);
  }
  // For n = 1 the only element involved is J_1 = 1, which both signs give.
  bool ok = !report.matching_signs.empty() && (n == 1 || report.matching_signs.size() == 1);
  return {ok, {{"matching_signs", report.matching_signs}, {"comparisons", degrees}}};
}

CheckResult check_fineberg(int n, Workspace& ws) {
  try {
    auto const& report = ws.theorem_D(n);
    if (report.matching_signs.empty()) return {false, {{"error", "no ratio_sign realizes the differentials"}}};
    int sign = report.matching_signs.back();
    long kernel = jacobsthal_kernel_rank(n, ws.convention(), sign, ws.points());
    long homology = ws.homology(n).fineberg_rank;
    Integer f = fine(n);
    return {Integer(kernel) == f && kernel == homology,
            {{"ratio_sign", sign}, {"kernel_rank", kernel}, {"fineberg_rank", homology}, {"fine", json_int(f)}}};
  } catch (std::runtime_error const& e) {
    return {false, {{"error", e.what()}}};
  }
}

using CheckFn = std::function<CheckResult(int, Workspace&)>;

std::vector<std::pair<std::string, CheckFn>> const& check_table() {
  static std::vector<std::pair<std::string, CheckFn>> const table = {
      {"relations", check_relations}, {"braid", check_braid},       {"bijection", check_bijection},
      {"bcounts", check_bcounts},     {"ddzero", check_ddzero},     {"euler", check_euler},
      {"homology", check_homology},   {"hopf", check_hopf},         {"thmB", check_thmB},
      {"thmC", check_thmC},           {"thmD", check_thmD},         {"fineberg", check_fineberg},
  };
  return table;
}

std::string details_summary(ordered_json const& details) {
  ordered_json brief = ordered_json::object();
  for (auto const& [key, value] : details.items())
    if (key != "comparisons" && key != "shapes" && key != "failures") brief[key] = value;
  return brief.dump();
}

}  // namespace

std::vector<std::string> const& all_checks() {
  static std::vector<std::string> const names = [] {
    std::vector<std::string> out;
    for (auto const& [name, fn] : check_table()) out.push_back(name);
    return out;
  }();
  return names;
}

int cmd_tables(std::string const& kind, int max_n, Format format, std::ostream& out, std::ostream& err) {
  if (max_n < 0) {
    err << "tables: max_n must be >= 0\n";
    return 2;
  }
  std::vector<Integer> values;
  if (kind == "catalan") {
    for (int n = 0; n <= max_n; ++n) values.push_back(catalan(n));
    return emit_sequence(kind, 0, values, format, out);
  }
  if (kind == "fine") {
    for (int n = 0; n <= max_n; ++n) values.push_back(fine(n));
    return emit_sequence(kind, 0, values, format, out);
  }
  if (kind == "jacobsthal") {
    for (int n = 1; n <= max_n; ++n) values.push_back(jacobsthal_number(n));
    return emit_sequence(kind, 1, values, format, out);
  }
  if (kind == "bgrid") return emit_bgrid(max_n, format, out);
  if (kind == "multiplicities") return emit_multiplicities(max_n, format, out);
  err << "tables: unknown kind '" << kind << "'\n";
  return 2;
}

int cmd_mul(int n, std::string const& word_x, std::string const& word_y, std::ostream& out, std::ostream& err) {
  for (auto const* w : {&word_x, &word_y}) {
    if (!DyckWord::is_valid(*w) || static_cast<int>(w->size()) != 2 * n) {
      err << "mul: '" << *w << "' is not a Dyck word of length " << 2 * n << '\n';
      return 2;
    }
  }
  if (n > kMaxStrands) {
    err << "mul: at most " << kMaxStrands << " strands\n";
    return 2;
  }
  Element product = Element(from_dyck(word_x)) * Element(from_dyck(word_y));
  out << product.to_string() << '\n';
  return 0;
}

int cmd_basis(int n, int m, bool verbose, std::ostream& out, std::ostream& err) {
  if (n < 0 || n > kMaxStrands || m < 0 || m > n) {
    err << "basis: need 0 <= m <= n <= " << kMaxStrands << '\n';
    return 2;
  }
  auto basis = black_box_basis(n, m);
  for (auto const& d : basis->diagrams()) {
    out << to_dyck(d).str();
    if (verbose) out << ' ' << d.verbose();
    out << '\n';
  }
  return 0;
}

ordered_json complex_to_json(ChainComplexData const& cx) {
  ordered_json doc;
  doc["n"] = cx.strands();
  doc["convention"] = std::string(1, cx.convention().name());
  doc["bases"] = ordered_json::array();
  for (int i = cx.min_degree(); i <= cx.max_degree(); ++i) {
    ordered_json words = ordered_json::array();
    for (auto const& d : cx.basis(i)->diagrams()) words.push_back(to_dyck(d).str());
    doc["bases"].push_back({{"degree", i}, {"box", cx.basis(i)->box()}, {"diagrams", words}});
  }
  doc["differentials"] = ordered_json::array();
  for (int i = 0; i <= cx.max_degree(); ++i) {
    auto const& m = cx.differential(i);
    ordered_json entries = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (auto const& [r, value] : m.column(c)) entries.push_back({r, c, value.to_string()});
    doc["differentials"].push_back({{"degree", i}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}});
  }
  return doc;
}

ordered_json run_verify(VerifyOptions const& options) {
  std::vector<std::string> selected = options.checks.empty() ? all_checks() : options.checks;
  for (auto const& name : selected)
    if (std::find(all_checks().begin(), all_checks().end(), name) == all_checks().end())
      throw std::invalid_argument("unknown check '" + name + "'");
  if (options.n_max < 1) throw std::invalid_argument("--n-max must be >= 1");

  Workspace ws(Convention::make(options.convention), options.points);
  ordered_json report;
  report["schema"] = kSchemaVersion;
  report["tool_version"] = kToolVersion;
  report["n_max"] = options.n_max;
  report["convention"] = std::string(1, ws.convention().name());
  report["points"] = ordered_json::array();
  for (auto const& x : options.points) report["points"].push_back(to_string(x));
  report["checks"] = ordered_json::array();

  bool all_pass = true;
  std::optional<std::set<int>> common_signs;
  for (int n = 1; n <= options.n_max; ++n) {
    for (auto const& [name, fn] : check_table()) {
      if (std::find(selected.begin(), selected.end(), name) == selected.end()) continue;
      CheckResult result = fn(n, ws);
      all_pass = all_pass && result.pass;
      if (name == "thmD") {
        std::set<int> signs(ws.theorem_D(n).matching_signs.begin(), ws.theorem_D(n).matching_signs.end());
        if (!common_signs) {
          common_signs = signs;
        } else {
          std::set<int> both;
          std::set_intersection(common_signs->begin(), common_signs->end(), signs.begin(), signs.end(),
                                std::inserter(both, both.begin()));
          common_signs = both;
        }
      }
      report["checks"].push_back(
          {{"name", name}, {"n", n}, {"status", result.pass ? "pass" : "fail"}, {"details", result.details}});
    }
  }
  if (common_signs) {
    bool ok = common_signs->size() == 1;
    all_pass = all_pass && ok;
    ordered_json signs(std::vector<int>(common_signs->begin(), common_signs->end()));
    report["checks"].push_back({{"name", "thmD"},
                                {"n", "all"},
                                {"status", ok ? "pass" : "fail"},
                                {"details", {{"consistent_ratio_signs", signs}}}});
    if (ok) report["thmD_ratio_sign"] = *common_signs->begin();
  }
  report["status"] = all_pass ? "pass" : "fail";

  if (!options.emit_matrices.empty()) {
    for (int n = 1; n <= options.n_max; ++n) ws.complex(n);
    ordered_json dump;
    dump["schema"] = kSchemaVersion;
    dump["convention"] = std::string(1, ws.convention().name());
    dump["complexes"] = ordered_json::array();
    for (auto const& [n, cx] : ws.complexes()) dump["complexes"].push_back(complex_to_json(cx));
    std::ofstream file(options.emit_matrices);
    if (!file) throw std::runtime_error("cannot open '" + options.emit_matrices + "' for writing");
    file << dump.dump(1) << '\n';
  }
  return report;
}

int cmd_verify(VerifyOptions const& options, std::ostream& out, std::ostream& err) {
  ordered_json report;
  try {
    report = run_verify(options);
  } catch (std::invalid_argument const& e) {
    err << "verify: " << e.what() << '\n';
    return 2;
  }
  bool pass = report["status"] == "pass";
  switch (options.format) {
    case Format::json:
      out << report.dump(2) << '\n';
      break;
    case Format::csv:
      out << "n,check,status\n";
      for (auto const& check : report["checks"])
        out << check["n"].dump() << ',' << check["name"].get<std::string>() << ','
            << check["status"].get<std::string>() << '\n';
      break;
    case Format::text:
      for (auto const& check : report["checks"]) {
        std::string n = check["n"].is_string() ? check["n"].get<std::string>() : check["n"].dump();
        out << (check["status"] == "pass" ? "PASS" : "FAIL") << "  " << check["name"].get<std::string>()
            << "  n=" << n << "  " << details_summary(check["details"]) << '\n';
      }
      out << (pass ? "all checks passed" : "verification FAILED") << '\n';
      break;
  }
  return pass ? 0 : 1;
}

int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Temperley-Lieb diagrams, the complex of planar injective words, and their combinatorics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::map<std::string, Format> const formats{{"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
  std::map<std::string, ConventionTag> const conventions{{"A", ConventionTag::A}, {"B", ConventionTag::B}};

  std::string kind;
  int max_n = 0;
  Format format = Format::text;
  auto* tables = app.add_subcommand("tables", "Sequence tables: catalan, fine, jacobsthal, bgrid, multiplicities");
  tables->add_option("kind", kind)->required()->check(CLI::IsMember({"catalan", "fine", "jacobsthal", "bgrid", "multiplicities"}));
  tables->add_option("max_n", max_n)->required()->check(CLI::NonNegativeNumber);
  tables->add_option("--format", format)->transform(CLI::CheckedTransformer(formats));

  int n = 0;
  std::string word_x;
  std::string word_y;
  auto* mul = app.add_subcommand("mul", "Multiply two diagrams given as Dyck words");
  mul->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
  mul->add_option("x", word_x)->required();
  mul->add_option("y", word_y)->required();

  int m = 0;
  bool verbose = false;
  auto* basis = app.add_subcommand("basis", "List the black-box basis of TL_n (x)_{TL_m} 1");
  basis->add_option("n", n)->required();
  basis->add_option("m", m)->required();
  basis->add_flag("--verbose", verbose, "Also print matched point pairs");

  VerifyOptions options;
  std::string points_text = "2,3";
  auto* verify = app.add_subcommand("verify", "Run theorem checks for 1 <= n <= n-max");
  verify->add_option("checks", options.checks, "Subset of: " + join(all_checks(), ", "))
      ->check(CLI::IsMember(all_checks()));
  verify->add_option("--n-max", options.n_max)->required()->check(CLI::PositiveNumber);
  verify->add_option("--convention", options.convention)->transform(CLI::CheckedTransformer(conventions));
  verify->add_option("--points", points_text, "Comma-separated nonzero rationals");
  verify->add_option("--format", options.format)->transform(CLI::CheckedTransformer(formats));
  verify->add_option("--emit-matrices", options.emit_matrices, "Write W(n) bases and differentials as JSON");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*tables) return cmd_tables(kind, max_n, format, out, err);
    if (*mul) return cmd_mul(n, word_x, word_y, out, err);
    if (*basis) return cmd_basis(n, m, verbose, out, err);
    if (*verify) {
      options.points.clear();
      std::stringstream ss(points_text);
      std::string item;
      while (std::getline(ss, item, ',')) options.points.push_back(parse_rational(item));
      for (auto const& x : options.points)
        if (x == 0) throw std::invalid_argument("v must be a unit");
      return cmd_verify(options, out, err);
    }
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (std::domain_error const& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace tl::cli
