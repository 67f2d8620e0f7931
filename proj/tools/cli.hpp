#pragma once

// Command-line front end. Every command writes its payload to `out`,
// diagnostics to `err`, and returns the process exit code:
// 0 success / all checks pass, 1 a verification failed, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "tl/complex.hpp"

namespace tl::cli {

inline constexpr char const* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

enum class Format { text, csv, json };

int cmd_tables(std::string const& kind, int max_n, Format format, std::ostream& out, std::ostream& err);
int cmd_mul(int n, std::string const& word_x, std::string const& word_y, std::ostream& out, std::ostream& err);
int cmd_basis(int n, int m, bool verbose, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  int n_max = 0;
  std::vector<std::string> checks;  // empty means every check
  ConventionTag convention = ConventionTag::A;
  std::vector<Rational> points = default_points();
  Format format = Format::text;
  std::string emit_matrices;  // path; empty disables
};

/// Names accepted by `verify`, in report order.
std::vector<std::string> const& all_checks();

/// Runs the checks for 1 <= n <= n_max and returns the report.
nlohmann::ordered_json run_verify(VerifyOptions const& options);
int cmd_verify(VerifyOptions const& options, std::ostream& out, std::ostream& err);

/// Bases (Dyck words) and differential entries (polynomial text) of W(n).
nlohmann::ordered_json complex_to_json(ChainComplexData const& cx);

/// Parses argv and dispatches; the whole CLI behind `main`.
int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tl::cli
