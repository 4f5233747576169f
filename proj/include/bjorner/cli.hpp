#pragma once

// Command-line front end. `run_cli` is the whole program; tools/bjorner.cpp
// only forwards argv to it, and the tests drive it in-process.
//
// Exit codes: 0 success or property holds, 1 property violated (the JSON
// payload carries the witness), 2 usage error.

#include "bjorner/face_vectors.hpp"
#include "bjorner/genfun.hpp"
#include "bjorner/json_io.hpp"
#include "bjorner/matrices.hpp"
#include "bjorner/matrix.hpp"
#include "bjorner/tnn.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace bjorner::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& matrix_kinds() {
  static const std::vector<std::string> kinds{"g", "gamma", "a+", "a-", "g+", "g-", "cap-gamma", "g-from-gamma"};
  return kinds;
}

/// The matrix window named by `kind` for dimension d. Face matrices are
/// (d+1) x (n+1); left factors are the same size; right factors and the
/// gamma-to-g matrix are (n+1) x (n+1), with n = floor(d/2).
inline ExactMatrix matrix_for_kind(std::string_view kind, unsigned d) {
  const unsigned n = d / 2;
  if (kind == "g") return face_matrix_g(d);
  if (kind == "gamma") return face_matrix_gamma(d);
  if (kind == "a+") return left_factor(Parity::plus, d + 1, n + 1);
  if (kind == "a-") return left_factor(Parity::minus, d + 1, n + 1);
  if (kind == "g+") return g_right_factor(Parity::plus, n);
  if (kind == "g-") return g_right_factor(Parity::minus, n);
  if (kind == "cap-gamma") return gamma_right_factor(n);
  if (kind == "g-from-gamma") return gamma_to_g_matrix(d);
  throw UsageError("unknown matrix kind '" + std::string(kind) + "'");
}

namespace detail {

inline unsigned natural(long long v, const char* flag) {
  if (v < 0) throw UsageError(std::string(flag) + " must be a natural number, got " + std::to_string(v));
  if (v > 100000) throw UsageError(std::string(flag) + " is unreasonably large: " + std::to_string(v));
  return static_cast<unsigned>(v);
}

inline Sequence parse_values(const std::string& text) {
  Sequence out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_integer(item));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--values: ") + e.what());
    }
  }
  if (out.empty()) throw UsageError("--values: empty list");
  return out;
}

inline std::string join(std::span<const std::string> parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += ' ';
    s += p;
  }
  return s;
}

inline void write_csv(std::ostream& out, const ExactMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) out << (j ? "," : "") << to_decimal(m(i, j));
    out << '\n';
  }
}

inline void write_plain(std::ostream& out, const ExactMatrix& m) {
  std::vector<std::size_t> width(m.cols(), 0);
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) width[j] = std::max(width[j], to_decimal(m(i, j)).size());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j)
      out << (j ? "  " : "") << std::setw(static_cast<int>(width[j])) << to_decimal(m(i, j));
    out << '\n';
  }
}

inline void write_sequence(std::ostream& out, std::span<const Integer> v, std::string_view sep) {
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << to_decimal(v[i]);
  out << '\n';
}

inline Sequence convert(std::string_view from, std::string_view to, unsigned d, const Sequence& values) {
  try {
    if (from == "g" && to == "f") return f_from_g(d, values);
    if (from == "g" && to == "h") return h_from_g(d, values);
    if (from == "gamma" && to == "f") return f_from_gamma(d, values);
    if (from == "gamma" && to == "g") return g_from_gamma(d, values);
    if (from == "gamma" && to == "h") return h_from_g(d, g_from_gamma(d, values));
    if (from == "h" && to == "g") return g_from_h(d, values);
    if (from == "h" && to == "f") return f_from_g(d, g_from_h(d, values));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unsupported conversion " + std::string(from) + " -> " + std::string(to));
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact face-number matrices of simple polytopes and their totally non-negative factorizations",
               "bjorner"};
  app.require_subcommand(1);
  app.set_version_flag("--version", json::kToolVersion);

  const std::vector<std::string> formats{"json", "csv", "plain"};
  const std::string command = detail::join(args);

  // matrix
  std::string m_kind;
  long long m_dim = 0;
  std::string m_format = "json";
  auto* matrix = app.add_subcommand("matrix", "Print a matrix window for dimension d");
  matrix->add_option("--kind", m_kind, "Matrix kind")->required()->check(CLI::IsMember(matrix_kinds()));
  matrix->add_option("--dim", m_dim, "Polytope dimension d")->required();
  matrix->add_option("--format", m_format, "Output format")->check(CLI::IsMember(formats));

  // convert
  std::string c_from, c_to, c_values, c_format = "json";
  long long c_dim = 0;
  auto* convert = app.add_subcommand("convert", "Convert between g, gamma, h and f sequences");
  convert->add_option("--from", c_from, "Source sequence")->required()->check(CLI::IsMember({"g", "gamma", "h"}));
  convert->add_option("--to", c_to, "Target sequence")->required()->check(CLI::IsMember({"f", "g", "h"}));
  convert->add_option("--dim", c_dim, "Polytope dimension d")->required();
  convert->add_option("--values", c_values, "Comma-separated integers")->required();
  convert->add_option("--format", c_format, "Output format")->check(CLI::IsMember(formats));

  // check
  auto* check = app.add_subcommand("check", "Check a property; exit 1 when it fails");
  check->require_subcommand(1);
  long long k_dim = 0, k_n = 0, k_a = 0, k_max_order = -1;
  unsigned k_threads = 1;
  std::string k_kind, k_values;
  auto* factorization = check->add_subcommand("factorization", "Verify the three factorizations in dimension d");
  factorization->add_option("--dim", k_dim, "Polytope dimension d")->required();
  auto* tnn = check->add_subcommand("tnn", "Brute-force total non-negativity of a matrix window");
  tnn->add_option("--kind", k_kind, "Matrix kind")->required()->check(CLI::IsMember(matrix_kinds()));
  tnn->add_option("--dim", k_dim, "Polytope dimension d")->required();
  tnn->add_option("--max-order", k_max_order, "Largest minor order to examine (default: all)");
  tnn->add_option("--threads", k_threads, "Worker threads for minor enumeration");
  auto* id1 = check->add_subcommand("identity1", "Even-dimension binomial identity for n");
  id1->add_option("--n", k_n, "n")->required();
  auto* id2 = check->add_subcommand("identity2", "Odd-dimension binomial identity for n");
  id2->add_option("--n", k_n, "n")->required();
  auto* genfun = check->add_subcommand("genfun", "Closed form and differential equations for F_a, G_a");
  genfun->add_option("--a", k_a, "a")->required();
  auto* ds = check->add_subcommand("dehn-somerville", "Whether an f-vector satisfies Dehn-Somerville");
  ds->add_option("--dim", k_dim, "Polytope dimension d")->required();
  ds->add_option("--values", k_values, "Comma-separated f-vector")->required();

  // catalogue
  auto* catalogue = app.add_subcommand("catalogue", "Closed-form face data of named polytopes");
  catalogue->require_subcommand(1);
  long long g_dim = 0, g_vertices = 0;
  auto* simplex = catalogue->add_subcommand("simplex", "d-simplex");
  simplex->add_option("--dim", g_dim, "Dimension")->required();
  auto* cube = catalogue->add_subcommand("cube", "d-cube");
  cube->add_option("--dim", g_dim, "Dimension")->required();
  auto* polygon = catalogue->add_subcommand("polygon", "m-gon");
  polygon->add_option("--vertices", g_vertices, "Number of vertices m")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << json::kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  auto emit = [&](std::string_view kind, json::Json payload) {
    out << json::envelope(kind, std::move(payload), command).dump(2) << '\n';
  };

  try {
    if (*matrix) {
      const unsigned d = detail::natural(m_dim, "--dim");
      const ExactMatrix m = matrix_for_kind(m_kind, d);
      if (m_format == "csv") {
        detail::write_csv(out, m);
      } else if (m_format == "plain") {
        detail::write_plain(out, m);
      } else {
        emit("matrix", {{"name", m_kind}, {"d", d}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", json::encode(m)}});
      }
      return kExitOk;
    }

    if (*convert) {
      const unsigned d = detail::natural(c_dim, "--dim");
      const Sequence result = detail::convert(c_from, c_to, d, detail::parse_values(c_values));
      if (c_format == "csv") {
        detail::write_sequence(out, result, ",");
      } else if (c_format == "plain") {
        detail::write_sequence(out, result, " ");
      } else {
        emit("vector", {{"d", d}, {"from", c_from}, {"to", c_to}, {"values", json::encode(result)}});
      }
      return kExitOk;
    }

    if (*check) {
      if (*factorization) {
        const FactorizationReport r = verify_factorization(detail::natural(k_dim, "--dim"));
        emit("report", json::encode(r));
        return r.holds() ? kExitOk : kExitViolated;
      }
      if (*tnn) {
        const unsigned d = detail::natural(k_dim, "--dim");
        TnnOptions opts;
        if (k_max_order >= 0) opts.max_order = detail::natural(k_max_order, "--max-order");
        opts.threads = k_threads;
        const TnnVerdict v = all_minors_nonnegative(matrix_for_kind(k_kind, d), opts);
        json::Json payload = json::encode(v);
        payload["kind"] = k_kind;
        payload["d"] = d;
        emit("verdict", std::move(payload));
        return v.holds ? kExitOk : kExitViolated;
      }
      if (*id1 || *id2) {
        const unsigned n = detail::natural(k_n, "--n");
        const IdentityReport r = *id1 ? identity1_check(n) : identity2_check(n);
        json::Json payload = json::encode(r);
        payload["identity"] = *id1 ? "identity1" : "identity2";
        emit("report", std::move(payload));
        return r.holds() ? kExitOk : kExitViolated;
      }
      if (*genfun) {
        const unsigned a = detail::natural(k_a, "--a");
        const bool closed = closed_form_check(a);
        const Poly rg = ode_residual_g(a);
        const Poly rf = ode_residual_f(a, OdeVariant::corrected);
        const Poly rp = ode_residual_f(a, OdeVariant::printed);
        const bool holds = closed && rg.is_zero() && rf.is_zero();
        emit("report", {{"a", a},
                        {"holds", holds},
                        {"f_gen", json::encode(f_gen(a))},
                        {"g_gen", json::encode(g_gen(a))},
                        {"closed_form", closed},
                        {"ode_g_residual", json::encode(rg)},
                        {"ode_f_corrected_residual", json::encode(rf)},
                        {"ode_f_printed_residual", json::encode(rp)}});
        return holds ? kExitOk : kExitViolated;
      }
      if (*ds) {
        const unsigned d = detail::natural(k_dim, "--dim");
        const Sequence f = detail::parse_values(k_values);
        if (f.size() != d + 1)
          throw UsageError("--values: expected " + std::to_string(d + 1) + " face numbers, got " +
                           std::to_string(f.size()));
        const bool holds = check_dehn_somerville(d, f);
        emit("report", {{"d", d}, {"holds", holds}, {"f", json::encode(f)}, {"h", json::encode(h_from_f(d, f))}});
        return holds ? kExitOk : kExitViolated;
      }
    }

    if (*catalogue) {
      CatalogueEntry e;
      if (*simplex) e = catalogue_simplex(detail::natural(g_dim, "--dim"));
      if (*cube) e = catalogue_cube(detail::natural(g_dim, "--dim"));
      if (*polygon) {
        const unsigned m = detail::natural(g_vertices, "--vertices");
        if (m < 3) throw UsageError("--vertices must be at least 3, got " + std::to_string(m));
        e = catalogue_polygon(m);
      }
      emit("report", json::encode(e));
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace bjorner::cli
