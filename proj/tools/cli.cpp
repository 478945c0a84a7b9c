#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>

#include "cscrystal/bzl.hpp"
#include "cscrystal/crystal.hpp"
#include "cscrystal/error.hpp"
#include "cscrystal/format.hpp"
#include "cscrystal/hpoly.hpp"
#include "cscrystal/laurent.hpp"

namespace cscrystal::cli {

namespace {

struct RunConfig {
  int rank = 0;
  std::string lambda_text = "";
  bool partition = false;
  bool shifted = false;
  std::string format = "text";
  std::vector<std::string> at;
  std::string tableau;
  std::optional<unsigned> threads;
  bool timing = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned resolve_threads(const RunConfig& cfg) {
  if (cfg.threads) return std::max(1u, *cfg.threads);
  if (const char* env = std::getenv("CS_CRYSTAL_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

GLWeight parse_lambda(const RunConfig& cfg) {
  if (cfg.rank < 1) throw UsageError("--rank must be at least 1");
  const std::vector<int> values = parse_int_list(cfg.lambda_text);
  if (cfg.partition) return lambda_from_partition(values, cfg.rank);
  return lambda_from_fundamental(values, cfg.rank);
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw UsageError("format '" + cfg.format + "' is not available for this command");
}

std::string pad(const std::string& s, std::size_t width) {
  // Display width counts code points, not bytes.
  std::size_t shown = 0;
  for (unsigned char c : s) shown += (c & 0xC0) != 0x80 ? 1 : 0;
  return shown >= width ? s + " " : s + std::string(width - shown, ' ');
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const GLWeight lam = parse_lambda(cfg);
  const GLWeight top = cfg.shifted ? lam + rho(cfg.rank) : lam;
  const auto crystal = enumerate_crystal(Shape(top));
  if (cfg.format == "json") {
    Json elements = Json::array();
    for (const auto& b : crystal) elements.push_back({{"rows", b.rows()}, {"content", content(b).vec()}});
    Json j{{"rank", cfg.rank},       {"lambda", lam.vec()},         {"shifted", cfg.shifted},
           {"shape", top.vec()},     {"count", crystal.size()},     {"elements", elements}};
    out << j.dump(2) << "\n";
    return kSuccess;
  }
  out << "B" << format_int_tuple(top.vec()) << " rank " << cfg.rank << "\n";
  std::size_t width = 0;
  for (const auto& b : crystal) width = std::max(width, to_one_line(b).size());
  for (const auto& b : crystal) out << pad(to_one_line(b), width + 2) << format_int_tuple(content(b).vec()) << "\n";
  out << "count: " << crystal.size() << "\n";
  return kSuccess;
}

int cmd_bzl(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_format(cfg, {"text", "json"});
  if (cfg.rank < 1) throw UsageError("--rank must be at least 1");
  if (cfg.tableau.empty()) throw UsageError("--tableau is required");
  const Tableau t = parse_one_line(cfg.rank, cfg.tableau);
  if (!t.shape().is_strict())
    throw UsageError("tableau shape " + format_int_tuple(t.shape().parts()) +
                     " is not strictly decreasing down to 0");
  const DecoratedTriangle ops = decorate_via_operators(t);
  const DecoratedTriangle stats = decorate_via_stats(t);
  const bool agree = ops == stats && bzl_path(t).values() == ops.values();
  const QLaurent g = g_coefficient(stats);
  const TPoly c = c_coefficient(t);
  if (cfg.format == "json") {
    Json g_json = Json::object();
    for (const auto& [k, v] : g.terms()) g_json[std::to_string(k)] = v.get_str();
    Json j{{"tableau", to_json(t)},   {"strict", is_strict(t)},      {"theta", theta(t.shape())},
           {"operators", to_json(ops)}, {"stats", to_json(stats)},  {"rules_agree", agree},
           {"g", g_json},             {"c", to_json(c)}};
    out << j.dump(2) << "\n";
  } else {
    out << "tableau:    " << to_one_line(t) << "\n";
    out << "shape:      " << format_int_tuple(t.shape().parts()) << "  theta " << format_int_tuple(theta(t.shape()))
        << "  strict " << (is_strict(t) ? "yes" : "no") << "\n";
    out << "bzl path:   " << render_triangle(bzl_path(t), false) << "\n";
    out << "stats a:    " << render_triangle(stats, false) << "\n";
    out << "B-I/C-I:    " << render_triangle(ops) << "\n";
    out << "B-II/C-II:  " << render_triangle(stats) << "\n";
    out << "agree:      " << (agree ? "yes" : "no") << "\n";
    out << "G(b):       " << g.to_string() << "\n";
    out << "C(b):       " << c.to_string() << "   (t = q^-1)\n";
  }
  if (!agree) {
    err << "error: operator and statistic decorations disagree\n";
    return kInvariantBreach;
  }
  return kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_format(cfg, {"text", "json"});
  const GLWeight lam = parse_lambda(cfg);
  const unsigned threads = resolve_threads(cfg);
  const auto start = std::chrono::steady_clock::now();
  const IdentityReport id = verify_identity(lam, threads);
  const BnReport bn = verify_bn_form(lam, threads);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = id.equal && bn.holds;
  if (cfg.format == "json") {
    Json j{{"rank", cfg.rank},
           {"lambda", lam.vec()},
           {"crystal_size", id.crystal_size},
           {"identity", {{"equal", id.equal}, {"lhs_terms", id.lhs_terms}, {"rhs_terms", id.rhs_terms}}},
           {"bn_form",
            {{"holds", bn.holds},
             {"polynomial_identity", bn.polynomial_identity},
             {"scalar_relation", bn.scalar_relation},
             {"height_relation", bn.height_relation}}},
           {"ok", ok}};
    if (id.first_mismatch) j["identity"]["first_mismatch"] = *id.first_mismatch;
    if (cfg.timing) j["seconds"] = seconds;
    out << j.dump(2) << "\n";
  } else {
    out << "lambda " << format_int_tuple(lam.vec()) << ", rank " << cfg.rank << ", |B(lambda+rho)| = "
        << id.crystal_size << "\n";
    out << "crystal sum identity: " << (id.equal ? "equal" : "MISMATCH") << " (lhs " << id.lhs_terms
        << " terms, rhs " << id.rhs_terms << " terms)\n";
    out << "w0-twisted G form:    " << (bn.holds ? "holds" : "FAILS") << "\n";
    if (cfg.timing) out << "seconds: " << seconds << "\n";
  }
  if (id.first_mismatch) err << "first differing monomial: z^" << format_int_tuple(*id.first_mismatch) << "\n";
  return ok ? kSuccess : kMismatch;
}

std::optional<SpecialPoint> parse_point(const std::string& s) {
  if (s == "inf") return SpecialPoint::QInf;
  if (s == "-1") return SpecialPoint::QMinusOne;
  if (s == "1") return SpecialPoint::QOne;
  return std::nullopt;
}

int cmd_hpoly(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json", "csv", "latex"});
  const GLWeight lam = parse_lambda(cfg);
  std::vector<std::pair<std::string, SpecialPoint>> points;
  for (const auto& a : cfg.at) {
    auto p = parse_point(a);
    if (!p) throw UsageError("--at expects inf, -1 or 1");
    points.emplace_back(a, *p);
  }
  const HTable table = h_table(lam, resolve_threads(cfg));

  struct Check {
    Integer value;
    Integer oracle;
  };
  std::vector<std::vector<Check>> checks;
  bool all_ok = true;
  for (const auto& row : table.rows()) {
    auto& line = checks.emplace_back();
    for (const auto& [name, p] : points) {
      line.push_back({specialize(row.h, p), specialization_oracle(lam, row.mu, p)});
      all_ok = all_ok && line.back().value == line.back().oracle;
    }
  }

  if (cfg.format == "json") {
    Json j = to_json(table);
    for (std::size_t k = 0; k < table.rows().size(); ++k) {
      Json at = Json::object();
      for (std::size_t m = 0; m < points.size(); ++m)
        at[points[m].first] = {{"value", checks[k][m].value.get_str()},
                               {"oracle", checks[k][m].oracle.get_str()},
                               {"ok", checks[k][m].value == checks[k][m].oracle}};
      if (!points.empty()) j["rows"][k]["at"] = at;
    }
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::string csv = to_csv(table);
    if (points.empty()) {
      out << csv;
    } else {
      std::istringstream in(csv);
      std::string line;
      std::getline(in, line);
      out << line;
      for (const auto& [name, p] : points) out << ",at_" << name << ",ok_" << name;
      out << "\n";
      for (std::size_t k = 0; std::getline(in, line); ++k) {
        out << line;
        for (const auto& c : checks[k]) out << "," << c.value.get_str() << "," << (c.value == c.oracle ? 1 : 0);
        out << "\n";
      }
    }
  } else if (cfg.format == "latex") {
    out << to_latex(table);
  } else {
    out << "H_{lambda+rho}(mu; q), lambda = " << format_int_tuple(lam.vec()) << ", rank " << cfg.rank
        << ", t = q^-1\n";
    std::size_t mu_w = 4, h_w = 8;
    for (const auto& row : table.rows()) {
      mu_w = std::max(mu_w, format_alpha(row.mu).size() + 2);
      h_w = std::max(h_w, row.h.to_string().size() + 2);
    }
    out << pad("mu", mu_w) << pad("H", h_w);
    for (const auto& [name, p] : points) out << pad("at " + name, 12);
    out << "\n";
    for (std::size_t k = 0; k < table.rows().size(); ++k) {
      const auto& row = table.rows()[k];
      out << pad(format_alpha(row.mu), mu_w) << pad(row.h.to_string(), h_w);
      for (const auto& c : checks[k])
        out << pad(c.value.get_str() + (c.value == c.oracle ? " ✓" : " ✗ (" + c.oracle.get_str() + ")"), 12);
      out << "\n";
    }
    out << "rows: " << table.rows().size() << "\n";
  }
  return all_ok ? kSuccess : kMismatch;
}

int cmd_graph(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "dot"});
  const GLWeight lam = parse_lambda(cfg);
  const GLWeight top = cfg.shifted ? lam + rho(cfg.rank) : lam;
  out << to_dot(crystal_graph(Shape(top)));
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Type A crystals, decorated BZL paths and the crystal Casselman-Shalika sum", "cs_crystal"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool with_lambda) {
    sub->add_option("--rank", cfg.rank, "rank r of sl_{r+1}")->required();
    if (with_lambda) {
      sub->add_option("--lambda", cfg.lambda_text, "fundamental-weight coefficients c1,...,cr")->required();
      sub->add_flag("--partition", cfg.partition, "read --lambda as a partition l1,l2,...");
    }
    sub->add_option("--format", cfg.format, "text, json, csv, latex or dot");
    sub->add_option("--threads", cfg.threads, "worker threads (default: CS_CRYSTAL_THREADS or 1)");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list the elements of B(lambda) or B(lambda+rho)");
  add_common(enumerate, true);
  enumerate->add_flag("--shifted", cfg.shifted, "enumerate B(lambda+rho)");

  auto* bzl = app.add_subcommand("bzl", "BZL path, decorations and coefficients of one tableau");
  add_common(bzl, false);
  bzl->add_option("--tableau", cfg.tableau, "rows, e.g. \"1 2 2 / 3 3\"")->required();

  auto* verify = app.add_subcommand("verify", "check the crystal sum identity for lambda");
  add_common(verify, true);
  verify->add_flag("--timing", cfg.timing, "include wall-clock time in the report");

  auto* hpoly = app.add_subcommand("hpoly", "table of H_{lambda+rho}(mu; q)");
  add_common(hpoly, true);
  hpoly->add_option("--at", cfg.at, "append the specialization at q = inf, -1 or 1");

  auto* graph = app.add_subcommand("graph", "crystal graph in DOT");
  add_common(graph, true);
  graph->add_flag("--shifted", cfg.shifted, "use B(lambda+rho)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(cfg, out);
    if (*bzl) return cmd_bzl(cfg, out, err);
    if (*verify) return cmd_verify(cfg, out, err);
    if (*hpoly) return cmd_hpoly(cfg, out);
    if (*graph) return cmd_graph(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const cscrystal::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace cscrystal::cli
