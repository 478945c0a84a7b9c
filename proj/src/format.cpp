#include "cscrystal/format.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cscrystal/error.hpp"

namespace cscrystal {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int parse_int(const std::string& token) {
  const std::string s = trim(token);
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end) throw ParseError("not an integer: '" + token + "'");
  return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer string");
    return x;
  }
  throw ParseError("expected an integer");
}

template <class F>
auto json_guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  if (trim(text).empty()) throw ParseError("empty integer list");
  std::vector<int> out;
  for (const auto& token : split(text, ',')) out.push_back(parse_int(token));
  return out;
}

std::string format_int_tuple(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + ")";
}

std::string to_one_line(const Tableau& t) {
  std::string out;
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    if (i) out += " / ";
    for (std::size_t c = 0; c < t.rows()[i].size(); ++c) out += (c ? " " : "") + std::to_string(t.rows()[i][c]);
  }
  return out;
}

Tableau parse_one_line(int rank, const std::string& text) {
  std::vector<Row> rows;
  for (const auto& part : split(text, '/')) {
    std::istringstream in(part);
    Row row;
    std::string token;
    while (in >> token) row.push_back(parse_int(token));
    if (row.empty()) throw ParseError("empty row in tableau '" + text + "'");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty tableau");
  return Tableau::make(rank, std::move(rows));
}

Json to_json(const Tableau& t) { return Json{{"rank", t.rank()}, {"rows", t.rows()}}; }

Tableau tableau_from_json(const Json& j) {
  return json_guard([&] {
    return Tableau::make(j.at("rank").get<int>(), j.at("rows").get<std::vector<Row>>());
  });
}

std::string render_triangle(const DecoratedTriangle& d, bool markers) {
  std::string out = "(";
  int last_row = 0;
  for (auto [i, j] : d.indices()) {
    if (last_row != 0) out += (i != last_row) ? "; " : ", ";
    last_row = i;
    out += std::to_string(d.value(i, j));
    if (markers) {
      const Decoration dec = d.decoration(i, j);
      if (dec.circled) out += "\u25EF";
      if (dec.boxed) out += "\u25A1";
    }
  }
  return out + ")";
}

Json to_json(const DecoratedTriangle& d) {
  Json entries = Json::array();
  for (auto [i, j] : d.indices()) {
    const Decoration dec = d.decoration(i, j);
    entries.push_back(
        {{"i", i}, {"j", j}, {"value", d.value(i, j)}, {"circled", dec.circled}, {"boxed", dec.boxed}});
  }
  return Json{{"rank", d.rank()},
              {"layout", d.layout() == Layout::Bzl ? "bzl" : "stats"},
              {"entries", entries}};
}

DecoratedTriangle triangle_from_json(const Json& j) {
  return json_guard([&] {
    const std::string layout = j.at("layout").get<std::string>();
    if (layout != "bzl" && layout != "stats") throw ParseError("unknown triangle layout '" + layout + "'");
    DecoratedTriangle d(j.at("rank").get<int>(), layout == "bzl" ? Layout::Bzl : Layout::Stats);
    if (j.at("entries").size() != d.size()) throw ParseError("wrong number of triangle entries");
    for (const auto& e : j.at("entries")) {
      const int i = e.at("i").get<int>();
      const int jj = e.at("j").get<int>();
      d.set_value(i, jj, e.at("value").get<int>());
      d.set_decoration(i, jj, {e.at("circled").get<bool>(), e.at("boxed").get<bool>()});
    }
    return d;
  });
}

Json to_json(const TPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(integer_to_json(c));
  return out;
}

TPoly tpoly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial coefficients must be an array");
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return TPoly(std::move(c));
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.sorted_terms()) out.push_back({{"exp", e}, {"coeff", to_json(c)}});
  return out;
}

LaurentPoly laurent_from_json(int rank, const Json& j) {
  return json_guard([&] {
    LaurentPoly p(rank);
    for (const auto& term : j) {
      auto e = term.at("exp").get<Exponent>();
      if (e.size() != static_cast<std::size_t>(rank + 1)) throw ParseError("exponent length must be rank + 1");
      p.add_term(e, tpoly_from_json(term.at("coeff")));
    }
    return p;
  });
}

namespace {

std::string format_alpha_with(const AlphaVector& mu, const std::string& prefix, const std::string& suffix) {
  std::string out;
  for (int i = 0; i < mu.rank(); ++i) {
    if (mu[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (mu[i] != 1) out += std::to_string(mu[i]);
    out += prefix + std::to_string(i + 1) + suffix;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string format_alpha(const AlphaVector& mu) { return format_alpha_with(mu, "a", ""); }

std::string format_alpha_latex(const AlphaVector& mu) { return format_alpha_with(mu, "\\alpha_", ""); }

std::string format_tpoly_latex(const TPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Integer c = p[k];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (k == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str();
      out += "q^{-" + std::to_string(k) + "}";
    }
  }
  return out;
}

Json to_json(const HTable& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows()) rows.push_back({{"mu", row.mu.coeffs()}, {"h", to_json(row.h)}});
  return Json{{"rank", table.rank()}, {"lambda", table.lambda().vec()}, {"rows", rows}};
}

HTable htable_from_json(const Json& j) {
  return json_guard([&] {
    const int rank = j.at("rank").get<int>();
    GLWeight lam(rank, j.at("lambda").get<std::vector<int>>());
    std::vector<HRow> rows;
    for (const auto& row : j.at("rows")) {
      AlphaVector mu(row.at("mu").get<std::vector<int>>());
      if (mu.rank() != rank) throw ParseError("mu length must equal rank");
      rows.push_back({std::move(mu), tpoly_from_json(row.at("h"))});
    }
    return HTable(std::move(lam), std::move(rows));
  });
}

std::string to_csv(const HTable& table) {
  int width = 1;
  for (const auto& row : table.rows()) width = std::max(width, row.h.degree() + 1);
  std::string out;
  for (int i = 1; i <= table.rank(); ++i) out += "c" + std::to_string(i) + ",";
  for (int k = 0; k < width; ++k) out += (k ? ",t^" : "t^") + std::to_string(k);
  out += "\n";
  for (const auto& row : table.rows()) {
    for (int c : row.mu.coeffs()) out += std::to_string(c) + ",";
    for (int k = 0; k < width; ++k) out += (k ? "," : "") + row.h[k].get_str();
    out += "\n";
  }
  return out;
}

HTable htable_from_csv(const GLWeight& lam, const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty CSV");
  const std::size_t columns = split(line, ',').size();
  const std::size_t r = static_cast<std::size_t>(lam.rank());
  if (columns <= r) throw ParseError("CSV header has too few columns");
  std::vector<HRow> rows;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != columns) throw ParseError("CSV row has the wrong number of cells");
    std::vector<int> mu;
    for (std::size_t k = 0; k < r; ++k) mu.push_back(parse_int(cells[k]));
    std::vector<Integer> coeffs;
    for (std::size_t k = r; k < cells.size(); ++k) {
      Integer x;
      if (x.set_str(trim(cells[k]), 10) != 0) throw ParseError("bad coefficient '" + cells[k] + "'");
      coeffs.push_back(x);
    }
    rows.push_back({AlphaVector(std::move(mu)), TPoly(std::move(coeffs))});
  }
  return HTable(lam, std::move(rows));
}

std::string to_latex(const HTable& table) {
  const auto& rows = table.rows();
  const std::size_t half = (rows.size() + 1) / 2;
  std::string out = "\\begin{array}{c|c||c|c}\n";
  out += "\\mu & H_{\\lambda+\\rho}(\\mu) & \\mu & H_{\\lambda+\\rho}(\\mu) \\\\\\hline\n";
  for (std::size_t k = 0; k < half; ++k) {
    out += format_alpha_latex(rows[k].mu) + " & " + format_tpoly_latex(rows[k].h);
    if (k + half < rows.size())
      out += " & " + format_alpha_latex(rows[k + half].mu) + " & " + format_tpoly_latex(rows[k + half].h);
    else
      out += " & & ";
    out += " \\\\\n";
  }
  return out + "\\end{array}\n";
}

std::string to_dot(const CrystalGraph& g, const std::string& name) {
  std::string out = "digraph " + name + " {\n  node [shape=box];\n";
  for (std::size_t k = 0; k < g.nodes.size(); ++k)
    out += "  n" + std::to_string(k) + " [label=\"" + to_one_line(g.nodes[k]) + "\"];\n";
  for (const auto& e : g.edges)
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" +
           std::to_string(e.color) + "\"];\n";
  return out + "}\n";
}

}  // namespace cscrystal
