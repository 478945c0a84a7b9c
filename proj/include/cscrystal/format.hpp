#pragma once

// Text, JSON, CSV, LaTeX and DOT renderings. Every machine-readable format
// has a matching parser so that parse(render(x)) == x.

#include <json.hpp>
#include <string>
#include <vector>

#include "cscrystal/bzl.hpp"
#include "cscrystal/crystal.hpp"
#include "cscrystal/hpoly.hpp"
#include "cscrystal/laurent.hpp"
#include "cscrystal/tableau.hpp"

namespace cscrystal {

using Json = nlohmann::json;

/// Comma separated integers, e.g. "0,1" or "2, 1, 0".
std::vector<int> parse_int_list(const std::string& text);

std::string format_int_tuple(const std::vector<int>& v);  // "(2,1,0)"

/// One-line tableau form "1 1 2 / 2 3".
std::string to_one_line(const Tableau& t);
Tableau parse_one_line(int rank, const std::string& text);

Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

/// "(a11; a21, a22; ...)" in long-word order for Bzl, row by row for Stats.
/// With markers each entry is followed by U+25EF if circled and U+25A1 if boxed.
std::string render_triangle(const DecoratedTriangle& d, bool markers = true);
Json to_json(const DecoratedTriangle& d);
DecoratedTriangle triangle_from_json(const Json& j);

Json to_json(const TPoly& p);  // ascending coefficient list
TPoly tpoly_from_json(const Json& j);

/// [{"exp": [...], "coeff": [...]}, ...] in lexicographic exponent order.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(int rank, const Json& j);

/// "0", "a1", "2a1+a2", ...
std::string format_alpha(const AlphaVector& mu);
/// "0", "\alpha_1", "2\alpha_1+\alpha_2", ...
std::string format_alpha_latex(const AlphaVector& mu);
/// Expanded polynomial in q^{-1} for LaTeX, e.g. "-q^{-1}+q^{-2}".
std::string format_tpoly_latex(const TPoly& p);

Json to_json(const HTable& table);
HTable htable_from_json(const Json& j);
/// Header "c1,...,cr,t^0,...,t^d"; every row padded to the widest degree.
std::string to_csv(const HTable& table);
HTable htable_from_csv(const GLWeight& lam, const std::string& csv);
/// Two-column-pair array in the layout mu | H || mu | H.
std::string to_latex(const HTable& table);

std::string to_dot(const CrystalGraph& g, const std::string& name = "crystal");

}  // namespace cscrystal
