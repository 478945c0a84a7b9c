#include <doctest.h>

#include <random>

#include "cscrystal/error.hpp"
#include "cscrystal/format.hpp"
#include "oracles.hpp"

using namespace cscrystal;

TEST_CASE("integer lists") {
  CHECK(parse_int_list("0,1") == std::vector<int>{0, 1});
  CHECK(parse_int_list(" 2, 1 ,0") == std::vector<int>{2, 1, 0});
  CHECK(parse_int_list("-3") == std::vector<int>{-3});
  CHECK_THROWS_AS(parse_int_list("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_int_list("1,x"), ParseError);
  CHECK_THROWS_AS(parse_int_list(""), ParseError);
  CHECK(format_int_tuple({2, 1, 0}) == "(2,1,0)");
}

TEST_CASE("one-line tableaux") {
  const Tableau t = Tableau::make(3, {{1, 1, 2, 2, 3}, {2, 3, 3}, {3, 4}});
  CHECK(to_one_line(t) == "1 1 2 2 3 / 2 3 3 / 3 4");
  CHECK(parse_one_line(3, "1 1 2 2 3 / 2 3 3 / 3 4") == t);
  CHECK(parse_one_line(3, "  1 1 2 2 3/2 3 3 /3 4 ") == t);
  CHECK_THROWS_AS(parse_one_line(3, "1 2 / / 3"), ParseError);
  CHECK_THROWS_AS(parse_one_line(3, "1 a"), ParseError);
  CHECK_THROWS_AS(parse_one_line(2, "1 1 / 1"), ValidationError);
}

TEST_CASE("tableau json round trip") {
  for (const auto& lam : oracle::suite())
    for (const auto& t : enumerate_crystal(Shape(oracle::shifted(lam)))) {
      CHECK(tableau_from_json(to_json(t)) == t);
      CHECK(tableau_from_json(Json::parse(to_json(t).dump())) == t);
      CHECK(parse_one_line(t.rank(), to_one_line(t)) == t);
    }
  CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"rank": 2})")), ParseError);
  CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"rank": 2, "rows": [[2, 1]]})")), ValidationError);
}

TEST_CASE("triangle rendering") {
  const Tableau b1 = Tableau::make(2, {{1, 2, 2}, {3, 3}});
  CHECK(render_triangle(bzl_path(b1), false) == "(2; 2, 0)");
  CHECK(render_triangle(decorate_via_operators(b1)) == "(2; 2□, 0◯)");
  CHECK(render_triangle(decorate_via_stats(b1)) == "(2, 0◯; 2□)");
}

TEST_CASE("triangle json round trip") {
  for (const auto& lam : oracle::suite())
    for (const auto& t : enumerate_crystal(Shape(oracle::shifted(lam)))) {
      for (const auto& d : {decorate_via_operators(t), decorate_via_stats(t)}) {
        const auto back = triangle_from_json(Json::parse(to_json(d).dump()));
        CHECK(back.layout() == d.layout());
        CHECK(back.values() == d.values());
        CHECK(back.decorations() == d.decorations());
      }
    }
  CHECK_THROWS_AS(triangle_from_json(Json::parse(R"({"rank": 2, "layout": "x", "entries": []})")), ParseError);
}

TEST_CASE("polynomial json round trip") {
  const TPoly big(std::vector<Integer>{Integer("123456789012345678901234567890"), -1, 2});
  CHECK(tpoly_from_json(Json::parse(to_json(big).dump())) == big);
  CHECK(to_json(TPoly()).dump() == "[]");
  for (const auto& lam : oracle::suite()) {
    const auto p = cs_rhs(lam);
    CHECK(laurent_from_json(lam.rank(), Json::parse(to_json(p).dump())) == p);
  }
  CHECK_THROWS_AS(laurent_from_json(2, Json::parse(R"([{"exp": [1, 0], "coeff": [1]}])")), ParseError);
}

TEST_CASE("polynomial strings") {
  const TPoly t = TPoly::t_power(1);
  CHECK(TPoly().to_string() == "0");
  CHECK((-t + TPoly(2) * t * t - t * t * t).to_string() == "-t + 2t^2 - t^3");
  CHECK(TPoly::one_minus_t().to_string() == "1 - t");
  CHECK(format_tpoly_latex(-t + t * t) == "-q^{-1}+q^{-2}");
  CHECK(format_tpoly_latex(TPoly(1)) == "1");
  CHECK((QLaurent::q_power(3, -1) + QLaurent::q_power(2)).to_string() == "-q^3 + q^2");
}

TEST_CASE("alpha labels") {
  CHECK(format_alpha(AlphaVector({0, 0})) == "0");
  CHECK(format_alpha(AlphaVector({1, 0})) == "a1");
  CHECK(format_alpha(AlphaVector({2, 1})) == "2a1+a2");
  CHECK(format_alpha_latex(AlphaVector({1, 2})) == "\\alpha_1+2\\alpha_2");
}

TEST_CASE("table round trips") {
  for (const auto& lam : oracle::suite()) {
    const auto table = h_table(lam);
    CHECK(htable_from_json(Json::parse(to_json(table).dump())) == table);
    CHECK(htable_from_csv(lam, to_csv(table)) == table);
  }
  const auto om2 = h_table(GLWeight(2, {1, 1, 0}));
  const std::string csv = to_csv(om2);
  CHECK(csv.rfind("c1,c2,t^0,t^1,t^2,t^3\n", 0) == 0);
  CHECK(csv.find("\n1,2,0,-2,2,0\n") != std::string::npos);
  CHECK_THROWS_AS(htable_from_csv(GLWeight(2, {1, 1, 0}), "c1,c2\n"), ParseError);
  const std::string tex = to_latex(om2);
  CHECK(tex.find("\\begin{array}{c|c||c|c}") != std::string::npos);
  CHECK(tex.find("\\alpha_1+2\\alpha_2 & -2q^{-1}+2q^{-2}") != std::string::npos);
  CHECK(tex.find("3\\alpha_1+3\\alpha_2 & -q^{-3}") != std::string::npos);
}

TEST_CASE("dot export") {
  const std::string dot = to_dot(crystal_graph(Shape(2, {1, 0, 0})));
  CHECK(dot.find("n0 -> n1 [label=\"1\"]") != std::string::npos);
  CHECK(dot.find("n1 -> n2 [label=\"2\"]") != std::string::npos);
  CHECK(dot == to_dot(crystal_graph(Shape(2, {1, 0, 0}))));
}
