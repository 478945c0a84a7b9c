#include <doctest.h>

#include "cscrystal/crystal.hpp"
#include "cscrystal/error.hpp"
#include "cscrystal/tableau.hpp"
#include "oracles.hpp"

using namespace cscrystal;

namespace {
const Tableau b1_32 = Tableau::make(3, {{1, 1, 1, 2, 4}, {2, 2, 3}, {3, 4}});
const Tableau b2_32 = Tableau::make(3, {{1, 1, 2, 2, 3}, {2, 3, 3}, {3, 4}});
const Tableau b1_42 = Tableau::make(2, {{1, 2, 2}, {3, 3}});
const Tableau b2_42 = Tableau::make(2, {{1, 2, 3}, {2, 3}});
}  // namespace

TEST_CASE("construction and validation") {
  CHECK(b2_32.shape() == Shape(3, {5, 3, 2, 0}));
  CHECK(b1_32.shape() == Shape(3, {5, 3, 2, 0}));
  CHECK_THROWS_AS(Tableau::make(2, {{1, 1}, {1}}), ValidationError);
  CHECK_THROWS_AS(Tableau::make(2, {{2, 1}}), ValidationError);
  CHECK_THROWS_AS(Tableau::make(2, {{1, 4}}), RangeError);
  CHECK_THROWS_AS(Tableau::make(2, {{1, 0}}), RangeError);
  CHECK_THROWS_AS(Tableau::make(2, {{1}, {2, 3}}), ShapeError);
  CHECK_THROWS_AS(Tableau::make(1, {{1}, {2}, {3}}), ShapeError);
  CHECK_THROWS_AS(Tableau::make(2, {{1}, {}, {3}}), ShapeError);
  CHECK(Tableau::make(2, {{1, 2}, {}}).num_rows() == 1);
  CHECK(Tableau::make(2, {}).size() == 0);
}

TEST_CASE("constructor accepts exactly the semistandard fillings") {
  const std::vector<int> parts{2, 1, 0};
  const auto good = oracle::semistandard_fillings(parts, 3);
  int accepted = 0;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        const oracle::Filling f{{a, b}, {c}};
        const bool expected = std::find(good.begin(), good.end(), f) != good.end();
        bool ok = true;
        try {
          Tableau::make(2, f);
        } catch (const ValidationError&) {
          ok = false;
        }
        CHECK(ok == expected);
        accepted += ok;
      }
  CHECK(accepted == 8);
}

TEST_CASE("with_entry keeps semistandardness") {
  const Tableau t = Tableau::make(2, {{1, 1}, {2}});
  CHECK(t.with_entry(1, 2, 2) == Tableau::make(2, {{1, 2}, {2}}));
  CHECK_THROWS_AS(t.with_entry(1, 1, 2), ValidationError);
  CHECK_THROWS_AS(t.with_entry(2, 1, 1), ValidationError);
  CHECK_THROWS_AS(t.with_entry(2, 1, 4), RangeError);
}

TEST_CASE("content") {
  CHECK(content(b2_32) == GLWeight(3, {2, 3, 4, 1}));
  CHECK(content(b1_42) == GLWeight(2, {1, 2, 2}));
  CHECK(content(highest_weight_tableau(Shape(2, {3, 2, 0}))) == GLWeight(2, {3, 2, 0}));
}

TEST_CASE("statistic a") {
  CHECK(stats_a(b2_32) == TriangularArray(3, {2, 1, 0, 3, 0, 1}));
  CHECK(stats_a(b1_42) == TriangularArray(2, {2, 0, 2}));
  CHECK(stats_a(highest_weight_tableau(Shape(3, {5, 3, 2, 0}))) == TriangularArray(3));
  CHECK(stats_a(b2_32)(0, 2) == 0);
  CHECK(stats_a(b2_32)(3, 4) == 0);
}

TEST_CASE("statistic b") {
  CHECK(stats_b(b2_32) == TriangularArray(3, {3, 1, 0, 2, 0, 1}));
  CHECK(stats_b(b2_42) == TriangularArray(2, {2, 1, 1}));
  CHECK(stats_b(highest_weight_tableau(Shape(2, {3, 2, 0}))) == TriangularArray(2));
}

TEST_CASE("strictness") {
  CHECK_FALSE(is_strict(b1_32));
  CHECK(is_strict(b2_32));
  CHECK(is_strict(Tableau::make(3, {{1, 2, 4, 4}})));
  CHECK_FALSE(is_strict(Tableau::make(2, {{1, 3}, {2}})));
  CHECK(is_strict(Tableau::make(2, {{1, 2}, {3}, {}})));
}

TEST_CASE("segments") {
  const Tableau b = Tableau::make(3, {{1, 1, 2, 3, 4}, {2, 3, 3}, {4}});
  const std::vector<Segment> expected{{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}, {2, 3, 2, 2}, {3, 4, 1, 1}};
  CHECK(segments(b) == expected);
  CHECK(segments(highest_weight_tableau(Shape(3, {5, 3, 2, 0}))).empty());
}

TEST_CASE("statistic invariants over the suite") {
  for (const auto& lam : oracle::suite()) {
    const int r = lam.rank();
    for (const auto& t : enumerate_crystal(Shape(oracle::shifted(lam)))) {
      const auto a = stats_a(t);
      const auto b = stats_b(t);
      const GLWeight c = content(t);
      for (int k = 2; k <= r + 1; ++k) {
        int on_diagonal_row = 0;
        if (k <= t.num_rows())
          for (int x : t.rows()[static_cast<std::size_t>(k - 1)]) on_diagonal_row += x == k;
        CHECK(a(k - 1, k - 1) + on_diagonal_row == c[static_cast<std::size_t>(k - 1)]);
      }
      int top = 0;
      for (int j = 1; j <= r; ++j) top += a(1, j);
      CHECK(c[0] == t.shape().row_length(1) - top);
      for (int j = 1; j <= r; ++j)
        for (int i = 2; i <= j; ++i) CHECK(a(i, j) >= a(i - 1, j));
      for (int i = 1; i <= r; ++i) {
        CHECK(b(i, i) <= t.shape().row_length(i));
        for (int j = i + 1; j <= r; ++j) CHECK(b(i, j) <= b(i, j - 1));
        for (int j = i; j <= r; ++j) {
          int n = 0;
          if (i <= t.num_rows())
            for (int x : t.rows()[static_cast<std::size_t>(i - 1)]) n += x >= j + 1;
          CHECK(b(i, j) == n);
        }
      }
      int seg_total = 0;
      for (const auto& s : segments(t)) {
        seg_total += s.length;
        CHECK(s.color >= s.row + 1);
      }
      int above = 0;
      for (int i = 1; i <= t.num_rows(); ++i)
        for (int x : t.rows()[static_cast<std::size_t>(i - 1)]) above += x > i;
      CHECK(seg_total == above);
    }
  }
}
