#pragma once

// BZL paths for the long word (1; 2,1; 3,2,1; ...; r,...,1), the two
// decoration calculi, and the coefficients G and C of a crystal element.
//
// A BZL path is written as a triangle a_{i,j}, 1 <= j <= i <= r, whose row i
// holds the exponents for the letters i, i-1, ..., 1 of the word. The tableau
// statistics live on 1 <= i <= j <= r. The two layouts correspond through
//   a^{BZL}_{i,j} = a^{STATS}_{i-j+1,i}.

#include <utility>
#include <vector>

#include "cscrystal/tableau.hpp"
#include "cscrystal/tpoly.hpp"

namespace cscrystal {

class LongWord {
 public:
  static LongWord for_rank(int rank);

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

 private:
  explicit LongWord(int rank);
  int rank_;
  std::vector<int> letters_;
};

enum class Layout { Bzl, Stats };

struct Decoration {
  bool circled = false;
  bool boxed = false;
  bool both() const { return circled && boxed; }
  friend bool operator==(const Decoration&, const Decoration&) = default;
};

class DecoratedTriangle {
 public:
  DecoratedTriangle(int rank, Layout layout);

  int rank() const { return rank_; }
  Layout layout() const { return layout_; }
  std::size_t size() const { return values_.size(); }

  /// Index pairs valid for this layout in storage order: long-word order for
  /// Bzl, (1,1),(1,2),...,(r,r) for Stats.
  std::vector<std::pair<int, int>> indices() const;

  /// Reads outside the triangle return 0.
  int value(int i, int j) const;
  Decoration decoration(int i, int j) const;
  void set_value(int i, int j, int v);
  void set_decoration(int i, int j, Decoration d);

  const std::vector<int>& values() const { return values_; }
  const std::vector<Decoration>& decorations() const { return decorations_; }

  /// Same data in the other layout.
  DecoratedTriangle to(Layout target) const;

  int entry_sum() const;
  int boxed_count() const;
  int neither_count() const;
  bool has_double_decoration() const;

  /// Equal values and flags after conversion to a common layout.
  friend bool operator==(const DecoratedTriangle& a, const DecoratedTriangle& b);

 private:
  bool in_range(int i, int j) const;
  std::size_t index(int i, int j) const;

  int rank_;
  Layout layout_;
  std::vector<int> values_;
  std::vector<Decoration> decorations_;
};

/// Maximal e-string lengths along the long word (values only, Bzl layout).
DecoratedTriangle bzl_path(const Tableau& t);

/// Box a_k when f_{i_k} kills the element reached before step k; circle
/// a_{i,j} when a_{i,j} = a_{i,j+1}. Bzl layout.
DecoratedTriangle decorate_via_operators(const Tableau& t);

/// Box a_{i,j} when b_{i,j} >= theta_i + b_{i+1,j+1}; circle it when
/// a_{i,j} = a_{i-1,j}. Uses only tableau statistics. Stats layout.
DecoratedTriangle decorate_via_stats(const Tableau& t);

/// Product over entries of q^a, -q^{a-1}, (q-1)q^{a-1} or 0.
QLaurent g_coefficient(const DecoratedTriangle& d);
QLaurent g_coefficient(const Tableau& t);

/// (-t)^{box} (1-t)^{non}, or 0 when some entry is both circled and boxed.
/// This equals G(b) q^{-S(b)} with S(b) the sum of the entries. Vanishing is
/// decided by the decorations, not by is_strict: the two disagree on some
/// tableaux (e.g. 1 1 1 2 4 / 2 2 3 / 3 4 is not strict but C != 0).
TPoly c_coefficient(const DecoratedTriangle& d);
TPoly c_coefficient(const Tableau& t);

}  // namespace cscrystal
