#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "cscrystal/rootsys.hpp"

namespace cscrystal {

using Row = std::vector<int>;

/// Semistandard Young tableau with entries in 1..r+1. Rows are stored without
/// trailing empty rows; the shape always carries r+1 parts.
class Tableau {
 public:
  /// Validates the filling; throws ShapeError, RangeError or ValidationError.
  static Tableau make(int rank, std::vector<Row> rows);

  int rank() const { return rank_; }
  const Shape& shape() const { return shape_; }
  const std::vector<Row>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int size() const { return shape_.size(); }

  /// 1-based access.
  int at(int row, int col) const { return rows_[row - 1][col - 1]; }

  /// Copy with one entry replaced; throws ValidationError if the result is
  /// not semistandard.
  Tableau with_entry(int row, int col, int value) const;

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.rank_ == b.rank_ && a.rows_ == b.rows_;
  }
  friend std::strong_ordering operator<=>(const Tableau& a, const Tableau& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

 private:
  Tableau(int rank, std::vector<Row> rows, Shape shape)
      : rank_(rank), rows_(std::move(rows)), shape_(std::move(shape)) {}

  int rank_ = 0;
  std::vector<Row> rows_;
  Shape shape_;
};

/// Integers indexed by 1 <= i <= j <= r. Reads outside that range return 0,
/// which is the convention the decoration rules rely on (a_{0,j}, b_{i,r+1},
/// b_{r+1,.}).
class TriangularArray {
 public:
  TriangularArray() = default;
  explicit TriangularArray(int rank);
  TriangularArray(int rank, std::vector<int> flat);

  int rank() const { return rank_; }
  int operator()(int i, int j) const;
  void set(int i, int j, int value);

  /// Entries in the order (1,1),(1,2),...,(1,r),(2,2),...,(r,r).
  const std::vector<int>& flat() const { return data_; }

  static bool in_range(int rank, int i, int j) { return 1 <= i && i <= j && j <= rank; }

  friend bool operator==(const TriangularArray&, const TriangularArray&) = default;

 private:
  std::size_t index(int i, int j) const;

  int rank_ = 0;
  std::vector<int> data_;
};

/// Maximal run of k-boxes in row i with k >= i+1. Row and start column are 1-based.
struct Segment {
  int row = 0;
  int color = 0;
  int start_column = 0;
  int length = 0;

  friend bool operator==(const Segment&, const Segment&) = default;
};

GLWeight content(const Tableau& t);

/// a_{i,j}: number of (j+1)-boxes in rows 1..i.
TriangularArray stats_a(const Tableau& t);

/// b_{i,j}: number of boxes in row i with entry >= j+1.
TriangularArray stats_b(const Tableau& t);

/// No row has an entry exceeding the maximum of the following nonempty row.
bool is_strict(const Tableau& t);

std::vector<Segment> segments(const Tableau& t);

/// Pairs (i,j), 1 <= i <= j <= r, where row i holds no (j+1)-box and has at
/// most as many entries <= j as row i+1 has entries <= j+1. On a shape
/// lambda+rho these are exactly the statistic positions that are both
/// circled and boxed, so C(t) = 0 iff the list is nonempty.
std::vector<std::pair<int, int>> vanishing_pairs(const Tableau& t);

}  // namespace cscrystal
