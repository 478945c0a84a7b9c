#include "cscrystal/tableau.hpp"

#include <algorithm>
#include <string>

#include "cscrystal/error.hpp"

namespace cscrystal {

namespace {

void check_semistandard(const std::vector<Row>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 1; c < rows[i].size(); ++c)
      if (rows[i][c] < rows[i][c - 1])
        throw ValidationError("row " + std::to_string(i + 1) + " is not weakly increasing");
    if (i == 0) continue;
    for (std::size_t c = 0; c < rows[i].size(); ++c)
      if (rows[i][c] <= rows[i - 1][c])
        throw ValidationError("column " + std::to_string(c + 1) + " is not strictly increasing");
  }
}

}  // namespace

Tableau Tableau::make(int rank, std::vector<Row> rows) {
  if (rank < 1) throw RankError("rank must be at least 1");
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  if (rows.size() > static_cast<std::size_t>(rank + 1))
    throw ShapeError("tableau has more than r+1 rows");
  std::vector<int> parts(rank + 1, 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) throw ShapeError("empty row above a nonempty row");
    if (i > 0 && rows[i].size() > rows[i - 1].size())
      throw ShapeError("row lengths must weakly decrease");
    parts[i] = static_cast<int>(rows[i].size());
    for (int x : rows[i])
      if (x < 1 || x > rank + 1)
        throw RangeError("entry " + std::to_string(x) + " outside 1.." + std::to_string(rank + 1));
  }
  check_semistandard(rows);
  Shape shape(rank, std::move(parts));
  return Tableau(rank, std::move(rows), std::move(shape));
}

Tableau Tableau::with_entry(int row, int col, int value) const {
  auto rows = rows_;
  rows.at(row - 1).at(col - 1) = value;
  if (value < 1 || value > rank_ + 1) throw RangeError("entry outside 1..r+1");
  const auto& r = rows[row - 1];
  const int c = col - 1;
  bool ok = (c == 0 || r[c - 1] <= value) && (c + 1 >= static_cast<int>(r.size()) || value <= r[c + 1]);
  if (row > 1) ok = ok && rows[row - 2][c] < value;
  if (row < static_cast<int>(rows.size()) && c < static_cast<int>(rows[row].size()))
    ok = ok && value < rows[row][c];
  if (!ok) throw ValidationError("replacement breaks semistandardness");
  return Tableau(rank_, std::move(rows), shape_);
}

TriangularArray::TriangularArray(int rank) : rank_(rank), data_(rank * (rank + 1) / 2, 0) {}

TriangularArray::TriangularArray(int rank, std::vector<int> flat) : rank_(rank), data_(std::move(flat)) {
  if (data_.size() != static_cast<std::size_t>(rank * (rank + 1) / 2))
    throw RankError("triangular array needs r(r+1)/2 entries");
}

std::size_t TriangularArray::index(int i, int j) const {
  // Rows 1..i-1 hold r, r-1, ..., r-i+2 entries.
  const int before = (i - 1) * rank_ - (i - 1) * (i - 2) / 2;
  return static_cast<std::size_t>(before + (j - i));
}

int TriangularArray::operator()(int i, int j) const {
  if (!in_range(rank_, i, j)) return 0;
  return data_[index(i, j)];
}

void TriangularArray::set(int i, int j, int value) {
  if (!in_range(rank_, i, j)) throw RankError("triangular index out of range");
  data_[index(i, j)] = value;
}

GLWeight content(const Tableau& t) {
  std::vector<int> m(t.rank() + 1, 0);
  for (const auto& row : t.rows())
    for (int x : row) ++m[x - 1];
  return GLWeight(t.rank(), std::move(m));
}

TriangularArray stats_a(const Tableau& t) {
  const int r = t.rank();
  TriangularArray a(r);
  for (int j = 1; j <= r; ++j) {
    int running = 0;
    for (int i = 1; i <= j; ++i) {
      if (i <= t.num_rows()) {
        const auto& row = t.rows()[i - 1];
        running += static_cast<int>(std::count(row.begin(), row.end(), j + 1));
      }
      a.set(i, j, running);
    }
  }
  return a;
}

TriangularArray stats_b(const Tableau& t) {
  const int r = t.rank();
  TriangularArray b(r);
  for (int i = 1; i <= r && i <= t.num_rows(); ++i) {
    const auto& row = t.rows()[i - 1];
    for (int j = i; j <= r; ++j)
      b.set(i, j, static_cast<int>(std::count_if(row.begin(), row.end(), [j](int x) { return x >= j + 1; })));
  }
  return b;
}

bool is_strict(const Tableau& t) {
  for (int i = 1; i < t.num_rows(); ++i)
    if (t.rows()[i - 1].back() > t.rows()[i].back()) return false;
  return true;
}

std::vector<Segment> segments(const Tableau& t) {
  std::vector<Segment> out;
  for (int i = 1; i <= t.num_rows(); ++i) {
    const auto& row = t.rows()[i - 1];
    std::size_t c = 0;
    while (c < row.size()) {
      std::size_t end = c;
      while (end < row.size() && row[end] == row[c]) ++end;
      if (row[c] >= i + 1)
        out.push_back({i, row[c], static_cast<int>(c) + 1, static_cast<int>(end - c)});
      c = end;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> vanishing_pairs(const Tableau& t) {
  const int r = t.rank();
  auto count_at_most = [&t](int row, int bound) {
    if (row > t.num_rows()) return 0;
    const auto& entries = t.rows()[row - 1];
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [bound](int x) { return x <= bound; }));
  };
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= r; ++i) {
    const Row empty;
    const Row& row = i <= t.num_rows() ? t.rows()[i - 1] : empty;
    for (int j = i; j <= r; ++j) {
      if (std::find(row.begin(), row.end(), j + 1) != row.end()) continue;
      if (count_at_most(i, j) <= count_at_most(i + 1, j + 1)) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace cscrystal
