#include "cscrystal/crystal.hpp"

#include <algorithm>
#include <tuple>
#include <map>
#include <string>

#include "cscrystal/error.hpp"

namespace cscrystal {

namespace {

void check_color(int i, int rank) {
  if (i < 1 || i > rank)
    throw RankError("operator index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
}

}  // namespace

std::optional<std::size_t> Signature::leftmost_plus() const {
  for (std::size_t k = 0; k < reduced.size(); ++k)
    if (reduced[k] == Sign::Plus) return k;
  return std::nullopt;
}

std::optional<std::size_t> Signature::rightmost_minus() const {
  for (std::size_t k = reduced.size(); k-- > 0;)
    if (reduced[k] == Sign::Minus) return k;
  return std::nullopt;
}

int Signature::surviving_minus() const {
  return static_cast<int>(std::count(reduced.begin(), reduced.end(), Sign::Minus));
}

int Signature::surviving_plus() const {
  return static_cast<int>(std::count(reduced.begin(), reduced.end(), Sign::Plus));
}

Signature reduce_signature(std::vector<Sign> raw, std::vector<std::size_t> origin) {
  Signature s;
  s.reduced = raw;
  std::vector<std::size_t> open_plus;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] == Sign::Plus) {
      open_plus.push_back(k);
    } else if (raw[k] == Sign::Minus && !open_plus.empty()) {
      s.reduced[open_plus.back()] = Sign::None;
      s.reduced[k] = Sign::None;
      open_plus.pop_back();
    }
  }
  s.raw = std::move(raw);
  s.origin = std::move(origin);
  return s;
}

ReadingWord reading_word(const Tableau& t) {
  ReadingWord w;
  const int width = t.shape().row_length(1);
  for (int col = width; col >= 1; --col)
    for (int row = 1; row <= t.num_rows() && t.shape().row_length(row) >= col; ++row) {
      w.letters.push_back(t.at(row, col));
      w.positions.push_back({row, col});
    }
  return w;
}

Signature i_signature(std::span<const int> word, int i, int rank) {
  check_color(i, rank);
  std::vector<Sign> raw(word.size(), Sign::None);
  std::vector<std::size_t> origin(word.size());
  for (std::size_t k = 0; k < word.size(); ++k) {
    origin[k] = k;
    if (word[k] == i + 1)
      raw[k] = Sign::Minus;
    else if (word[k] == i)
      raw[k] = Sign::Plus;
  }
  return reduce_signature(std::move(raw), std::move(origin));
}

Signature i_signature(const Tableau& t, int i) {
  return i_signature(reading_word(t).letters, i, t.rank());
}

std::optional<Tableau> f_op(const Tableau& t, int i) {
  const ReadingWord w = reading_word(t);
  const Signature s = i_signature(w.letters, i, t.rank());
  const auto k = s.leftmost_plus();
  if (!k) return std::nullopt;
  const BoxPosition p = w.positions[s.origin[*k]];
  return t.with_entry(p.row, p.column, i + 1);
}

std::optional<Tableau> e_op(const Tableau& t, int i) {
  const ReadingWord w = reading_word(t);
  const Signature s = i_signature(w.letters, i, t.rank());
  const auto k = s.rightmost_minus();
  if (!k) return std::nullopt;
  const BoxPosition p = w.positions[s.origin[*k]];
  return t.with_entry(p.row, p.column, i);
}

int epsilon(const Tableau& t, int i) { return i_signature(t, i).surviving_minus(); }

int phi(const Tableau& t, int i) { return i_signature(t, i).surviving_plus(); }

Tableau highest_weight_tableau(const Shape& shape) {
  if (shape.num_nonempty_rows() > shape.rank() + 1) throw ShapeError("shape has more than r+1 rows");
  std::vector<Row> rows;
  for (int row = 1; row <= shape.num_nonempty_rows(); ++row)
    rows.emplace_back(shape.row_length(row), row);
  return Tableau::make(shape.rank(), std::move(rows));
}

CrystalGraph crystal_graph(const Shape& shape) {
  // Breadth-first closure under f_1, ..., f_r in that order.
  std::vector<Tableau> order{highest_weight_tableau(shape)};
  std::map<Tableau, std::size_t> index{{order.front(), 0}};
  std::vector<CrystalEdge> bfs_edges;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int i = 1; i <= shape.rank(); ++i) {
      auto next = f_op(order[head], i);
      if (!next) continue;
      auto [it, inserted] = index.try_emplace(*next, order.size());
      if (inserted) order.push_back(*next);
      bfs_edges.push_back({head, it->second, i});
    }
  }

  // Canonical order: sorted row lists.
  CrystalGraph g;
  std::vector<std::size_t> relabel(order.size());
  std::size_t pos = 0;
  for (auto& [tab, bfs_index] : index) {
    relabel[bfs_index] = pos++;
    g.nodes.push_back(tab);
  }
  for (const auto& e : bfs_edges) g.edges.push_back({relabel[e.from], relabel[e.to], e.color});
  std::sort(g.edges.begin(), g.edges.end(), [](const CrystalEdge& a, const CrystalEdge& b) {
    return std::tie(a.from, a.color) < std::tie(b.from, b.color);
  });
  return g;
}

std::vector<Tableau> enumerate_crystal(const Shape& shape) { return crystal_graph(shape).nodes; }

TensorElement::TensorElement(std::vector<Tableau> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw DomainError("tensor element needs at least one factor");
  for (const auto& f : factors_)
    if (f.rank() != factors_.front().rank()) throw RankError("tensor factors must share a rank");
}

GLWeight TensorElement::weight() const {
  GLWeight w = GLWeight::zero(rank());
  for (const auto& f : factors_) w += content(f);
  return w;
}

Signature i_signature(const TensorElement& e, int i) {
  check_color(i, e.rank());
  std::vector<Sign> raw;
  std::vector<std::size_t> origin;
  for (std::size_t k = 0; k < e.factors().size(); ++k) {
    const Signature own = i_signature(e.factors()[k], i);
    raw.insert(raw.end(), own.surviving_minus(), Sign::Minus);
    raw.insert(raw.end(), own.surviving_plus(), Sign::Plus);
    origin.insert(origin.end(), own.surviving_minus() + own.surviving_plus(), k);
  }
  return reduce_signature(std::move(raw), std::move(origin));
}

std::optional<TensorElement> tensor_f_op(const TensorElement& e, int i) {
  const Signature s = i_signature(e, i);
  const auto k = s.leftmost_plus();
  if (!k) return std::nullopt;
  auto factors = e.factors();
  const std::size_t owner = s.origin[*k];
  factors[owner] = *f_op(factors[owner], i);
  return TensorElement(std::move(factors));
}

std::optional<TensorElement> tensor_e_op(const TensorElement& e, int i) {
  const Signature s = i_signature(e, i);
  const auto k = s.rightmost_minus();
  if (!k) return std::nullopt;
  auto factors = e.factors();
  const std::size_t owner = s.origin[*k];
  factors[owner] = *e_op(factors[owner], i);
  return TensorElement(std::move(factors));
}

}  // namespace cscrystal
