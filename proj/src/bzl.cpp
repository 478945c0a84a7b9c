#include "cscrystal/bzl.hpp"

#include <string>

#include "cscrystal/crystal.hpp"
#include "cscrystal/error.hpp"

namespace cscrystal {

namespace {

void require_strict_shape(const Tableau& t) {
  if (!t.shape().is_strict())
    throw ShapeError("decorations need a strictly decreasing shape of the form lambda + rho");
}

// Row i of the Bzl triangle starts after 1 + 2 + ... + (i-1) entries.
std::size_t bzl_offset(int i) { return static_cast<std::size_t>(i * (i - 1) / 2); }

}  // namespace

LongWord::LongWord(int rank) : rank_(rank) {
  for (int block = 1; block <= rank; ++block)
    for (int letter = block; letter >= 1; --letter) letters_.push_back(letter);
}

LongWord LongWord::for_rank(int rank) {
  if (rank < 1) throw RankError("rank must be at least 1");
  return LongWord(rank);
}

DecoratedTriangle::DecoratedTriangle(int rank, Layout layout)
    : rank_(rank),
      layout_(layout),
      values_(rank * (rank + 1) / 2, 0),
      decorations_(rank * (rank + 1) / 2) {
  if (rank < 1) throw RankError("rank must be at least 1");
}

bool DecoratedTriangle::in_range(int i, int j) const {
  if (layout_ == Layout::Bzl) return 1 <= j && j <= i && i <= rank_;
  return TriangularArray::in_range(rank_, i, j);
}

std::size_t DecoratedTriangle::index(int i, int j) const {
  if (layout_ == Layout::Bzl) return bzl_offset(i) + (j - 1);
  const int before = (i - 1) * rank_ - (i - 1) * (i - 2) / 2;
  return static_cast<std::size_t>(before + (j - i));
}

std::vector<std::pair<int, int>> DecoratedTriangle::indices() const {
  std::vector<std::pair<int, int>> out;
  if (layout_ == Layout::Bzl) {
    for (int i = 1; i <= rank_; ++i)
      for (int j = 1; j <= i; ++j) out.emplace_back(i, j);
  } else {
    for (int i = 1; i <= rank_; ++i)
      for (int j = i; j <= rank_; ++j) out.emplace_back(i, j);
  }
  return out;
}

int DecoratedTriangle::value(int i, int j) const {
  return in_range(i, j) ? values_[index(i, j)] : 0;
}

Decoration DecoratedTriangle::decoration(int i, int j) const {
  return in_range(i, j) ? decorations_[index(i, j)] : Decoration{};
}

void DecoratedTriangle::set_value(int i, int j, int v) {
  if (!in_range(i, j)) throw RankError("triangle index out of range");
  values_[index(i, j)] = v;
}

void DecoratedTriangle::set_decoration(int i, int j, Decoration d) {
  if (!in_range(i, j)) throw RankError("triangle index out of range");
  decorations_[index(i, j)] = d;
}

DecoratedTriangle DecoratedTriangle::to(Layout target) const {
  if (target == layout_) return *this;
  DecoratedTriangle out(rank_, target);
  for (auto [i, j] : indices()) {
    // Bzl (i,j) <-> Stats (i-j+1, i); inverse Stats (i,j) <-> Bzl (j, j-i+1).
    const auto [ti, tj] = layout_ == Layout::Bzl ? std::pair{i - j + 1, i} : std::pair{j, j - i + 1};
    out.set_value(ti, tj, value(i, j));
    out.set_decoration(ti, tj, decoration(i, j));
  }
  return out;
}

int DecoratedTriangle::entry_sum() const {
  int s = 0;
  for (int v : values_) s += v;
  return s;
}

int DecoratedTriangle::boxed_count() const {
  int n = 0;
  for (const auto& d : decorations_) n += d.boxed ? 1 : 0;
  return n;
}

int DecoratedTriangle::neither_count() const {
  int n = 0;
  for (const auto& d : decorations_) n += (!d.boxed && !d.circled) ? 1 : 0;
  return n;
}

bool DecoratedTriangle::has_double_decoration() const {
  for (const auto& d : decorations_)
    if (d.both()) return true;
  return false;
}

bool operator==(const DecoratedTriangle& a, const DecoratedTriangle& b) {
  if (a.rank_ != b.rank_) return false;
  const DecoratedTriangle bb = b.to(a.layout_);
  return a.values_ == bb.values_ && a.decorations_ == bb.decorations_;
}

namespace {

// Runs the e-string iteration; records B-I boxes when `decorate` is set.
DecoratedTriangle walk_long_word(const Tableau& t, bool decorate) {
  require_strict_shape(t);
  const int r = t.rank();
  const LongWord word = LongWord::for_rank(r);
  DecoratedTriangle out(r, Layout::Bzl);
  const auto slots = out.indices();
  Tableau current = t;
  for (std::size_t k = 0; k < word.size(); ++k) {
    const int letter = word.letters()[k];
    const auto [i, j] = slots[k];
    if (decorate && !f_op(current, letter)) out.set_decoration(i, j, {false, true});
    int count = 0;
    while (auto next = e_op(current, letter)) {
      current = std::move(*next);
      ++count;
    }
    out.set_value(i, j, count);
  }
  return out;
}

}  // namespace

DecoratedTriangle bzl_path(const Tableau& t) { return walk_long_word(t, false); }

DecoratedTriangle decorate_via_operators(const Tableau& t) {
  DecoratedTriangle out = walk_long_word(t, true);
  for (auto [i, j] : out.indices()) {
    Decoration d = out.decoration(i, j);
    d.circled = out.value(i, j) == out.value(i, j + 1);
    out.set_decoration(i, j, d);
  }
  return out;
}

DecoratedTriangle decorate_via_stats(const Tableau& t) {
  require_strict_shape(t);
  const int r = t.rank();
  const auto th = theta(t.shape());
  const TriangularArray a = stats_a(t);
  const TriangularArray b = stats_b(t);
  DecoratedTriangle out(r, Layout::Stats);
  for (auto [i, j] : out.indices()) {
    out.set_value(i, j, a(i, j));
    Decoration d;
    d.circled = a(i, j) == a(i - 1, j);
    d.boxed = b(i, j) >= th[i - 1] + b(i + 1, j + 1);
    out.set_decoration(i, j, d);
  }
  return out;
}

QLaurent g_coefficient(const DecoratedTriangle& d) {
  QLaurent g(1);
  for (auto [i, j] : d.indices()) {
    const int a = d.value(i, j);
    const Decoration dec = d.decoration(i, j);
    if (dec.both()) return QLaurent();
    if (dec.circled)
      g *= QLaurent::q_power(a);
    else if (dec.boxed)
      g *= QLaurent::q_power(a - 1, -1);
    else
      g *= QLaurent::q_power(a) + QLaurent::q_power(a - 1, -1);
  }
  return g;
}

QLaurent g_coefficient(const Tableau& t) { return g_coefficient(decorate_via_stats(t)); }

TPoly c_coefficient(const DecoratedTriangle& d) {
  if (d.has_double_decoration()) return TPoly();
  return TPoly::t_power(1, -1).pow(d.boxed_count()) * TPoly::one_minus_t().pow(d.neither_count());
}

TPoly c_coefficient(const Tableau& t) { return c_coefficient(decorate_via_stats(t)); }

}  // namespace cscrystal
