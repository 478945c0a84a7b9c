#pragma once

// Kashiwara operators on semistandard tableaux through the Far-Eastern
// reading (columns right to left, each read top to bottom) and the
// signature rule.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cscrystal/tableau.hpp"

namespace cscrystal {

enum class Sign : signed char { None = 0, Minus = -1, Plus = 1 };

struct BoxPosition {
  int row = 0;     // 1-based
  int column = 0;  // 1-based
  friend bool operator==(const BoxPosition&, const BoxPosition&) = default;
};

struct ReadingWord {
  std::vector<int> letters;
  std::vector<BoxPosition> positions;
};

/// Sign sequence before and after cancelling +- pairs. `origin[k]` is the
/// letter (for words) or factor (for tensors) that produced sign k.
struct Signature {
  std::vector<Sign> raw;
  std::vector<Sign> reduced;
  std::vector<std::size_t> origin;

  std::optional<std::size_t> leftmost_plus() const;
  std::optional<std::size_t> rightmost_minus() const;
  int surviving_minus() const;
  int surviving_plus() const;
};

/// Cancels every + that is followed (possibly after gaps) by an unmatched -.
Signature reduce_signature(std::vector<Sign> raw, std::vector<std::size_t> origin);

ReadingWord reading_word(const Tableau& t);

Signature i_signature(std::span<const int> word, int i, int rank);
Signature i_signature(const Tableau& t, int i);

std::optional<Tableau> f_op(const Tableau& t, int i);
std::optional<Tableau> e_op(const Tableau& t, int i);
int epsilon(const Tableau& t, int i);
int phi(const Tableau& t, int i);

/// Row i filled with i.
Tableau highest_weight_tableau(const Shape& shape);

/// All elements of B(shape), sorted by row lists.
std::vector<Tableau> enumerate_crystal(const Shape& shape);

struct CrystalEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  int color = 0;
};

struct CrystalGraph {
  std::vector<Tableau> nodes;
  std::vector<CrystalEdge> edges;  // f_color(nodes[from]) == nodes[to]
};

CrystalGraph crystal_graph(const Shape& shape);

/// b_1 (x) ... (x) b_m with a shared rank.
class TensorElement {
 public:
  explicit TensorElement(std::vector<Tableau> factors);

  int rank() const { return factors_.front().rank(); }
  const std::vector<Tableau>& factors() const { return factors_; }
  GLWeight weight() const;

  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  std::vector<Tableau> factors_;
};

/// Blocks (-^{eps_i(b_k)}, +^{phi_i(b_k)}) per factor, then reduced.
Signature i_signature(const TensorElement& e, int i);

std::optional<TensorElement> tensor_f_op(const TensorElement& e, int i);
std::optional<TensorElement> tensor_e_op(const TensorElement& e, int i);

}  // namespace cscrystal
