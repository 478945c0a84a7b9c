#pragma once

// Sparse Laurent polynomials in z_1..z_{r+1} with coefficients in Z[t], and
// both sides of the crystal form of the Casselman-Shalika formula.

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cscrystal/rootsys.hpp"
#include "cscrystal/tpoly.hpp"

namespace cscrystal {

using Exponent = std::vector<int>;

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept;
};

class LaurentPoly {
 public:
  using TermMap = std::unordered_map<Exponent, TPoly, ExponentHash>;

  LaurentPoly() = default;
  explicit LaurentPoly(int rank);

  static LaurentPoly monomial(int rank, Exponent exp, TPoly coeff = TPoly(1));
  static LaurentPoly monomial(const GLWeight& w, TPoly coeff = TPoly(1));

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  TPoly coefficient(const Exponent& exp) const;

  /// Terms in lexicographic order of exponent vectors.
  std::vector<std::pair<Exponent, TPoly>> sorted_terms() const;

  void add_term(const Exponent& exp, const TPoly& coeff);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  /// Substitutes an integer for t.
  LaurentPoly eval_t(const Integer& t) const;
  /// Substitutes values for z; returns the t-coefficients (ascending).
  std::vector<Rational> eval_z(std::span<const Rational> z) const;
  Rational evaluate(std::span<const Rational> z, const Rational& t) const;

  /// z^e -> z^{w(e)} with w acting on exponent coordinates.
  LaurentPoly permuted(const Permutation& w) const;

 private:
  void check_rank(const LaurentPoly& o) const;

  int rank_ = 0;
  TermMap terms_;
};

/// Sum of z^{wt(b)} over B(lambda), i.e. the Schur polynomial.
LaurentPoly character(const GLWeight& lam);

/// prod_{i<j} (1 - t z_j / z_i).
LaurentPoly deformed_product(int rank);

/// z^rho chi_lambda(z) prod_{alpha>0} (1 - t z^{-alpha}).
LaurentPoly cs_lhs(const GLWeight& lam);

/// Sum over B(lambda+rho) of C(b) z^{wt(b)}.
LaurentPoly cs_rhs(const GLWeight& lam, unsigned threads = 1);

struct IdentityReport {
  bool equal = false;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  std::size_t crystal_size = 0;
  std::optional<Exponent> first_mismatch;
};

IdentityReport verify_identity(const GLWeight& lam, unsigned threads = 1);

/// Checks the w_0-twisted form
///   chi_lambda(z) prod (1 - t z^{alpha}) = sum_b G(b) q^{-S(b)} z^{w_0(wt(b) - rho)}
/// with G taken from the operator decorations, together with the per-element
/// relations G(b) q^{-S(b)} = C(b) and S(b) = sum_i c_i(b).
struct BnReport {
  bool holds = false;
  bool polynomial_identity = false;
  bool scalar_relation = false;
  bool height_relation = false;
  std::size_t elements_checked = 0;
};

BnReport verify_bn_form(const GLWeight& lam, unsigned threads = 1);

}  // namespace cscrystal
