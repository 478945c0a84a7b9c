#pragma once

// Exact univariate polynomials. TPoly lives in Z[t] with t = q^{-1};
// QLaurent lives in Z[q, q^{-1}] and only appears where the coefficient G of
// a crystal element is formed.

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace cscrystal {

using Integer = mpz_class;
using Rational = mpq_class;

class TPoly {
 public:
  TPoly() = default;
  TPoly(long c);  // NOLINT: implicit constant
  explicit TPoly(std::vector<Integer> coeffs);

  static TPoly t_power(int k, const Integer& c = 1);
  static TPoly one_minus_t() { return TPoly(std::vector<Integer>{1, -1}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of t^k (0 past the degree).
  Integer operator[](int k) const;
  const std::vector<Integer>& coeffs() const { return c_; }

  Integer eval(const Integer& t) const;
  Rational eval(const Rational& t) const;

  TPoly pow(int e) const;

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const TPoly& o);
  TPoly operator-() const;

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(TPoly a, const TPoly& b) { return a *= b; }
  friend bool operator==(const TPoly&, const TPoly&) = default;

  /// Expanded form in t, e.g. "-t + 2t^2 - t^3"; "0" for zero.
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Integer> c_;
};

class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(long c);  // NOLINT: implicit constant

  static QLaurent q_power(int k, const Integer& c = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Integer>& terms() const { return terms_; }

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o);
  QLaurent operator-() const;
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator*(QLaurent a, const QLaurent& b) { return a *= b; }
  friend bool operator==(const QLaurent&, const QLaurent&) = default;

  /// Rewrites q^{-k} as t^k. Throws DomainError if a positive power of q survives.
  TPoly to_tpoly() const;

  std::string to_string() const;

 private:
  std::map<int, Integer> terms_;
};

}  // namespace cscrystal
