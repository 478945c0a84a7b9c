#pragma once

// Type A (GL_{r+1}) weight lattice. Weights are integer vectors of length
// r+1; coordinate k is the coefficient of the basis vector e_{k+1}.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cscrystal {

class GLWeight {
 public:
  GLWeight() = default;
  GLWeight(int rank, std::vector<int> coords);

  static GLWeight zero(int rank);

  int rank() const { return rank_; }
  std::size_t size() const { return coords_.size(); }
  std::span<const int> coords() const { return coords_; }
  const std::vector<int>& vec() const { return coords_; }

  /// 0-based coordinate access.
  int operator[](std::size_t k) const { return coords_[k]; }

  int total() const;
  bool is_partition() const;

  GLWeight& operator+=(const GLWeight& other);
  GLWeight& operator-=(const GLWeight& other);
  GLWeight operator-() const;

  friend GLWeight operator+(GLWeight a, const GLWeight& b) { return a += b; }
  friend GLWeight operator-(GLWeight a, const GLWeight& b) { return a -= b; }
  friend GLWeight operator*(int s, GLWeight w);

  friend bool operator==(const GLWeight&, const GLWeight&) = default;
  friend auto operator<=>(const GLWeight&, const GLWeight&) = default;

 private:
  int rank_ = 0;
  std::vector<int> coords_;
};

/// Partition with exactly r+1 parts (trailing parts may be zero).
class Shape {
 public:
  Shape() = default;
  Shape(int rank, std::vector<int> parts);
  explicit Shape(const GLWeight& partition);

  int rank() const { return rank_; }
  const std::vector<int>& parts() const { return parts_; }
  /// 1-based row length; 0 for rows past the last part.
  int row_length(int row) const;
  int num_nonempty_rows() const;
  int size() const;

  /// lambda + rho type: l_1 > l_2 > ... > l_r > l_{r+1} = 0.
  bool is_strict() const;

  GLWeight as_weight() const { return GLWeight(rank_, parts_); }

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  int rank_ = 0;
  std::vector<int> parts_;
};

/// Coefficients c_i of mu = sum c_i alpha_i, all nonnegative.
class AlphaVector {
 public:
  AlphaVector() = default;
  explicit AlphaVector(std::vector<int> c);

  int rank() const { return static_cast<int>(c_.size()); }
  const std::vector<int>& coeffs() const { return c_; }
  int operator[](std::size_t i) const { return c_[i]; }
  int height() const;

  friend bool operator==(const AlphaVector&, const AlphaVector&) = default;
  friend auto operator<=>(const AlphaVector&, const AlphaVector&) = default;

 private:
  std::vector<int> c_;
};

/// Permutation of {1..n} in one-line notation; acts on vectors by e_k -> e_{w(k)}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(w_.size()); }
  const std::vector<int>& one_line() const { return w_; }
  int operator()(int k) const { return w_[k - 1]; }

  int inversions() const;
  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }

  /// (this * other)(k) = this(other(k)).
  Permutation compose(const Permutation& other) const;

  /// Permutes the coordinates of v: result[w(k)] = v[k].
  std::vector<int> apply(std::span<const int> v) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

/// All permutations of {1..n} in lexicographic order of their one-line form.
std::vector<Permutation> all_permutations(int n);

GLWeight simple_root(int i, int rank);
GLWeight rho(int rank);
GLWeight lambda_from_fundamental(std::span<const int> coeffs, int rank);
/// Validated dominant weight from a partition of at most r+1 parts, zero padded.
GLWeight lambda_from_partition(std::span<const int> parts, int rank);

/// theta_i = l_i - l_{i+1} for a strict shape; every entry is at least 1.
std::vector<int> theta(const Shape& shape);

GLWeight alpha_to_gl(const AlphaVector& a, int rank);
/// Inverse of alpha_to_gl; nullopt unless w is a nonnegative combination of
/// simple roots.
std::optional<AlphaVector> gl_to_alpha(const GLWeight& w);

/// w o lambda = w(lambda + rho) - rho.
GLWeight dot_action(const Permutation& w, const GLWeight& lam);

/// (-1)^{l(w)} if w o lambda = lambda - mu for some w, else 0.
int dot_orbit_sign(const GLWeight& lam, const AlphaVector& mu);

}  // namespace cscrystal
