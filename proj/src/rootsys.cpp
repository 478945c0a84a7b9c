#include "cscrystal/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cscrystal/error.hpp"

namespace cscrystal {

namespace {

void check_rank(int rank) {
  if (rank < 1) throw RankError("rank must be at least 1, got " + std::to_string(rank));
}

}  // namespace

GLWeight::GLWeight(int rank, std::vector<int> coords) : rank_(rank), coords_(std::move(coords)) {
  check_rank(rank);
  if (coords_.size() != static_cast<std::size_t>(rank + 1))
    throw RankError("weight of rank " + std::to_string(rank) + " needs " +
                    std::to_string(rank + 1) + " coordinates, got " +
                    std::to_string(coords_.size()));
}

GLWeight GLWeight::zero(int rank) {
  check_rank(rank);
  return GLWeight(rank, std::vector<int>(rank + 1, 0));
}

int GLWeight::total() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

bool GLWeight::is_partition() const {
  if (coords_.empty() || coords_.back() < 0) return false;
  return std::is_sorted(coords_.rbegin(), coords_.rend());
}

GLWeight& GLWeight::operator+=(const GLWeight& other) {
  if (other.rank_ != rank_) throw RankError("rank mismatch in weight addition");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += other.coords_[k];
  return *this;
}

GLWeight& GLWeight::operator-=(const GLWeight& other) {
  if (other.rank_ != rank_) throw RankError("rank mismatch in weight subtraction");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= other.coords_[k];
  return *this;
}

GLWeight GLWeight::operator-() const {
  GLWeight out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

GLWeight operator*(int s, GLWeight w) {
  for (auto& c : w.coords_) c *= s;
  return w;
}

Shape::Shape(int rank, std::vector<int> parts) : rank_(rank), parts_(std::move(parts)) {
  check_rank(rank);
  if (parts_.size() != static_cast<std::size_t>(rank + 1))
    throw ShapeError("shape of rank " + std::to_string(rank) + " needs " +
                     std::to_string(rank + 1) + " parts");
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 0) throw ShapeError("shape parts must be nonnegative");
    if (k > 0 && parts_[k] > parts_[k - 1]) throw ShapeError("shape parts must weakly decrease");
  }
}

Shape::Shape(const GLWeight& partition) : Shape(partition.rank(), partition.vec()) {}

int Shape::row_length(int row) const {
  if (row < 1 || row > static_cast<int>(parts_.size())) return 0;
  return parts_[row - 1];
}

int Shape::num_nonempty_rows() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
}

int Shape::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Shape::is_strict() const {
  if (parts_.back() != 0) return false;
  for (std::size_t k = 1; k < parts_.size(); ++k)
    if (parts_[k] >= parts_[k - 1]) return false;
  return true;
}

AlphaVector::AlphaVector(std::vector<int> c) : c_(std::move(c)) {
  for (int x : c_)
    if (x < 0) throw DomainError("alpha coefficients must be nonnegative");
}

int AlphaVector::height() const { return std::accumulate(c_.begin(), c_.end(), 0); }

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int x : w_) {
    if (x < 1 || x > static_cast<int>(w_.size()) || seen[x])
      throw DomainError("not a permutation in one-line notation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

int Permutation::inversions() const {
  int count = 0;
  for (std::size_t a = 0; a < w_.size(); ++a)
    for (std::size_t b = a + 1; b < w_.size(); ++b)
      if (w_[a] > w_[b]) ++count;
  return count;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.degree() != degree()) throw DomainError("permutation degrees differ");
  std::vector<int> w(w_.size());
  for (int k = 1; k <= degree(); ++k) w[k - 1] = (*this)(other(k));
  return Permutation(std::move(w));
}

std::vector<int> Permutation::apply(std::span<const int> v) const {
  if (v.size() != w_.size()) throw DomainError("permutation degree does not match vector length");
  std::vector<int> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[w_[k] - 1] = v[k];
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

GLWeight simple_root(int i, int rank) {
  check_rank(rank);
  if (i < 1 || i > rank)
    throw RankError("simple root index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
  std::vector<int> v(rank + 1, 0);
  v[i - 1] = 1;
  v[i] = -1;
  return GLWeight(rank, std::move(v));
}

GLWeight rho(int rank) {
  check_rank(rank);
  std::vector<int> v(rank + 1);
  for (int k = 0; k <= rank; ++k) v[k] = rank - k;
  return GLWeight(rank, std::move(v));
}

GLWeight lambda_from_fundamental(std::span<const int> coeffs, int rank) {
  check_rank(rank);
  if (coeffs.size() != static_cast<std::size_t>(rank))
    throw RankError("expected " + std::to_string(rank) + " fundamental-weight coefficients, got " +
                    std::to_string(coeffs.size()));
  std::vector<int> v(rank + 1, 0);
  int running = 0;
  for (int j = rank; j >= 1; --j) {
    if (coeffs[j - 1] < 0) throw DomainError("fundamental-weight coefficients must be nonnegative");
    running += coeffs[j - 1];
    v[j - 1] = running;
  }
  return GLWeight(rank, std::move(v));
}

GLWeight lambda_from_partition(std::span<const int> parts, int rank) {
  check_rank(rank);
  if (parts.size() > static_cast<std::size_t>(rank + 1))
    throw RankError("partition has more than " + std::to_string(rank + 1) + " parts");
  std::vector<int> v(parts.begin(), parts.end());
  v.resize(rank + 1, 0);
  GLWeight w(rank, std::move(v));
  if (!w.is_partition()) throw DomainError("lambda must be a partition (weakly decreasing, nonnegative)");
  return w;
}

std::vector<int> theta(const Shape& shape) {
  if (!shape.is_strict())
    throw ShapeError("theta needs a strictly decreasing shape ending in 0");
  const auto& l = shape.parts();
  std::vector<int> out(shape.rank());
  for (int i = 0; i < shape.rank(); ++i) out[i] = l[i] - l[i + 1];
  return out;
}

GLWeight alpha_to_gl(const AlphaVector& a, int rank) {
  if (a.rank() != rank) throw RankError("alpha vector length does not match rank");
  GLWeight out = GLWeight::zero(rank);
  for (int i = 1; i <= rank; ++i) out += a[i - 1] * simple_root(i, rank);
  return out;
}

std::optional<AlphaVector> gl_to_alpha(const GLWeight& w) {
  if (w.total() != 0) return std::nullopt;
  std::vector<int> c(w.rank());
  int running = 0;
  for (int i = 0; i < w.rank(); ++i) {
    running += w[i];
    if (running < 0) return std::nullopt;
    c[i] = running;
  }
  return AlphaVector(std::move(c));
}

GLWeight dot_action(const Permutation& w, const GLWeight& lam) {
  if (w.degree() != lam.rank() + 1) throw DomainError("permutation degree must be rank + 1");
  const GLWeight shifted = lam + rho(lam.rank());
  return GLWeight(lam.rank(), w.apply(shifted.coords())) - rho(lam.rank());
}

int dot_orbit_sign(const GLWeight& lam, const AlphaVector& mu) {
  const GLWeight target = lam - alpha_to_gl(mu, lam.rank());
  // lambda + rho is regular for dominant lambda, so at most one w matches.
  for (const auto& w : all_permutations(lam.rank() + 1))
    if (dot_action(w, lam) == target) return w.sign();
  return 0;
}

}  // namespace cscrystal
