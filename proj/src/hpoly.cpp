#include "cscrystal/hpoly.hpp"

#include <algorithm>

#include "cscrystal/bzl.hpp"
#include "cscrystal/crystal.hpp"
#include "cscrystal/error.hpp"
#include "parallel.hpp"

namespace cscrystal {

namespace {

void require_dominant(const GLWeight& lam) {
  if (!lam.is_partition()) throw DomainError("lambda must be dominant (a partition)");
}

GLWeight target_weight(const GLWeight& lam, const AlphaVector& mu) {
  return lam + rho(lam.rank()) - alpha_to_gl(mu, lam.rank());
}

bool row_order(const HRow& a, const HRow& b) {
  if (a.mu.height() != b.mu.height()) return a.mu.height() < b.mu.height();
  return a.mu > b.mu;
}

// Partial table keyed by weight; summed by chunked_sum.
struct WeightSums {
  std::map<GLWeight, TPoly> sums;
  WeightSums& operator+=(const WeightSums& o) {
    for (const auto& [w, h] : o.sums) sums[w] += h;
    return *this;
  }
};

HTable table_from_sums(const GLWeight& lam, const WeightSums& s) {
  const GLWeight top = lam + rho(lam.rank());
  std::vector<HRow> rows;
  for (const auto& [w, h] : s.sums) {
    auto mu = gl_to_alpha(top - w);
    if (!mu) throw DomainError("weight of B(lambda+rho) outside the positive root cone");
    rows.push_back({*mu, h});
  }
  return HTable(lam, std::move(rows));
}

}  // namespace

bool in_weight_support(const GLWeight& lam, const AlphaVector& mu) {
  require_dominant(lam);
  const GLWeight target = target_weight(lam, mu);
  for (const auto& b : enumerate_crystal(Shape(lam + rho(lam.rank()))))
    if (content(b) == target) return true;
  return false;
}

TPoly h_direct(const GLWeight& lam, const AlphaVector& mu) {
  require_dominant(lam);
  const GLWeight target = target_weight(lam, mu);
  TPoly sum;
  for (const auto& b : enumerate_crystal(Shape(lam + rho(lam.rank()))))
    if (content(b) == target) sum += c_coefficient(b);
  return sum;
}

TPoly h_tensor(const GLWeight& lam, const AlphaVector& mu) {
  require_dominant(lam);
  const int r = lam.rank();
  const GLWeight target = target_weight(lam, mu);
  const auto left = enumerate_crystal(Shape(lam));
  const auto right = enumerate_crystal(Shape(rho(r)));
  TPoly sum;
  for (const auto& b1 : left) {
    const GLWeight w1 = content(b1);
    for (const auto& b2 : right)
      if (w1 + content(b2) == target) sum += c_coefficient(b2);
  }
  return sum;
}

HTable::HTable(GLWeight lam, std::vector<HRow> rows) : lam_(std::move(lam)), rows_(std::move(rows)) {
  std::sort(rows_.begin(), rows_.end(), row_order);
}

std::optional<TPoly> HTable::find(const AlphaVector& mu) const {
  for (const auto& row : rows_)
    if (row.mu == mu) return row.h;
  return std::nullopt;
}

bool operator==(const HTable& a, const HTable& b) {
  if (!(a.lam_ == b.lam_) || a.rows_.size() != b.rows_.size()) return false;
  for (std::size_t k = 0; k < a.rows_.size(); ++k)
    if (!(a.rows_[k].mu == b.rows_[k].mu) || !(a.rows_[k].h == b.rows_[k].h)) return false;
  return true;
}

HTable h_table(const GLWeight& lam, unsigned threads) {
  require_dominant(lam);
  const auto crystal = enumerate_crystal(Shape(lam + rho(lam.rank())));
  const WeightSums sums =
      detail::chunked_sum(crystal.size(), threads, WeightSums{}, [&](std::size_t begin, std::size_t end) {
        WeightSums part;
        for (std::size_t k = begin; k < end; ++k) part.sums[content(crystal[k])] += c_coefficient(crystal[k]);
        return part;
      });
  return table_from_sums(lam, sums);
}

HTable h_table_tensor(const GLWeight& lam, unsigned threads) {
  require_dominant(lam);
  const int r = lam.rank();
  const auto left = enumerate_crystal(Shape(lam));
  const auto right = enumerate_crystal(Shape(rho(r)));
  std::vector<GLWeight> right_weights;
  std::vector<TPoly> right_c;
  for (const auto& b : right) {
    right_weights.push_back(content(b));
    right_c.push_back(c_coefficient(b));
  }
  const WeightSums sums =
      detail::chunked_sum(left.size(), threads, WeightSums{}, [&](std::size_t begin, std::size_t end) {
        WeightSums part;
        for (std::size_t k = begin; k < end; ++k) {
          const GLWeight w1 = content(left[k]);
          for (std::size_t m = 0; m < right.size(); ++m) part.sums[w1 + right_weights[m]] += right_c[m];
        }
        return part;
      });
  return table_from_sums(lam, sums);
}

Integer specialize(const TPoly& h, SpecialPoint point) {
  switch (point) {
    case SpecialPoint::QInf:
      return h.eval(Integer(0));
    case SpecialPoint::QMinusOne:
      return h.eval(Integer(-1));
    case SpecialPoint::QOne:
      return h.eval(Integer(1));
  }
  return 0;
}

long weight_multiplicity(const GLWeight& lam, const GLWeight& nu) {
  require_dominant(lam);
  long count = 0;
  for (const auto& b : enumerate_crystal(Shape(lam)))
    if (content(b) == nu) ++count;
  return count;
}

long tensor_weight_multiplicity(const GLWeight& lam, const GLWeight& nu) {
  require_dominant(lam);
  std::map<GLWeight, long> left;
  std::map<GLWeight, long> right;
  for (const auto& b : enumerate_crystal(Shape(lam))) ++left[content(b)];
  for (const auto& b : enumerate_crystal(Shape(rho(lam.rank())))) ++right[content(b)];
  long total = 0;
  for (const auto& [eta, m] : left) {
    auto it = right.find(nu - eta);
    if (it != right.end()) total += m * it->second;
  }
  return total;
}

Integer specialization_oracle(const GLWeight& lam, const AlphaVector& mu, SpecialPoint point) {
  const GLWeight shift = alpha_to_gl(mu, lam.rank());
  switch (point) {
    case SpecialPoint::QInf:
      return weight_multiplicity(lam, lam - shift);
    case SpecialPoint::QMinusOne:
      return tensor_weight_multiplicity(lam, lam + rho(lam.rank()) - shift);
    case SpecialPoint::QOne:
      return dot_orbit_sign(lam, mu);
  }
  return 0;
}

}  // namespace cscrystal
