#include "cscrystal/laurent.hpp"

#include <algorithm>

#include "cscrystal/bzl.hpp"
#include "cscrystal/crystal.hpp"
#include "cscrystal/error.hpp"
#include "parallel.hpp"

namespace cscrystal {

std::size_t ExponentHash::operator()(const Exponent& e) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : e) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(x)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

LaurentPoly::LaurentPoly(int rank) : rank_(rank) {
  if (rank < 1) throw RankError("rank must be at least 1");
}

LaurentPoly LaurentPoly::monomial(int rank, Exponent exp, TPoly coeff) {
  LaurentPoly p(rank);
  if (exp.size() != static_cast<std::size_t>(rank + 1)) throw RankError("exponent length must be rank + 1");
  p.add_term(exp, coeff);
  return p;
}

LaurentPoly LaurentPoly::monomial(const GLWeight& w, TPoly coeff) {
  return monomial(w.rank(), w.vec(), std::move(coeff));
}

TPoly LaurentPoly::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? TPoly() : it->second;
}

std::vector<std::pair<Exponent, TPoly>> LaurentPoly::sorted_terms() const {
  std::vector<std::pair<Exponent, TPoly>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void LaurentPoly::add_term(const Exponent& exp, const TPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exp, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void LaurentPoly::check_rank(const LaurentPoly& o) const {
  if (o.rank_ != rank_) throw RankError("Laurent polynomial rank mismatch");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  // A default-constructed zero adopts the rank of the other operand.
  if (rank_ == 0) rank_ = o.rank_;
  if (o.rank_ != 0) check_rank(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (rank_ == 0) rank_ = o.rank_;
  if (o.rank_ != 0) check_rank(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_rank(b);
  LaurentPoly out(a.rank_);
  Exponent sum(a.rank_ + 1);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = ea[k] + eb[k];
      out.add_term(sum, ca * cb);
    }
  return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  if (a.rank_ != b.rank_) return false;
  for (const auto& [e, c] : a.terms_) {
    auto it = b.terms_.find(e);
    if (it == b.terms_.end() || !(it->second == c)) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::eval_t(const Integer& t) const {
  LaurentPoly out(rank_);
  for (const auto& [e, c] : terms_) {
    const Integer v = c.eval(t);
    if (v != 0) out.add_term(e, TPoly(std::vector<Integer>{v}));
  }
  return out;
}

namespace {

Rational power(const Rational& base, int e) {
  if (e < 0) {
    if (base == 0) throw DomainError("zero raised to a negative power");
    return power(Rational(1) / base, -e);
  }
  Rational out = 1;
  for (int k = 0; k < e; ++k) out *= base;
  return out;
}

Rational monomial_value(const Exponent& e, std::span<const Rational> z) {
  Rational m = 1;
  for (std::size_t k = 0; k < e.size(); ++k) m *= power(z[k], e[k]);
  return m;
}

}  // namespace

std::vector<Rational> LaurentPoly::eval_z(std::span<const Rational> z) const {
  if (z.size() != static_cast<std::size_t>(rank_ + 1)) throw RankError("need rank + 1 values for z");
  std::vector<Rational> out;
  for (const auto& [e, c] : terms_) {
    const Rational m = monomial_value(e, z);
    if (out.size() < c.coeffs().size()) out.resize(c.coeffs().size(), 0);
    for (std::size_t k = 0; k < c.coeffs().size(); ++k) out[k] += m * Rational(c.coeffs()[k]);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Rational LaurentPoly::evaluate(std::span<const Rational> z, const Rational& t) const {
  Rational acc = 0;
  const auto coeffs = eval_z(z);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

LaurentPoly LaurentPoly::permuted(const Permutation& w) const {
  if (w.degree() != rank_ + 1) throw RankError("permutation degree must be rank + 1");
  LaurentPoly out(rank_);
  for (const auto& [e, c] : terms_) out.add_term(w.apply(e), c);
  return out;
}

namespace {

void require_dominant(const GLWeight& lam) {
  if (!lam.is_partition()) throw DomainError("lambda must be dominant (a partition)");
}

// prod_{i<j} (1 - t z^{sign * (e_i - e_j)}).
LaurentPoly root_product(int rank, int sign) {
  LaurentPoly out = LaurentPoly::monomial(GLWeight::zero(rank));
  for (int i = 1; i <= rank + 1; ++i)
    for (int j = i + 1; j <= rank + 1; ++j) {
      Exponent e(rank + 1, 0);
      e[i - 1] = sign;
      e[j - 1] = -sign;
      out = out * (LaurentPoly::monomial(GLWeight::zero(rank)) +
                   LaurentPoly::monomial(rank, e, TPoly::t_power(1, -1)));
    }
  return out;
}

}  // namespace

LaurentPoly character(const GLWeight& lam) {
  require_dominant(lam);
  LaurentPoly out(lam.rank());
  for (const auto& b : enumerate_crystal(Shape(lam))) out.add_term(content(b).vec(), TPoly(1));
  return out;
}

LaurentPoly deformed_product(int rank) { return root_product(rank, -1); }

LaurentPoly cs_lhs(const GLWeight& lam) {
  require_dominant(lam);
  return LaurentPoly::monomial(rho(lam.rank())) * character(lam) * deformed_product(lam.rank());
}

LaurentPoly cs_rhs(const GLWeight& lam, unsigned threads) {
  require_dominant(lam);
  const auto crystal = enumerate_crystal(Shape(lam + rho(lam.rank())));
  return detail::chunked_sum(crystal.size(), threads, LaurentPoly(lam.rank()),
                             [&](std::size_t begin, std::size_t end) {
                               LaurentPoly part(lam.rank());
                               for (std::size_t k = begin; k < end; ++k)
                                 part.add_term(content(crystal[k]).vec(), c_coefficient(crystal[k]));
                               return part;
                             });
}

IdentityReport verify_identity(const GLWeight& lam, unsigned threads) {
  const LaurentPoly lhs = cs_lhs(lam);
  const LaurentPoly rhs = cs_rhs(lam, threads);
  IdentityReport report;
  report.lhs_terms = lhs.num_terms();
  report.rhs_terms = rhs.num_terms();
  report.crystal_size = enumerate_crystal(Shape(lam + rho(lam.rank()))).size();
  const LaurentPoly diff = lhs - rhs;
  report.equal = diff.is_zero();
  if (!report.equal) report.first_mismatch = diff.sorted_terms().front().first;
  return report;
}

BnReport verify_bn_form(const GLWeight& lam, unsigned threads) {
  require_dominant(lam);
  const int r = lam.rank();
  const GLWeight shifted = lam + rho(r);
  const auto crystal = enumerate_crystal(Shape(shifted));
  std::vector<int> reversal(r + 1);
  for (int k = 0; k <= r; ++k) reversal[k] = r + 1 - k;
  const Permutation longest(reversal);

  struct Partial {
    LaurentPoly sum;
    bool scalar = true;
    bool height = true;
    Partial& operator+=(const Partial& o) {
      sum += o.sum;
      scalar = scalar && o.scalar;
      height = height && o.height;
      return *this;
    }
  };

  const Partial total = detail::chunked_sum(
      crystal.size(), threads, Partial{LaurentPoly(r)}, [&](std::size_t begin, std::size_t end) {
        Partial part{LaurentPoly(r)};
        for (std::size_t k = begin; k < end; ++k) {
          const Tableau& b = crystal[k];
          const DecoratedTriangle d = decorate_via_operators(b);
          const int s = d.entry_sum();
          const QLaurent g_scaled = g_coefficient(d) * QLaurent::q_power(-s);
          if (!g_scaled.is_zero() && g_scaled.terms().rbegin()->first > 0) {
            part.scalar = false;
            continue;
          }
          const TPoly scaled = g_scaled.to_tpoly();
          part.scalar = part.scalar && scaled == c_coefficient(b);
          const auto c = gl_to_alpha(shifted - content(b));
          part.height = part.height && c && c->height() == s;
          const GLWeight twisted = content(b) - rho(r);
          part.sum.add_term(longest.apply(twisted.coords()), scaled);
        }
        return part;
      });

  BnReport report;
  report.elements_checked = crystal.size();
  report.polynomial_identity = total.sum == character(lam) * root_product(r, +1);
  report.scalar_relation = total.scalar;
  report.height_relation = total.height;
  report.holds = report.polynomial_identity && report.scalar_relation && report.height_relation;
  return report;
}

}  // namespace cscrystal
