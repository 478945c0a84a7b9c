#include "cscrystal/tpoly.hpp"

#include <algorithm>

#include "cscrystal/error.hpp"

namespace cscrystal {

namespace {

// Appends "c*var^k" in expanded sign-separated form.
void append_term(std::string& out, const Integer& c, const std::string& power) {
  const bool negative = c < 0;
  const Integer mag = abs(c);
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (power.empty())
    out += mag.get_str();
  else
    out += (mag == 1 ? "" : mag.get_str()) + power;
}

}  // namespace

TPoly::TPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

TPoly::TPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

TPoly TPoly::t_power(int k, const Integer& c) {
  std::vector<Integer> v(k + 1, 0);
  v[k] = c;
  return TPoly(std::move(v));
}

void TPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer TPoly::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

Integer TPoly::eval(const Integer& t) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Rational TPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + Rational(*it);
  return acc;
}

TPoly TPoly::pow(int e) const {
  TPoly out(1);
  for (int k = 0; k < e; ++k) out *= *this;
  return out;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

TPoly& TPoly::operator*=(const TPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Integer> out(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t a = 0; a < c_.size(); ++a)
    for (std::size_t b = 0; b < o.c_.size(); ++b) out[a + b] += c_[a] * o.c_[b];
  c_ = std::move(out);
  trim();
  return *this;
}

TPoly TPoly::operator-() const {
  TPoly out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

std::string TPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    std::string power;
    if (k == 1) power = var;
    if (k > 1) power = var + "^" + std::to_string(k);
    append_term(out, c_[k], power);
  }
  return out;
}

QLaurent::QLaurent(long c) {
  if (c != 0) terms_.emplace(0, c);
}

QLaurent QLaurent::q_power(int k, const Integer& c) {
  QLaurent out;
  if (c != 0) out.terms_.emplace(k, c);
  return out;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [k, c] : o.terms_) {
    auto& slot = terms_[k];
    slot += c;
    if (slot == 0) terms_.erase(k);
  }
  return *this;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) {
  QLaurent out;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) out += q_power(ka + kb, ca * cb);
  *this = std::move(out);
  return *this;
}

QLaurent QLaurent::operator-() const {
  QLaurent out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

TPoly QLaurent::to_tpoly() const {
  if (!terms_.empty() && terms_.rbegin()->first > 0)
    throw DomainError("positive power of q has no expansion in t = 1/q");
  TPoly out;
  for (const auto& [k, c] : terms_) out += TPoly::t_power(-k, c);
  return out;
}

std::string QLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int k = it->first;
    std::string power;
    if (k == 1) power = "q";
    if (k != 0 && k != 1) power = "q^" + std::to_string(k);
    append_term(out, it->second, power);
  }
  return out;
}

}  // namespace cscrystal
