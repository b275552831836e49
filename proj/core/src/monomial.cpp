#include "indvar/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace indvar {

std::string var_name(VarIndex v) {
  if (is_curve_param(v)) return "t";
  if (is_aux_var(v)) return "y" + std::to_string(v - kFirstAuxVar);
  return "x" + std::to_string(v);
}

Monomial::Monomial(std::vector<Entry> exponents) : exps_(std::move(exponents)) {
  std::sort(exps_.begin(), exps_.end());
  std::vector<Entry> merged;
  for (const auto& [v, e] : exps_) {
    if (v <= 0) throw std::invalid_argument("variable index must be positive");
    if (e == 0) continue;
    if (e < 0) throw std::invalid_argument("exponent must be positive");
    if (!merged.empty() && merged.back().first == v)
      merged.back().second += e;
    else
      merged.emplace_back(v, e);
  }
  exps_ = std::move(merged);
}

Monomial Monomial::variable(VarIndex v, int e) {
  return Monomial({{v, e}});
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : exps_) d += e;
  return d;
}

int Monomial::exponent(VarIndex v) const {
  for (const auto& [w, e] : exps_)
    if (w == v) return e;
  return 0;
}

bool Monomial::is_pure_power_of(VarIndex v) const {
  return exps_.size() == 1 && exps_[0].first == v;
}

bool Monomial::divides(const Monomial& m) const {
  auto it = m.exps_.begin();
  for (const auto& [v, e] : exps_) {
    while (it != m.exps_.end() && it->first < v) ++it;
    if (it == m.exps_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

bool Monomial::coprime_with(const Monomial& m) const {
  auto a = exps_.begin();
  auto b = m.exps_.begin();
  while (a != exps_.end() && b != m.exps_.end()) {
    if (a->first == b->first) return false;
    if (a->first < b->first)
      ++a;
    else
      ++b;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  std::vector<Entry> out;
  out.reserve(exps_.size() + m.exps_.size());
  auto a = exps_.begin();
  auto b = m.exps_.begin();
  while (a != exps_.end() || b != m.exps_.end()) {
    if (b == m.exps_.end() || (a != exps_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == exps_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      out.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  Monomial r;
  r.exps_ = std::move(out);
  return r;
}

Monomial Monomial::divide_exact(const Monomial& d) const {
  std::vector<Entry> out;
  out.reserve(exps_.size());
  auto b = d.exps_.begin();
  for (const auto& [v, e] : exps_) {
    int sub = 0;
    while (b != d.exps_.end() && b->first < v) ++b;
    if (b != d.exps_.end() && b->first == v) sub = b->second;
    if (sub > e) throw std::invalid_argument("divide_exact: divisor does not divide");
    if (e - sub > 0) out.emplace_back(v, e - sub);
  }
  Monomial r;
  r.exps_ = std::move(out);
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<Entry> out;
  auto i = a.exps_.begin();
  auto j = b.exps_.begin();
  while (i != a.exps_.end() || j != b.exps_.end()) {
    if (j == b.exps_.end() || (i != a.exps_.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.exps_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, std::max(i->second, j->second));
      ++i;
      ++j;
    }
  }
  Monomial r;
  r.exps_ = std::move(out);
  return r;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: scan from the highest variable downwards; the monomial with
  // the smaller exponent at the first difference is the larger one.
  auto i = a.exps_.rbegin();
  auto j = b.exps_.rbegin();
  while (i != a.exps_.rend() || j != b.exps_.rend()) {
    VarIndex va = (i != a.exps_.rend()) ? i->first : 0;
    VarIndex vb = (j != b.exps_.rend()) ? j->first : 0;
    if (va > vb) return -1;  // a has the higher trailing variable: a smaller
    if (vb > va) return 1;
    if (i->second != j->second) return i->second > j->second ? -1 : 1;
    ++i;
    ++j;
  }
  return 0;
}

std::string Monomial::str() const {
  if (exps_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : exps_) {
    if (!s.empty()) s += "*";
    s += var_name(v);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace indvar
