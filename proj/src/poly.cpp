#include "gtz/poly.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "gtz/linalg.hpp"

namespace gtz {

Monomial::Monomial(std::vector<std::pair<VarId, int>> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [var, exp] : factors) {
    assert(exp >= 0);
    if (exp == 0) continue;
    if (!factors_.empty() && factors_.back().first == var) {
      factors_.back().second += exp;
    } else {
      factors_.emplace_back(var, exp);
    }
  }
}

int Monomial::exponent(VarId v) const {
  for (const auto& [var, exp] : factors_) {
    if (var == v) return exp;
  }
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [var, exp] : factors_) d += exp;
  return d;
}

Monomial Monomial::multiplied(const Monomial& other) const {
  Monomial out;
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() || j != other.factors_.end()) {
    if (j == other.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [var, exp] : factors_) {
    if (!s.empty()) s += "*";
    s += var.str();
    if (exp != 1) s += "^" + std::to_string(exp);
  }
  return s;
}

bool lex_less(const Monomial& a, const Monomial& b) {
  auto i = a.factors().begin();
  auto j = b.factors().begin();
  while (i != a.factors().end() && j != b.factors().end()) {
    if (i->first < j->first) return false;  // a has the earlier variable -> a is larger
    if (j->first < i->first) return true;
    if (i->second != j->second) return i->second < j->second;
    ++i;
    ++j;
  }
  if (i != a.factors().end()) return false;
  if (j != b.factors().end()) return true;
  return false;
}

Poly Poly::constant(const Rational& c) {
  Poly p;
  p.add_term(Monomial::one(), c);
  return p;
}

Poly Poly::variable(VarId v, int exponent) {
  assert(exponent >= 0);
  if (exponent == 0) return constant(1);
  Poly p;
  p.add_term(Monomial({{v, exponent}}), 1);
  return p;
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree_in(VarId v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

std::vector<VarId> Poly::variables() const {
  std::set<VarId> vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& [var, exp] : m.factors()) vars.insert(var);
  }
  return {vars.begin(), vars.end()};
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  Poly out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      out.add_term(ma.multiplied(mb), ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, coeff] : out.terms_) coeff = -coeff;
  return out;
}

Poly Poly::pow(int k) const {
  assert(k >= 0);
  Poly out = constant(1);
  for (int i = 0; i < k; ++i) out *= *this;
  return out;
}

Poly Poly::derivative(VarId v) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    std::vector<std::pair<VarId, int>> factors = m.factors();
    for (auto& [var, exp] : factors) {
      if (var == v) exp -= 1;
    }
    out.add_term(Monomial(std::move(factors)), c * e);
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    std::string body;
    if (m.is_one()) {
      body = rational_str(mag);
    } else if (mag == 1) {
      body = m.str();
    } else {
      body = rational_str(mag) + "*" + m.str();
    }
    if (s.empty()) {
      s = (negative ? "-" : "") + body;
    } else {
      s += (negative ? " - " : " + ") + body;
    }
  }
  return s;
}

Poly substitute(const Poly& f, const std::map<VarId, Poly>& assignment) {
  Poly out;
  for (const auto& [m, c] : f.terms()) {
    Poly term = Poly::constant(c);
    for (const auto& [var, exp] : m.factors()) {
      auto it = assignment.find(var);
      if (it == assignment.end()) {
        term *= Poly::variable(var, exp);
      } else {
        term *= it->second.pow(exp);
      }
    }
    out += term;
  }
  return out;
}

int rank_of_span(const std::vector<Poly>& fs) {
  // Coordinates over the union of monomials, columns in descending order.
  std::set<Monomial, MonomialLexLess> monomials;
  for (const Poly& f : fs) {
    for (const auto& [m, c] : f.terms()) monomials.insert(m);
  }
  std::vector<Monomial> cols(monomials.rbegin(), monomials.rend());
  detail::QMatrix mat;
  mat.reserve(fs.size());
  for (const Poly& f : fs) {
    detail::QRow row;
    row.reserve(cols.size());
    for (const Monomial& m : cols) row.push_back(f.coefficient(m));
    mat.push_back(std::move(row));
  }
  return detail::rref(mat);
}

}  // namespace gtz
