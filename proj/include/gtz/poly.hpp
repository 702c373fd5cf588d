#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gtz/rational.hpp"
#include "gtz/variables.hpp"

namespace gtz {

// A monomial in canonical form: factors sorted by VarId, exponents > 0.
class Monomial {
 public:
  Monomial() = default;
  // Canonicalizes: sorts, merges repeated variables, drops zero exponents.
  explicit Monomial(std::vector<std::pair<VarId, int>> factors);

  static Monomial one() { return Monomial{}; }

  int exponent(VarId v) const;
  int total_degree() const;
  bool is_one() const { return factors_.empty(); }
  const std::vector<std::pair<VarId, int>>& factors() const { return factors_; }

  Monomial multiplied(const Monomial& other) const;

  std::string str() const;  // "z[-2,-1]*z[0,1]^2", constant monomial is "1"

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<VarId, int>> factors_;
};

// Lexicographic monomial order with the canonical variable order: the
// monomial with the larger exponent on the earliest differing variable is
// the larger one. Total order; drives term sorting, matrix column order and
// every echelon-form computation, so results are reproducible bit for bit.
bool lex_less(const Monomial& a, const Monomial& b);

struct MonomialLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_less(a, b); }
};

// Sparse polynomial over the rationals. Invariant: no zero coefficients.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLexLess>;

  Poly() = default;  // zero
  static Poly constant(const Rational& c);
  static Poly variable(VarId v, int exponent = 1);
  static Poly term(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Coefficient of a monomial (zero if absent).
  Rational coefficient(const Monomial& m) const;
  // Highest exponent of v across all terms.
  int degree_in(VarId v) const;
  int total_degree() const;
  std::vector<VarId> variables() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  Poly pow(int k) const;  // k >= 0

  // Partial derivative with respect to one variable.
  Poly derivative(VarId v) const;

  // Terms sorted by descending monomial order, coefficients as "num/den".
  std::string str() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

// Ring homomorphism: replaces each assigned variable by its image and fully
// expands; unassigned variables are kept fixed.
Poly substitute(const Poly& f, const std::map<VarId, Poly>& assignment);

// Dimension of the rational span of the given polynomials (exact
// elimination). Invariant under permutation and nonzero scaling.
int rank_of_span(const std::vector<Poly>& fs);

}  // namespace gtz
