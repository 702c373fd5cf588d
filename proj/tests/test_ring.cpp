#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "gtz/poly.hpp"

using namespace gtz;

namespace {

const VarId kA = VarId::z(-2, -1);
const VarId kB = VarId::z(-2, 1);
const VarId kT = VarId::z(0, 1);
const VarId kX = VarId::z(-1, 1);

Poly var(VarId v, int e = 1) { return Poly::variable(v, e); }

// Random polynomial of total degree <= 3 in at most 4 variables, small
// rational coefficients. Deterministic under a fixed seed.
Poly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> term_count(0, 4);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> deg(0, 3);
  const VarId vars[4] = {kA, kB, kT, kX};
  Poly f;
  const int terms = term_count(rng);
  for (int i = 0; i < terms; ++i) {
    std::vector<std::pair<VarId, int>> factors;
    for (int d = deg(rng); d > 0; --d) factors.emplace_back(vars[pick(rng)], 1);
    const int c = num(rng);
    if (c == 0) continue;
    f += Poly::term(Monomial(factors), Rational(c, den(rng)));
  }
  return f;
}

}  // namespace

TEST_CASE("monomial canonical form") {
  const Monomial m({{kT, 1}, {kA, 2}, {kT, 1}});
  CHECK(m.exponent(kT) == 2);
  CHECK(m.exponent(kA) == 2);
  CHECK(m.exponent(kB) == 0);
  CHECK(m.total_degree() == 4);
  CHECK(m.str() == "z[-2,-1]^2*z[0,1]^2");
  CHECK(Monomial({{kA, 0}}).is_one());
  CHECK(Monomial().str() == "1");
}

TEST_CASE("monomial order is a strict total order on samples") {
  const Monomial one;
  const Monomial a({{kA, 1}});
  const Monomial b({{kB, 1}});
  const Monomial at({{kA, 1}, {kT, 1}});
  CHECK(lex_less(one, a));
  CHECK(lex_less(b, a));   // a is the earlier variable, so a-divisible wins
  CHECK(lex_less(a, at));
  CHECK(!lex_less(a, a));
  std::vector<Monomial> ms = {one, a, b, at, Monomial({{kT, 3}})};
  std::sort(ms.begin(), ms.end(), MonomialLexLess{});
  for (std::size_t i = 0; i + 1 < ms.size(); ++i) CHECK(lex_less(ms[i], ms[i + 1]));
}

TEST_CASE("substitution examples") {
  const std::map<VarId, Poly> soot{{kX, var(kT, 2) * Rational(1, 2)}};
  CHECK(substitute(var(kX), soot) == var(kT, 2) * Rational(1, 2));
  CHECK(substitute(Poly::constant(1), soot) == Poly::constant(1));

  const Poly f = var(kB) - var(kX) * var(kA);
  const Poly expected = var(kB) - var(kT, 2) * var(kA) * Rational(1, 2);
  CHECK(substitute(f, soot) == expected);
}

TEST_CASE("rank examples") {
  CHECK(rank_of_span({Poly::constant(1), var(kT), var(kT, 2)}) == 3);
  const Poly f = var(kA) + var(kT) * Rational(2);
  CHECK(rank_of_span({f, f * Rational(2)}) == 1);
  CHECK(rank_of_span({var(kB) + var(kA), var(kB) - var(kA), var(kB)}) == 2);
  CHECK(rank_of_span({}) == 0);
  CHECK(rank_of_span({Poly{}}) == 0);
}

TEST_CASE("text rendering") {
  CHECK(Poly{}.str() == "0");
  CHECK(Poly::constant(Rational(1, 2)).str() == "1/2");
  CHECK(Poly::constant(Rational(-2)).str() == "-2");
  CHECK(var(kB).str() == "z[-2,1]");
  CHECK((var(kT, 2) * var(kA) * Rational(1, 2)).str() == "1/2*z[-2,-1]*z[0,1]^2");
  CHECK((var(kB) - var(kA) * var(kT, 2) * Rational(1, 2)).str() ==
        "-1/2*z[-2,-1]*z[0,1]^2 + z[-2,1]");
  CHECK((Poly::constant(1) + var(kT)).str() == "z[0,1] + 1");
}

TEST_CASE("arithmetic basics") {
  const Poly f = var(kA) + var(kB);
  const Poly g = var(kA) - var(kB);
  CHECK(f * g == var(kA, 2) - var(kB, 2));
  CHECK((f - f).is_zero());
  CHECK(f.pow(0) == Poly::constant(1));
  CHECK(f.pow(2) == f * f);
  CHECK((-f) + f == Poly{});
  CHECK(f.degree_in(kA) == 1);
  CHECK(f.total_degree() == 1);
  CHECK((var(kT, 2) * var(kA)).total_degree() == 3);
  CHECK(var(kT, 3).derivative(kT) == var(kT, 2) * Rational(3));
  CHECK(Poly::constant(5).derivative(kT).is_zero());
}

TEST_CASE("ring axioms hold on random samples") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 200; ++i) {
    const Poly f = random_poly(rng);
    const Poly g = random_poly(rng);
    const Poly h = random_poly(rng);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937 rng(775001);
  const std::map<VarId, Poly> assignment{
      {kX, var(kT, 2) * Rational(1, 2)},
      {kA, var(kA) + Poly::constant(1)},
  };
  for (int i = 0; i < 200; ++i) {
    const Poly f = random_poly(rng);
    const Poly g = random_poly(rng);
    CHECK(substitute(f * g, assignment) ==
          substitute(f, assignment) * substitute(g, assignment));
    CHECK(substitute(f + g, assignment) ==
          substitute(f, assignment) + substitute(g, assignment));
  }
}

TEST_CASE("rank is invariant under permutation and scaling") {
  std::mt19937 rng(90210);
  std::uniform_int_distribution<int> scale(1, 5);
  for (int i = 0; i < 200; ++i) {
    std::vector<Poly> fs = {random_poly(rng), random_poly(rng), random_poly(rng),
                            random_poly(rng)};
    const int r = rank_of_span(fs);
    CHECK(r <= 4);

    std::vector<Poly> shuffled = fs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(rank_of_span(shuffled) == r);

    std::vector<Poly> scaled;
    for (const Poly& f : fs) scaled.push_back(f * Rational(scale(rng)));
    CHECK(rank_of_span(scaled) == r);

    // appending a member of the span never raises the rank
    std::vector<Poly> extended = fs;
    extended.push_back(fs[0] + fs[1] * Rational(2));
    CHECK(rank_of_span(extended) == r);
  }
}
