#include <doctest.h>

#include <algorithm>
#include <vector>

#include "gtz/kernel.hpp"
#include "gtz/linalg.hpp"
#include "gtz/ops.hpp"
#include "gtz/report.hpp"
#include "gtz/systems.hpp"

using namespace gtz;

namespace {

const VarId kT = VarId::z(0, 1);

bool in_span(const std::vector<Poly>& span, const Poly& f) {
  std::vector<Poly> extended = span;
  extended.push_back(f);
  return rank_of_span(extended) == rank_of_span(span);
}

void check_exactness(const IndicatorSystem& sys, const KernelResult& result) {
  for (const Poly& f : result.basis)
    for (const auto& eq : sys.equations) CHECK(apply_power(eq.op, eq.power, f).is_zero());
}

int z01_parity(const Poly& f) {
  REQUIRE(!f.is_zero());
  int parity = f.terms().begin()->first.exponent(kT) % 2;
  for (const auto& [mono, coeff] : f.terms()) CHECK(mono.exponent(kT) % 2 == parity);
  return parity;
}

}  // namespace

TEST_CASE("anchor kernel: B weight (1,0)") {
  auto w = HighestWeight::b({2, 0});
  auto sys = build_indicator_b(w, +1);
  auto result = solve_kernel(sys);
  CHECK(result.dimension == 3);
  CHECK(result.stabilized);
  CHECK(result.pair_bound_used == 1);
  CHECK(result.single_bound_used == 0);

  Poly one = Poly::constant(1);
  Poly a = Poly::variable(VarId::z(-2, -1));
  Poly b = Poly::variable(VarId::z(-2, 1));
  CHECK(in_span(result.basis, one));
  CHECK(in_span(result.basis, a));
  CHECK(in_span(result.basis, b));
  CHECK(rank_of_span(result.basis) == 3);

  auto multiset = weight_multiset(result, euler_family(w));
  std::vector<WeightVec2> expect{{0, -2}, {0, 2}, {2, 0}};
  CHECK(multiset == expect);
  check_exactness(sys, result);
}

TEST_CASE("anchor kernel: B weight (1,1), both signs") {
  auto w = HighestWeight::b({2, 2});
  Poly t = Poly::variable(kT);
  Poly a = Poly::variable(VarId::z(-2, -1));
  Poly b = Poly::variable(VarId::z(-2, 1));
  for (int sign : {+1, -1}) {
    CAPTURE(sign);
    auto sys = build_indicator_b(w, sign);
    auto result = solve_kernel(sys);
    CHECK(result.dimension == 4);
    CHECK(result.stabilized);

    CHECK(in_span(result.basis, Poly::constant(1)));
    CHECK(in_span(result.basis, t));
    CHECK(in_span(result.basis, t.pow(2)));
    // The only element with a z-pair factor: z[-2,1] - sign * (1/2) t^2 z[-2,-1].
    Poly mixed = b - Poly::constant(Rational(sign, 2)) * t.pow(2) * a;
    CHECK(in_span(result.basis, mixed));
    Poly wrong = b + Poly::constant(Rational(sign, 2)) * t.pow(2) * a;
    CHECK(!in_span(result.basis, wrong));

    auto multiset = weight_multiset(result, euler_family(w));
    std::vector<WeightVec2> expect{{0, 0}, {2, -2}, {2, 0}, {2, 2}};
    CHECK(multiset == expect);
    check_exactness(sys, result);
  }
}

TEST_CASE("anchor kernel: zero weight is the constants") {
  auto sys = build_indicator_b(HighestWeight::b({0, 0}), +1);
  auto result = solve_kernel(sys);
  CHECK(result.dimension == 1);
  CHECK(result.basis.size() == 1);
  CHECK(result.basis[0] == Poly::constant(1));
  auto multiset = weight_multiset(result, euler_family(HighestWeight::b({0, 0})));
  CHECK(multiset == std::vector<WeightVec2>{{0, 0}});
}

TEST_CASE("anchor kernel: B weight (2,1) with parity split") {
  auto sys = build_indicator_b(HighestWeight::b({4, 2}), +1);
  auto result = solve_kernel(sys);
  CHECK(result.dimension == 11);
  int even = 0, odd = 0;
  for (const Poly& f : result.basis) (z01_parity(f) == 0 ? even : odd) += 1;
  CHECK(even == 8);
  CHECK(odd == 3);
  check_exactness(sys, result);
}

TEST_CASE("anchor kernel: half-integer weight (1/2,1/2)") {
  auto w = HighestWeight::b({1, 1});
  auto sys = build_indicator_b(w, +1);
  auto result = solve_kernel(sys);
  CHECK(result.dimension == 2);
  CHECK(in_span(result.basis, Poly::constant(1)));
  CHECK(in_span(result.basis, Poly::variable(kT)));
  auto multiset = weight_multiset(result, euler_family(w));
  CHECK(multiset == std::vector<WeightVec2>{{1, -1}, {1, 1}});
}

TEST_CASE("anchor kernel: rank three B weight (1,0,0)") {
  auto sys = build_indicator_b(HighestWeight::b({2, 0, 0}), +1);
  auto result = solve_kernel(sys);
  CHECK(result.dimension == 3);
  CHECK(in_span(result.basis, Poly::constant(1)));
  CHECK(in_span(result.basis, Poly::variable(VarId::z(-3, -1))));
  CHECK(in_span(result.basis, Poly::variable(VarId::z(-3, 1))));
  check_exactness(sys, result);
}

TEST_CASE("anchor kernel: GL weight (1,1)") {
  auto sys = build_indicator_gl(HighestWeight::gl({2, 2}));
  auto result = solve_kernel(sys);
  CHECK(result.dimension == 3);
  Poly elt = Poly::variable(VarId::z(-2, 1)) -
             Poly::variable(VarId::z(-1, 1)) * Poly::variable(VarId::z(-2, -1));
  CHECK(in_span(result.basis, elt));
  check_exactness(sys, result);
}

TEST_CASE("grading blocks sum to the dimension and match basis weights") {
  for (auto entries2 : std::vector<std::vector<int>>{{2, 2}, {4, 2}, {3, 1}, {2, 2, 0}}) {
    auto w = HighestWeight::b(entries2);
    CAPTURE(w.str());
    auto sys = build_indicator_b(w, +1);
    auto result = solve_kernel(sys);
    int total = 0;
    for (const auto& [weight2, dim] : result.grading) {
      CHECK(dim > 0);
      total += dim;
    }
    CHECK(total == result.dimension);
    REQUIRE(result.basis_weights2.size() == result.basis.size());
    auto eulers = euler_family(w);
    for (std::size_t i = 0; i < result.basis.size(); ++i) {
      REQUIRE(result.basis_weights2[i].size() == eulers.size());
      for (std::size_t j = 0; j < eulers.size(); ++j)
        CHECK(euler_eigenvalue2(eulers[j], result.basis[i]) == result.basis_weights2[i][j]);
    }
  }
}

TEST_CASE("white-box: an undersized pair bound misses kernel elements") {
  auto sys = build_indicator_b(HighestWeight::b({2, 2}), +1);
  auto truncated = detail::solve_at_pair_bound(sys, 0);
  CHECK(truncated.dimension == 3);  // 1, t, t^2 but not the z-pair element
  auto full = detail::solve_at_pair_bound(sys, 2);
  CHECK(full.dimension == 4);
}

TEST_CASE("pair bound overrides below the default are raised to it") {
  auto sys = build_indicator_b(HighestWeight::b({2, 2}), +1);
  auto result = solve_kernel(sys, 0);
  CHECK(result.pair_bound_used == default_pair_bound(sys));
  CHECK(result.pair_bound_used == 2);
  CHECK(result.dimension == 4);
  CHECK(result.stabilized);

  auto enlarged = solve_kernel(sys, 7);
  CHECK(enlarged.pair_bound_used == 7);
  CHECK(enlarged.dimension == 4);
}

TEST_CASE("default pair bounds") {
  CHECK(default_pair_bound(build_indicator_b(HighestWeight::b({2, 2}), +1)) == 2);
  CHECK(default_pair_bound(build_indicator_b(HighestWeight::b({4, 2}), +1)) == 3);
  CHECK(default_pair_bound(build_indicator_gl(HighestWeight::gl({2, 2}))) == 1);
  CHECK(default_pair_bound(build_indicator_b(HighestWeight::b({4, 2, 2}), +1)) == 3);
}

TEST_CASE("kernel dimension is sign independent across a sweep") {
  for (const auto& w : sweep_weights_b(2, 4)) {
    CAPTURE(w.str());
    auto plus = solve_kernel(build_indicator_b(w, +1));
    auto minus = solve_kernel(build_indicator_b(w, -1));
    CHECK(plus.dimension == minus.dimension);
    CHECK(plus.stabilized);
    CHECK(minus.stabilized);
    auto eulers = euler_family(w);
    CHECK(weight_multiset(plus, eulers) == weight_multiset(minus, eulers));
  }
}
