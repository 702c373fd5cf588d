#include "gtz/kernel.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "gtz/errors.hpp"
#include "gtz/linalg.hpp"

namespace gtz {

namespace {

struct Layout {
  std::vector<std::pair<VarId, VarId>> pairs;  // (z[-k,-1], z[-k,1]), k = n..2
  VarId single;                                // z[0,1] (B) or z[-1,1] (GL)
};

Layout layout_for(const IndicatorSystem& sys) {
  Layout layout;
  for (int k = sys.n; k >= 2; --k) {
    layout.pairs.emplace_back(VarId::z(-k, -1), VarId::z(-k, 1));
  }
  layout.single = sys.algebra == Algebra::B ? VarId::z(0, 1) : VarId::z(-1, 1);
  return layout;
}

std::vector<Monomial> enumerate_monomials(const Layout& layout, int pair_bound,
                                          int single_bound) {
  std::vector<Monomial> out;
  std::vector<std::pair<VarId, int>> current;
  // Depth-first over pairs, then the single variable.
  std::function<void(std::size_t)> recurse = [&](std::size_t level) {
    if (level == layout.pairs.size()) {
      for (int c = 0; c <= single_bound; ++c) {
        auto factors = current;
        if (c > 0) factors.emplace_back(layout.single, c);
        out.emplace_back(std::move(factors));
      }
      return;
    }
    const auto& [va, vb] = layout.pairs[level];
    for (int a = 0; a <= pair_bound; ++a) {
      for (int b = 0; a + b <= pair_bound; ++b) {
        const std::size_t mark = current.size();
        if (a > 0) current.emplace_back(va, a);
        if (b > 0) current.emplace_back(vb, b);
        recurse(level + 1);
        current.resize(mark);
      }
    }
  };
  recurse(0);
  return out;
}

WeightVec2 weight_of(const Monomial& m, const std::vector<EulerOp>& eulers) {
  WeightVec2 w;
  w.reserve(eulers.size());
  for (const EulerOp& op : eulers) w.push_back(euler_eigenvalue2(op, m));
  return w;
}

}  // namespace

int default_pair_bound(const IndicatorSystem& sys) {
  const std::vector<int> r = exponents_r(sys.weight);
  int bound = 0;
  for (int v : r) bound += v;
  return bound;
}

namespace detail {

KernelResult solve_at_pair_bound(const IndicatorSystem& sys, int pair_bound) {
  assert(pair_bound >= 0);
  const Layout layout = layout_for(sys);
  const std::vector<int> r = exponents_r(sys.weight);
  const int single_bound = r.back();
  const std::vector<EulerOp> eulers = euler_family(sys.weight);

  // Group the bounded monomial space into joint-eigenvalue blocks; every
  // equation maps a block into a single block, so the kernel splits.
  std::map<WeightVec2, std::vector<Monomial>, std::greater<WeightVec2>> blocks;
  for (Monomial& m : enumerate_monomials(layout, pair_bound, single_bound)) {
    blocks[weight_of(m, eulers)].push_back(std::move(m));
  }

  KernelResult result;
  result.pair_bound_used = pair_bound;
  result.single_bound_used = single_bound;

  for (auto& [weight, monomials] : blocks) {
    std::sort(monomials.begin(), monomials.end(),
              [](const Monomial& a, const Monomial& b) { return lex_less(b, a); });

    // One stacked constraint matrix per block: a row per image monomial of
    // each equation, a column per block monomial.
    detail::QMatrix matrix;
    std::vector<Poly> images(monomials.size());
    for (const auto& equation : sys.equations) {
      std::set<Monomial, MonomialLexLess> image_monomials;
      for (std::size_t i = 0; i < monomials.size(); ++i) {
        images[i] = apply_power(equation.op, equation.power,
                                Poly::term(monomials[i], Rational(1)));
        for (const auto& [m, c] : images[i].terms()) image_monomials.insert(m);
      }
      for (auto it = image_monomials.rbegin(); it != image_monomials.rend(); ++it) {
        detail::QRow row;
        row.reserve(monomials.size());
        for (std::size_t i = 0; i < monomials.size(); ++i) {
          row.push_back(images[i].coefficient(*it));
        }
        matrix.push_back(std::move(row));
      }
    }

    detail::QMatrix null_vectors;
    if (matrix.empty()) {
      // No constraints touch this block: every monomial is a kernel element.
      null_vectors.assign(monomials.size(), detail::QRow(monomials.size(), Rational(0)));
      for (std::size_t i = 0; i < monomials.size(); ++i) null_vectors[i][i] = 1;
    } else {
      null_vectors = detail::nullspace_basis(std::move(matrix), monomials.size());
    }
    if (null_vectors.empty()) continue;

    for (const auto& vec : null_vectors) {
      Poly f;
      for (std::size_t i = 0; i < monomials.size(); ++i) {
        if (vec[i] != 0) f += Poly::term(monomials[i], vec[i]);
      }
      // Exactness guard: a returned basis element must be annihilated
      // bit-exactly by every equation.
      for (const auto& equation : sys.equations) {
        if (!apply_power(equation.op, equation.power, f).is_zero()) {
          throw std::logic_error("kernel exactness violated for " + equation.op.name);
        }
      }
      result.basis.push_back(std::move(f));
      result.basis_weights2.push_back(weight);
    }
    result.grading[weight] = static_cast<int>(null_vectors.size());
  }
  result.dimension = static_cast<int>(result.basis.size());
  return result;
}

}  // namespace detail

KernelResult solve_kernel(const IndicatorSystem& sys, std::optional<int> pair_bound,
                          bool require_stabilized) {
  const int base = std::max(pair_bound.value_or(0), default_pair_bound(sys));
  KernelResult result = detail::solve_at_pair_bound(sys, base);
  // Probe with an enlarged bound; the floor keeps the probe meaningful for
  // tiny bounds.
  const int probe = std::max(2 * base, base + 2);
  const KernelResult enlarged = detail::solve_at_pair_bound(sys, probe);
  result.stabilized = enlarged.dimension == result.dimension;
  if (!result.stabilized && require_stabilized) {
    throw NotStabilized("kernel dimension for weight " + sys.weight.str() + " moved from " +
                        std::to_string(result.dimension) + " to " +
                        std::to_string(enlarged.dimension) + " when the pair bound rose from " +
                        std::to_string(base) + " to " + std::to_string(probe));
  }
  return result;
}

std::vector<WeightVec2> weight_multiset(const KernelResult& result,
                                        const std::vector<EulerOp>& eulers) {
  std::vector<WeightVec2> out;
  out.reserve(result.basis.size());
  for (const Poly& f : result.basis) {
    WeightVec2 w;
    w.reserve(eulers.size());
    for (const EulerOp& op : eulers) w.push_back(euler_eigenvalue2(op, f));
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gtz
