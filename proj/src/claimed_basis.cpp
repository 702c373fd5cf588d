#include "gtz/claimed_basis.hpp"

#include <algorithm>
#include <cassert>

#include "gtz/errors.hpp"

namespace gtz {

namespace {

// Shared enumeration; the B problem weights each pair twice in the p_{-1}
// budget, the GL problem once.
std::vector<ExponentTuple> enumerate_tuples(const HighestWeight& w, int pair_weight) {
  const std::vector<int> r = exponents_r(w);
  const int budget = r.back();

  std::vector<ExponentTuple> out;
  ExponentTuple current;
  current.pairs.assign(static_cast<std::size_t>(w.n - 1), {0, 0});
  // pairs[i] corresponds to k = i + 2; recurse from k = n down so the
  // natural order of discovery matches the documented lexicographic order
  // (p_{-1} outermost, then pairs with k descending).
  std::function<void(int, int)> recurse = [&](int k, int used) {
    if (k == 1) {
      for (int p1 = 0; p1 + pair_weight * used <= budget; ++p1) {
        current.p_minus1 = p1;
        out.push_back(current);
      }
      return;
    }
    const int rk = r[static_cast<std::size_t>(w.n - k)];
    for (int p = 0; p <= rk; ++p) {
      for (int q = 0; p + q <= rk; ++q) {
        current.pairs[static_cast<std::size_t>(k - 2)] = {p, q};
        recurse(k - 1, used + p + q);
      }
    }
    current.pairs[static_cast<std::size_t>(k - 2)] = {0, 0};
  };
  recurse(w.n, 0);

  std::sort(out.begin(), out.end(), [](const ExponentTuple& a, const ExponentTuple& b) {
    if (a.p_minus1 != b.p_minus1) return a.p_minus1 < b.p_minus1;
    for (std::size_t i = a.pairs.size(); i-- > 0;) {
      if (a.pairs[i] != b.pairs[i]) return a.pairs[i] < b.pairs[i];
    }
    return false;
  });
  return out;
}

}  // namespace

std::vector<ExponentTuple> enumerate_exponents_b(const HighestWeight& w) {
  w.validate();
  if (w.algebra != Algebra::B) throw InvalidWeight("expected a B weight: " + w.str());
  return enumerate_tuples(w, 2);
}

std::vector<ExponentTuple> enumerate_exponents_gl(const HighestWeight& w) {
  w.validate();
  if (w.algebra != Algebra::GL) throw InvalidWeight("expected a gl weight: " + w.str());
  return enumerate_tuples(w, 1);
}

std::vector<Poly> expand_claimed_basis(const HighestWeight& w, BasisForm form) {
  std::vector<Poly> out;
  if (w.algebra == Algebra::B) {
    for (const ExponentTuple& t : enumerate_exponents_b(w)) {
      out.push_back(expand_uv_monomial(t, w.n, form));
    }
  } else {
    for (const ExponentTuple& t : enumerate_exponents_gl(w)) {
      out.push_back(expand_xy_monomial(t, w.n, form));
    }
  }
  return out;
}

BasisComparison compare_basis_to_kernel(const IndicatorSystem& sys, const KernelResult& kernel,
                                        BasisForm form) {
  const std::vector<Poly> claimed = expand_claimed_basis(sys.weight, form);

  BasisComparison cmp;
  cmp.claimed_count = static_cast<int>(claimed.size());
  cmp.kernel_dim = kernel.dimension;

  cmp.contained = true;
  for (const Poly& f : claimed) {
    for (const auto& equation : sys.equations) {
      if (!apply_power(equation.op, equation.power, f).is_zero()) {
        cmp.contained = false;
        break;
      }
    }
    if (!cmp.contained) break;
  }

  const int claimed_rank = rank_of_span(claimed);
  cmp.independent = claimed_rank == cmp.claimed_count;

  std::vector<Poly> joint = claimed;
  joint.insert(joint.end(), kernel.basis.begin(), kernel.basis.end());
  cmp.spanning = rank_of_span(joint) == claimed_rank;

  cmp.status = (cmp.contained && cmp.independent && cmp.claimed_count == cmp.kernel_dim)
                   ? BasisComparison::Status::Match
                   : BasisComparison::Status::Discrepancy;
  cmp.detail = "claimed " + std::to_string(cmp.claimed_count) + " vs kernel " +
               std::to_string(cmp.kernel_dim) + "; contained=" +
               (cmp.contained ? "yes" : "no") + " independent=" +
               (cmp.independent ? "yes" : "no") + " spanning=" + (cmp.spanning ? "yes" : "no");
  return cmp;
}

BasisComparison compare_basis_to_kernel(const HighestWeight& w, BasisForm form,
                                        int sign_choice) {
  const IndicatorSystem sys =
      w.algebra == Algebra::B ? build_indicator_b(w, sign_choice) : build_indicator_gl(w);
  const KernelResult kernel = solve_kernel(sys);
  return compare_basis_to_kernel(sys, kernel, form);
}

}  // namespace gtz
