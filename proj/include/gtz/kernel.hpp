#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "gtz/systems.hpp"

namespace gtz {

using WeightVec2 = std::vector<int>;  // doubled joint eigenvalues, index 0 <-> -n

// Exact polynomial kernel of an indicator system inside the bounded monomial
// space. Basis vectors are weight homogeneous and listed block by block,
// blocks ordered by descending weight; within a block the basis is the
// reduced echelon form over the descending monomial order, so everything is
// reproducible.
struct KernelResult {
  std::vector<Poly> basis;
  std::vector<WeightVec2> basis_weights2;  // parallel to basis
  int dimension{0};
  std::map<WeightVec2, int, std::greater<WeightVec2>> grading;  // weight -> subdimension
  int pair_bound_used{0};
  int single_bound_used{0};
  bool stabilized{false};
};

// Solves the system exactly. The monomial space is cut by two bounds: the
// degree of the last variable (z[0,1] resp. z[-1,1]) is at most r_{-1} -- an
// exact consequence of the last equation -- and each pair
// (z[-k,-1], z[-k,1]) has combined degree at most the pair bound, default
// sum(r_{-k}, k=2..n) + r_{-1}. A pair_bound override below the default is
// raised to it. The solve is then repeated with an enlarged pair bound; if
// the dimension changes, the result is marked unstabilized and, when
// require_stabilized is set (default), NotStabilized is thrown.
KernelResult solve_kernel(const IndicatorSystem& sys,
                          std::optional<int> pair_bound = std::nullopt,
                          bool require_stabilized = true);

// Default pair bound for a system.
int default_pair_bound(const IndicatorSystem& sys);

// Multiset (sorted vector) of doubled joint eigenvalues of the basis under
// the given diagonal operators.
std::vector<WeightVec2> weight_multiset(const KernelResult& result,
                                        const std::vector<EulerOp>& eulers);

namespace detail {
// Single bounded solve, no stabilization logic. Exposed for white-box tests
// of the stabilization mechanism; pair_bound may be anything >= 0.
KernelResult solve_at_pair_bound(const IndicatorSystem& sys, int pair_bound);
}  // namespace detail

}  // namespace gtz
