#pragma once

#include <string>
#include <vector>

#include "gtz/kernel.hpp"
#include "gtz/systems.hpp"

namespace gtz {

// Admissible exponent tuples of the claimed solution basis, enumerated
// verbatim from the stated inequalities.
//
// B problem: p_{-k}, q_{-k} >= 0, p_{-k} + q_{-k} <= r_{-k} for k = 2..n,
//            and p_{-1} + 2 * sum_k (p_{-k} + q_{-k}) <= r_{-1}.
// GL problem: same pair constraints, p_{-1} + sum_k (p_{-k} + q_{-k}) <= r_{-1}.
//
// Order: lexicographic in (p_{-1}, then the pairs with k descending).
std::vector<ExponentTuple> enumerate_exponents_b(const HighestWeight& w);
std::vector<ExponentTuple> enumerate_exponents_gl(const HighestWeight& w);

// Outcome of holding the claimed basis against the exact kernel.
struct BasisComparison {
  int claimed_count{0};
  int kernel_dim{0};
  bool contained{false};    // every expanded claimed monomial annihilated by the system
  bool independent{false};  // rank of the claimed set equals its count
  bool spanning{false};     // the kernel basis lies in the span of the claimed set
  enum class Status { Match, Discrepancy } status{Status::Discrepancy};
  std::string detail;
};

inline const char* status_name(BasisComparison::Status s) {
  return s == BasisComparison::Status::Match ? "MATCH" : "DISCREPANCY";
}

// Expands the admissible tuples for the system's weight in the given form
// and compares with a solved kernel of the same system. MATCH means
// contained, independent, and claimed count equal to the kernel dimension.
BasisComparison compare_basis_to_kernel(const IndicatorSystem& sys, const KernelResult& kernel,
                                        BasisForm form);

// Convenience overload: builds the system (sign_choice used for B only) and
// solves the kernel internally.
BasisComparison compare_basis_to_kernel(const HighestWeight& w, BasisForm form,
                                        int sign_choice = +1);

// Expansions of all admissible tuples, in enumeration order.
std::vector<Poly> expand_claimed_basis(const HighestWeight& w, BasisForm form);

}  // namespace gtz
