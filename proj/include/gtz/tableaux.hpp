#pragma once

#include <map>
#include <string>
#include <vector>

#include "gtz/rational.hpp"
#include "gtz/systems.hpp"

namespace gtz {

// Branching tableau for gl(n+1) -> gl(n) -> gl(n-1): three interlacing rows
// of lengths n+1, n, n-1. Entries doubled (always even here).
struct GlTableau {
  std::vector<int> top2;
  std::vector<int> middle2;
  std::vector<int> bottom2;
  friend bool operator==(const GlTableau&, const GlTableau&) = default;
};

// Branching tableau for the odd-orthogonal problem: the weight row (length
// n), an interlacing middle row (length n, last entry >= 0), a bottom row
// (length n-1) interlacing the middle, and a flag sigma in {0,1}. All
// entries share the parity of the weight (doubled encoding). For integer
// weights with last middle entry 0 only sigma = 0 is admitted.
struct BTableau {
  std::vector<int> top2;
  std::vector<int> middle2;
  std::vector<int> bottom2;
  int sigma{0};
  friend bool operator==(const BTableau&, const BTableau&) = default;
};

// All tableaux with the given top row, ascending lexicographic in
// (middle, bottom[, sigma]).
std::vector<GlTableau> enumerate_gl_tableaux(const std::vector<int>& top2);
std::vector<BTableau> enumerate_b_tableaux(const HighestWeight& w);

// Weyl dimension formula. For B the rank is the number of entries (weight of
// o(2k+1)); rank 0 is the trivial algebra with dimension 1. For GL the
// entries are a gl(N) weight with N = entries. Throws NonIntegerDimension if
// the product fails to be an integer.
long long weyl_dim_b(const std::vector<int>& weight2);
long long weyl_dim_gl(const std::vector<int>& weight2);

// The three published variants of the tableau weight formula. They agree on
// components -n..-2 (the bottom row) and differ in the last component:
//   Printed:   sigma + 2*sum(middle) - sum(top) + sum(bottom)
//   ProofDiff: sigma + 2*sum(middle) - sum(top) - sum(bottom)
//   SigmaNeg: -sigma + 2*sum(middle) - sum(top) - sum(bottom)
enum class WessVariant { Printed, ProofDiff, SigmaNeg };

inline const char* wess_variant_name(WessVariant v) {
  switch (v) {
    case WessVariant::Printed: return "printed";
    case WessVariant::ProofDiff: return "proof_diff";
    case WessVariant::SigmaNeg: return "sigma_neg";
  }
  return "?";
}

// Doubled weight vector (components -n..-1) of a B tableau under a variant.
std::vector<int> b_tableau_weight2(const BTableau& t, WessVariant variant);

// Dimension bookkeeping for one weight: sum of bottom-row Weyl dimensions
// against the Weyl dimension of the weight itself, plus the multiset
// comparisons against a kernel weight multiset.
struct BranchingReport {
  long long weyl_total{0};     // sum over tableaux of dim(bottom row)
  long long weyl_expected{0};  // dim of the weight itself
  bool weyl_pass{false};
  bool lowrow_pass{false};  // bottom rows vs kernel weights restricted to -n..-2
  std::map<WessVariant, bool> variant_pass;
  std::map<WessVariant, std::vector<std::vector<int>>> variant_multisets;  // sorted
  std::vector<std::vector<int>> bottom_multiset;                           // sorted
};

BranchingReport branching_check(const HighestWeight& w,
                                const std::vector<std::vector<int>>& kernel_weights2);

}  // namespace gtz
