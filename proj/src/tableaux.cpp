#include "gtz/tableaux.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "gtz/errors.hpp"

namespace gtz {

namespace {

// Enumerates all rows interlacing the given one (upper[i] >= row[i] >=
// upper[i+1]) whose doubled entries have the given parity, ascending
// lexicographically.
void enumerate_between(const std::vector<int>& upper, int parity,
                       const std::function<void(const std::vector<int>&)>& emit) {
  const std::size_t len = upper.size() - 1;
  std::vector<int> row(len);
  std::function<void(std::size_t)> recurse = [&](std::size_t i) {
    if (i == len) {
      emit(row);
      return;
    }
    int lo = upper[i + 1];
    const int hi = upper[i];
    // Align to requested parity.
    if (((lo % 2) + 2) % 2 != parity) ++lo;
    for (int v = lo; v <= hi; v += 2) {
      row[i] = v;
      recurse(i + 1);
    }
  };
  if (len == 0) {
    emit(row);
    return;
  }
  recurse(0);
}

}  // namespace

std::vector<GlTableau> enumerate_gl_tableaux(const std::vector<int>& top2) {
  assert(top2.size() >= 2);
  for (std::size_t i = 0; i + 1 < top2.size(); ++i) assert(top2[i] >= top2[i + 1]);
  for (int e : top2) {
    assert(e % 2 == 0);
    (void)e;
  }
  std::vector<GlTableau> out;
  enumerate_between(top2, 0, [&](const std::vector<int>& middle) {
    enumerate_between(middle, 0, [&](const std::vector<int>& bottom) {
      out.push_back(GlTableau{top2, middle, bottom});
    });
  });
  return out;
}

std::vector<BTableau> enumerate_b_tableaux(const HighestWeight& w) {
  w.validate();
  if (w.algebra != Algebra::B) throw InvalidWeight("expected a B weight: " + w.str());
  const int parity = ((w.entries2[0] % 2) + 2) % 2;
  // The middle row interlaces the weight row extended by 0 below, the bottom
  // row interlaces the middle row.
  std::vector<int> top_ext = w.entries2;
  top_ext.push_back(0);
  std::vector<BTableau> out;
  enumerate_between(top_ext, parity, [&](const std::vector<int>& middle) {
    enumerate_between(middle, parity, [&](const std::vector<int>& bottom) {
      const bool force_sigma0 = parity == 0 && middle.back() == 0;
      for (int sigma = 0; sigma <= (force_sigma0 ? 0 : 1); ++sigma) {
        out.push_back(BTableau{w.entries2, middle, bottom, sigma});
      }
    });
  });
  return out;
}

long long weyl_dim_b(const std::vector<int>& weight2) {
  const int k = static_cast<int>(weight2.size());
  if (k == 0) return 1;
  // Doubled rho for o(2k+1): 2*rho_i = 2(k-i)+1 with i = 1..k.
  std::vector<int> l2(weight2.size());
  std::vector<int> rho2(weight2.size());
  for (int i = 0; i < k; ++i) {
    rho2[static_cast<std::size_t>(i)] = 2 * (k - 1 - i) + 1;
    l2[static_cast<std::size_t>(i)] = weight2[static_cast<std::size_t>(i)] +
                                      rho2[static_cast<std::size_t>(i)];
  }
  Rational dim(1);
  for (int i = 0; i < k; ++i) {
    dim *= Rational(l2[static_cast<std::size_t>(i)], rho2[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < k; ++j) {
      const long long ln = static_cast<long long>(l2[static_cast<std::size_t>(i)]) *
                               l2[static_cast<std::size_t>(i)] -
                           static_cast<long long>(l2[static_cast<std::size_t>(j)]) *
                               l2[static_cast<std::size_t>(j)];
      const long long ld = static_cast<long long>(rho2[static_cast<std::size_t>(i)]) *
                               rho2[static_cast<std::size_t>(i)] -
                           static_cast<long long>(rho2[static_cast<std::size_t>(j)]) *
                               rho2[static_cast<std::size_t>(j)];
      dim *= Rational(ln, ld);
    }
  }
  if (rational_den(dim) != 1) {
    throw NonIntegerDimension("odd-orthogonal dimension is not an integer for weight " +
                              format_weight_entries2(weight2));
  }
  return static_cast<long long>(rational_num(dim));
}

long long weyl_dim_gl(const std::vector<int>& weight2) {
  const int N = static_cast<int>(weight2.size());
  Rational dim(1);
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) {
      dim *= Rational(weight2[static_cast<std::size_t>(i)] -
                          weight2[static_cast<std::size_t>(j)] + 2 * (j - i),
                      2 * (j - i));
    }
  }
  if (rational_den(dim) != 1) {
    throw NonIntegerDimension("general-linear dimension is not an integer for weight " +
                              format_weight_entries2(weight2));
  }
  return static_cast<long long>(rational_num(dim));
}

std::vector<int> b_tableau_weight2(const BTableau& t, WessVariant variant) {
  std::vector<int> w2 = t.bottom2;
  int top_sum = 0, middle_sum = 0, bottom_sum = 0;
  for (int e : t.top2) top_sum += e;
  for (int e : t.middle2) middle_sum += e;
  for (int e : t.bottom2) bottom_sum += e;
  int last = 2 * middle_sum - top_sum;  // doubled
  switch (variant) {
    case WessVariant::Printed:
      last += 2 * t.sigma + bottom_sum;
      break;
    case WessVariant::ProofDiff:
      last += 2 * t.sigma - bottom_sum;
      break;
    case WessVariant::SigmaNeg:
      last += -2 * t.sigma - bottom_sum;
      break;
  }
  w2.push_back(last);
  return w2;
}

BranchingReport branching_check(const HighestWeight& w,
                                const std::vector<std::vector<int>>& kernel_weights2) {
  const std::vector<BTableau> tableaux = enumerate_b_tableaux(w);
  BranchingReport report;

  report.weyl_expected = weyl_dim_b(w.entries2);
  for (const BTableau& t : tableaux) {
    report.weyl_total += weyl_dim_b(t.bottom2);
    report.bottom_multiset.push_back(t.bottom2);
  }
  std::sort(report.bottom_multiset.begin(), report.bottom_multiset.end());
  report.weyl_pass = report.weyl_total == report.weyl_expected;

  std::vector<std::vector<int>> kernel_sorted = kernel_weights2;
  std::sort(kernel_sorted.begin(), kernel_sorted.end());

  // Bottom rows against the kernel weights with the last component dropped.
  std::vector<std::vector<int>> kernel_lowrow;
  kernel_lowrow.reserve(kernel_sorted.size());
  for (const auto& kw : kernel_sorted) {
    kernel_lowrow.emplace_back(kw.begin(), kw.end() - 1);
  }
  std::sort(kernel_lowrow.begin(), kernel_lowrow.end());
  report.lowrow_pass = kernel_lowrow == report.bottom_multiset;

  for (WessVariant variant :
       {WessVariant::Printed, WessVariant::ProofDiff, WessVariant::SigmaNeg}) {
    std::vector<std::vector<int>> multiset;
    multiset.reserve(tableaux.size());
    for (const BTableau& t : tableaux) multiset.push_back(b_tableau_weight2(t, variant));
    std::sort(multiset.begin(), multiset.end());
    report.variant_pass[variant] = multiset == kernel_sorted;
    report.variant_multisets[variant] = std::move(multiset);
  }
  return report;
}

}  // namespace gtz
