#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gtz/claimed_basis.hpp"
#include "gtz/correspondence.hpp"
#include "gtz/kernel.hpp"
#include "gtz/tableaux.hpp"

namespace gtz {

// Verdict of one registry check. Identity checks use Pass/Fail; basis
// comparisons use Match/Discrepancy. Checks marked required drive the exit
// status; the others document known defects of the claimed formulas and
// never affect it.
enum class CheckStatus { Pass, Fail, Match, Discrepancy };

const char* check_status_name(CheckStatus s);

struct CheckResult {
  std::string id;
  CheckStatus status{CheckStatus::Fail};
  bool required{false};
  std::string detail;
};

// Fixed check registries. Every id appears exactly once per verified weight.
const std::vector<std::string>& check_registry_b();
const std::vector<std::string>& check_registry_gl();
bool check_is_required(const std::string& id);

struct VerifyOptions {
  std::optional<int> pair_bound;  // kernel pair-bound override
};

// Everything computed for one B weight.
struct WeightVerification {
  HighestWeight weight;
  std::vector<int> r;

  // Kernel of the B system; the '+' sign convention is canonical, the other
  // sign is solved alongside for comparison.
  int kernel_dim{0};
  int kernel_dim_minus{0};
  bool stabilized{false};  // all kernels solved for this weight stabilized
  int pair_bound{0};
  int single_bound{0};
  std::map<WeightVec2, int, std::greater<WeightVec2>> grading;
  std::vector<WeightVec2> kernel_multiset;
  int kernel_even_dim{0};  // z[0,1]-degree parity split of the kernel
  int kernel_odd_dim{0};

  long long b_tableau_count{0};
  BranchingReport branching;

  // GL side of the correspondence.
  HighestWeight target;
  std::optional<HighestWeight> lowered;
  int gl_kernel_dim{0};
  int sigma1_dim{0};  // dimension of the space feeding the sigma = 1 images

  int b_tuples{0};
  CorrespondenceChecks correspondence;

  // Keyed "b_paper_plus", "b_paper_minus", "b_plain_plus", "b_plain_minus",
  // "gl_paper", "gl_plain".
  std::map<std::string, BasisComparison> basis_checks;

  bool soot_image_pass{false};
  std::string soot_image_detail;
  bool soot_conj_pass{false};
  std::string soot_conj_detail;

  bool wess_any_pass{false};  // at least one weight-formula variant matches

  std::vector<CheckResult> checks;  // registry order
  bool all_required_pass{false};
};

// Reduced flow for a GL weight: kernel vs tableau count plus the claimed
// basis comparison.
struct GlVerification {
  HighestWeight weight;
  std::vector<int> r;
  int kernel_dim{0};
  bool stabilized{false};
  int pair_bound{0};
  int single_bound{0};
  std::map<WeightVec2, int, std::greater<WeightVec2>> grading;
  long long tableau_count{0};
  std::map<std::string, BasisComparison> basis_checks;  // "gl_paper", "gl_plain"
  std::vector<CheckResult> checks;
  bool all_required_pass{false};
};

WeightVerification verify_weight_b(const HighestWeight& w, const VerifyOptions& opts = {});
GlVerification verify_weight_gl(const HighestWeight& w, const VerifyOptions& opts = {});

// Record of the transformed-variable ladder under the lowering operators:
// for k >= 3 the image of u[-k]/v[-k] is the next transformed variable; at
// k = 2 the computed image is recorded as-is (it is not the next variable).
struct LadderRecord {
  std::string op;
  std::string sign;  // "+", "-" or "" for the sign-free operators
  std::string input;
  std::string image;
  std::string expected;
  bool matches{false};
};
std::vector<LadderRecord> ladder_records(int n);

struct Report {
  Algebra algebra{Algebra::B};
  VerifyOptions options;
  std::vector<WeightVerification> b_weights;
  std::vector<GlVerification> gl_weights;
  bool all_required_pass{false};
};

Report run_verify_b(const std::vector<HighestWeight>& weights, const VerifyOptions& opts = {});
Report run_verify_gl(const std::vector<HighestWeight>& weights, const VerifyOptions& opts = {});

// Dominant weights of rank n with doubled entries <= max_entry2; integer
// weights first, then (for B when include_half) half-integer ones, each
// group ascending lexicographically.
std::vector<HighestWeight> sweep_weights_b(int n, int max_entry2, bool include_half = true);
std::vector<HighestWeight> sweep_weights_gl(int n, int max_entry2);

// Emitters. Deterministic: reports carry no timestamps or machine state, so
// equal inputs give byte-equal output. check_filter restricts the emitted
// checks to one registry id ("" or "all" emits everything).
std::string report_json(const Report& report, const std::string& check_filter = "");
std::string report_csv(const Report& report, const std::string& check_filter = "");
std::string report_text(const Report& report, const std::string& check_filter = "");

}  // namespace gtz
