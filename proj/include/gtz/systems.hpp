#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtz/ops.hpp"
#include "gtz/poly.hpp"

namespace gtz {

// The two restriction problems: B is o(2n+1) restricted to o(2n-1), GL is
// gl(n+1) restricted to gl(n-1).
enum class Algebra { B, GL };

inline const char* algebra_name(Algebra a) { return a == Algebra::B ? "b" : "gl"; }

// Dominant highest weight (m_{-n}, ..., m_{-1}), entries stored doubled so
// half-integers stay exact. B weights must be uniformly integer or uniformly
// half-integer; GL weights must be integer. Entries weakly decrease and the
// last one is >= 0.
struct HighestWeight {
  Algebra algebra{Algebra::B};
  int n{2};
  std::vector<int> entries2;  // doubled, size n, index 0 <-> m_{-n}

  static HighestWeight b(std::vector<int> doubled_entries);
  static HighestWeight gl(std::vector<int> doubled_entries);

  bool half_integer() const { return !entries2.empty() && entries2[0] % 2 != 0; }
  void validate() const;  // throws InvalidWeight

  // "1,1" or "1/2,1/2"
  std::string str() const;

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
};

// Weight string parsing: entries separated by commas, each "k" or "k/2".
std::vector<int> parse_weight_entries2(const std::string& text);
std::string format_weight_entries2(const std::vector<int>& entries2);

// Indicator exponents (r_{-n}, ..., r_{-1}): consecutive differences for the
// leading entries; the last entry is 2*m_{-1} for B and m_{-1} for GL. All
// plain integers.
std::vector<int> exponents_r(const HighestWeight& w);

// The system of equations op_k^{power_k} f = 0 cutting out the highest
// vectors, over the problem's variable set.
struct IndicatorSystem {
  Algebra algebra{Algebra::B};
  int n{2};
  HighestWeight weight;
  int sign_choice{+1};  // B only: sign of the (1/2) z[0,1]^2 coefficient
  std::vector<VarId> variables;  // sorted by VarId order
  struct Equation {
    DerivationOp op;
    int power;  // r + 1
  };
  std::vector<Equation> equations;  // ordered k = n..2, then the last operator
};

// B-problem system. sign_choice (+1 or -1) picks the sign of the
// (1/2) z[0,1]^2 coefficient in the k = 2 operator; both conventions are in
// circulation, so both are built and compared.
IndicatorSystem build_indicator_b(const HighestWeight& w, int sign_choice);

// GL-problem system.
IndicatorSystem build_indicator_gl(const HighestWeight& w);

// Diagonal operator family whose joint eigenvalues grade the kernel: entries
// ordered to match the weight vector (index 0 <-> index -n, ..., last <->
// index -1).
std::vector<EulerOp> euler_family(const HighestWeight& w);

// The extra diagonal operator of the GL problem (row index +1).
EulerOp euler_gl_plus1(int n);

// Exponent tuple (p_{-1}; (p_{-k}, q_{-k}) for k = 2..n) indexing one
// claimed basis monomial. pairs[i] corresponds to k = i + 2.
struct ExponentTuple {
  int p_minus1{0};
  std::vector<std::pair<int, int>> pairs;

  friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;
  std::string str() const;
};

// Which product shape a claimed basis monomial uses: Paper takes
// (u+v)/(u-v)-type factors, Plain takes u/v factors directly.
enum class BasisForm { Paper, Plain };

inline const char* basis_form_name(BasisForm f) { return f == BasisForm::Paper ? "paper" : "plain"; }

// Z-variable images of the transformed variables.
Poly uv_variable_image(VarId uv);  // U/V kinds
Poly xy_variable_image(VarId xy);  // X/Y kinds

// Expansion of a claimed monomial into Z variables for the B problem
// (U/V transformed variables) and the GL problem (X/Y).
Poly expand_uv_monomial(const ExponentTuple& t, int n, BasisForm form);
Poly expand_xy_monomial(const ExponentTuple& t, int n, BasisForm form);

}  // namespace gtz
