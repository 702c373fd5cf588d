#pragma once

#include <string>
#include <vector>

#include "gtz/poly.hpp"

namespace gtz {

// First-order differential operator sum_i coeff_i * d/d var_i with
// polynomial coefficients.
struct DerivationOp {
  struct Term {
    Poly coeff;
    VarId var;
  };
  std::vector<Term> terms;
  std::string name;
};

Poly apply(const DerivationOp& op, const Poly& f);
Poly apply_power(const DerivationOp& op, int power, const Poly& f);  // power >= 0

// Diagonal (Euler) operator sum_i sign_i * var_i * d/d var_i + shift, where
// the shift is a half-integer stored doubled. Monomials are eigenvectors.
struct EulerOp {
  struct Term {
    int sign;  // +1 or -1
    VarId var;
  };
  std::vector<Term> terms;
  int shift2{0};  // doubled half-integer
  std::string name;
};

Poly apply(const EulerOp& op, const Poly& f);

// Doubled eigenvalue of an eigenvector f. Throws NotEigenvector if f is zero
// or its monomials disagree.
int euler_eigenvalue2(const EulerOp& op, const Poly& f);

// Doubled eigenvalue of a single monomial (always defined).
int euler_eigenvalue2(const EulerOp& op, const Monomial& m);

}  // namespace gtz
