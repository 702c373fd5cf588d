#include "gtz/ops.hpp"

#include <cassert>

#include "gtz/errors.hpp"

namespace gtz {

Poly apply(const DerivationOp& op, const Poly& f) {
  Poly out;
  for (const auto& term : op.terms) {
    out += term.coeff * f.derivative(term.var);
  }
  return out;
}

Poly apply_power(const DerivationOp& op, int power, const Poly& f) {
  assert(power >= 0);
  Poly out = f;
  for (int i = 0; i < power; ++i) out = apply(op, out);
  return out;
}

Poly apply(const EulerOp& op, const Poly& f) {
  Poly out = f * Rational(op.shift2, 2);
  for (const auto& term : op.terms) {
    out += Rational(term.sign) * Poly::variable(term.var) * f.derivative(term.var);
  }
  return out;
}

int euler_eigenvalue2(const EulerOp& op, const Monomial& m) {
  int value = op.shift2;
  for (const auto& term : op.terms) {
    value += 2 * term.sign * m.exponent(term.var);
  }
  return value;
}

int euler_eigenvalue2(const EulerOp& op, const Poly& f) {
  if (f.is_zero()) {
    throw NotEigenvector(op.name + ": zero polynomial has no eigenvalue");
  }
  bool first = true;
  int value = 0;
  for (const auto& [m, c] : f.terms()) {
    const int e = euler_eigenvalue2(op, m);
    if (first) {
      value = e;
      first = false;
    } else if (e != value) {
      throw NotEigenvector(op.name + ": monomial eigenvalues disagree (" +
                           std::to_string(value) + "/2 vs " + std::to_string(e) + "/2)");
    }
  }
  return value;
}

}  // namespace gtz
