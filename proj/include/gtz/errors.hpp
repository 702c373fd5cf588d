#pragma once

#include <stdexcept>
#include <string>

namespace gtz {

// Error hierarchy shared by all modules.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A weight vector violates dominance, positivity, or parity rules.
struct InvalidWeight : Error {
  explicit InvalidWeight(const std::string& what) : Error(what) {}
};

// A polynomial fed to euler_eigenvalue is not a weight vector of the operator.
struct NotEigenvector : Error {
  explicit NotEigenvector(const std::string& what) : Error(what) {}
};

// Kernel dimension changed when the degree bound was enlarged; caller must
// raise the bound explicitly.
struct NotStabilized : Error {
  explicit NotStabilized(const std::string& what) : Error(what) {}
};

// Weyl dimension product did not come out an integer (bad weight data).
struct NonIntegerDimension : Error {
  explicit NonIntegerDimension(const std::string& what) : Error(what) {}
};

}  // namespace gtz
