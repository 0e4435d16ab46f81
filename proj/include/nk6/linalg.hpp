#pragma once

#include <optional>
#include <string>

#include "nk6/eigen_support.hpp"

namespace nk6 {

// (negative count, positive count), plus the dimension of the radical.
struct Signature {
  int negative = 0;
  int positive = 0;
  int zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& s);

Scalar determinant(const MatrixS& m);
int rank(const MatrixS& m);
// Throws InvalidArgument on a singular matrix.
MatrixS inverse(const MatrixS& m);
// Some x with a x = b, if the system is consistent.
std::optional<VectorS> solve(const MatrixS& a, const VectorS& b);

bool is_symmetric(const MatrixS& m);
// Sylvester count by exact congruence diagonalization.
Signature signature(const MatrixS& symmetric);

}  // namespace nk6
