#pragma once

#include <optional>

#include "nk6/lie_algebra.hpp"
#include "nk6/linalg.hpp"
#include "nk6/stable.hpp"

namespace nk6 {

struct SUStructure {
  FormS omega;
  FormS psi_plus;
  FormS psi_minus;
  MatrixS J;
  MatrixS g;
  int epsilon = 0;
  Signature signature;
  Scalar psi_norm_sq;
  int orientation = 1;
};

// Orientation 0 picks the one in which omega^3 is positive.
// Throws NotStable2Form, NotStable3Form, NotCompatible, ZeroLength,
// SqrtNotRepresentable.
SUStructure build_su_structure(const FormS& omega, const FormS& rho, int orientation = 0);
SUStructure build_su_structure(const LieAlgebra& g, const FormS& omega, const FormS& rho, int orientation = 0);

// Matrix of a 2-form: W(i, j) = omega(e_i, e_j).
MatrixS form_matrix(const FormS& omega);
// The 2-form with omega(e_i, e_j) = W(i, j) for an antisymmetric W.
FormS matrix_form(const MatrixS& w);

// c with a = c * b, if any (b nonzero).
std::optional<Scalar> form_ratio(const FormS& a, const FormS& b);

struct TorsionFlags {
  bool half_flat = false;
  bool nearly_half_flat = false;
  std::optional<Scalar> nu;
  bool nk_exterior = false;
  std::optional<Scalar> kappa;
  bool domega_type_30_03 = false;
  bool domega_zero = false;
};

TorsionFlags torsion_flags(const LieAlgebra& g, const SUStructure& s);

// g -> c g with c > 0: omega -> c omega, psi -> c^{3/2} psi, J unchanged.
// Throws SqrtNotRepresentable when c^{3/2} leaves the field.
SUStructure homothety(const SUStructure& s, const Scalar& c);

}  // namespace nk6
