#pragma once

#include <Eigen/Core>
#include <string>

namespace nk6 {

// C -> A^t C B with A, B in SO_0(1,2), eta = diag(-1, 1, 1).
enum class NormalCase { Timelike, Spacelike, Null };

const char* to_string(NormalCase c);

struct NormalFormResiduals {
  double lorentz_a = 0;  // |A^t eta A - eta|_F
  double lorentz_b = 0;
  double det_a = 0;  // |det A - 1|
  double det_b = 0;
  bool orthochronous = false;  // A11 > 0 and B11 > 0
  double shape = 0;            // max |entry| over the required zeros of C_normal
  double diagonal_product = 0;  // alpha beta gamma

  double lorentz() const;
};

struct NormalFormResult {
  Eigen::Matrix3d A;
  Eigen::Matrix3d B;
  Eigen::Matrix3d C_normal;  // A^t C B
  NormalCase case_tag = NormalCase::Timelike;
  // Timelike and null: upper triangular. Spacelike: rows (0 b z), (a x y), (0 0 g).
  bool swapped_shape = false;
  NormalFormResiduals residuals;
};

// Boost in the (e1, e2) plane.
Eigen::Matrix3d boost(double q);

// Three cases by the causal type of the first column of C.
// Throws NearSingular when |det C| <= det_tol, NullCaseDegenerate when no boost pair is found.
NormalFormResult cnormal_reduce(const Eigen::Matrix3d& C, double det_tol = 1e-12);

NormalFormResiduals normal_form_residuals(const Eigen::Matrix3d& A, const Eigen::Matrix3d& B,
                                          const Eigen::Matrix3d& C_normal, bool swapped_shape);

}  // namespace nk6
