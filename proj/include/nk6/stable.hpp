#pragma once

#include <cmath>

#include "nk6/form.hpp"

namespace nk6 {

// K_rho(v) = kappa((v _| rho) ^ rho), kappa the inverse of u -> u _| e^{1...6}.
// The result carries one factor of the reference volume.
template <class R>
Matrix<R> k_rho(const Form<R>& rho) {
  if (rho.dim() != 6 || rho.degree() != 3) throw Error(ErrorCode::DimensionMismatch, "k_rho needs a 3-form in dimension 6");
  Matrix<R> k(6, 6);
  for (int i = 0; i < 6; ++i) k.col(i) = vector_from_five_form(wedge(contract_basis(i, rho), rho));
  return k;
}

// lambda(rho) = tr(K_rho^2) / 6, relative to (e^{1...6})^2.
template <class R>
R lambda_invariant(const Form<R>& rho) {
  Matrix<R> k = k_rho(rho);
  R t(0);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (!is_zero(k(i, j)) && !is_zero(k(j, i))) t += k(i, j) * k(j, i);
    }
  }
  return t * from_rational<R>(Rational(1, 6));
}

template <class R>
struct BasicStableInfo {
  Form<R> rho;
  R lambda;
  int epsilon = 0;
  // Coefficient of the volume form phi(rho) against e^{1...6}; its sign is the orientation.
  R phi;
  Matrix<R> J;
  Form<R> psi_minus;  // J^* rho
  int orientation = 1;
};

using StableInfo = BasicStableInfo<Scalar>;
using StableInfoD = BasicStableInfo<double>;

// orientation = +1 declares e^{1...6} positive. Throws NotStable or SqrtNotRepresentable.
StableInfo build_stable_info(const FormS& rho, int orientation = 1);
// Mirrored double-precision path; |lambda| below tol counts as unstable.
StableInfoD build_stable_info_float(const FormD& rho, int orientation = 1, double tol = 1e-14);

// alpha(X, Y, Z) = eps * alpha(X, JY, JZ) on all basis triples.
template <class R>
bool is_type_30_03(const Form<R>& alpha, const Matrix<R>& j, int eps) {
  const int n = alpha.dim();
  std::vector<Vector<R>> plain(3), twisted(3);
  for (int a = 0; a < n; ++a) {
    plain[0] = twisted[0] = unit_vector<R>(n, a);
    for (int b = 0; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        plain[1] = unit_vector<R>(n, b);
        plain[2] = unit_vector<R>(n, c);
        twisted[1] = j.col(b);
        twisted[2] = j.col(c);
        R lhs = evaluate(alpha, plain);
        R rhs = evaluate(alpha, twisted);
        if (!is_zero(R(eps > 0 ? lhs - rhs : lhs + rhs))) return false;
      }
    }
  }
  return true;
}

// v _| rho = 0 only for v = 0: the contraction map V -> Lambda^2 has rank 6.
bool contraction_injective(const FormS& rho);

}  // namespace nk6
