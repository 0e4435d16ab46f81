#include "nk6/su_structure.hpp"

namespace nk6 {

MatrixS form_matrix(const FormS& omega) {
  const int n = omega.dim();
  MatrixS w = zeros<Scalar>(n, n);
  for (const auto& [m, c] : omega.terms()) {
    auto idx = mask_indices(m);
    w(idx[0], idx[1]) = c;
    w(idx[1], idx[0]) = -c;
  }
  return w;
}

FormS matrix_form(const MatrixS& w) {
  const int n = static_cast<int>(w.rows());
  FormS f(n, 2);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) f.add((Mask(1) << a) | (Mask(1) << b), w(a, b));
  }
  return f;
}

std::optional<Scalar> form_ratio(const FormS& a, const FormS& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Scalar(0);
  const auto& [m0, c0] = b.terms().front();
  Scalar ratio = a.coefficient(m0) / c0;
  if (a == b * ratio) return ratio;
  return std::nullopt;
}

SUStructure build_su_structure(const FormS& omega, const FormS& rho, int orientation) {
  if (omega.dim() != 6 || omega.degree() != 2 || rho.dim() != 6 || rho.degree() != 3) {
    throw Error(ErrorCode::DimensionMismatch, "expected a 2-form and a 3-form in dimension 6");
  }
  const FormS omega2 = wedge(omega, omega);
  const Scalar cube = wedge(omega2, omega).top();
  if (cube.is_zero()) throw Error(ErrorCode::NotStable2Form, "omega^3 = 0");
  if (lambda_invariant(rho).is_zero()) throw Error(ErrorCode::NotStable3Form, "lambda(rho) = 0");
  if (!wedge(omega, rho).is_zero()) throw Error(ErrorCode::NotCompatible, "omega ^ rho != 0");

  SUStructure s;
  s.orientation = orientation == 0 ? cube.sign() : orientation;
  StableInfo info = build_stable_info(rho, s.orientation);
  s.omega = omega;
  s.psi_plus = rho;
  s.psi_minus = info.psi_minus;
  s.J = info.J;
  s.epsilon = info.epsilon;
  s.g = form_matrix(omega) * s.J * Scalar(s.epsilon);
  if (!is_symmetric(s.g)) throw Error(ErrorCode::NotCompatible, "omega(., J.) is not symmetric");
  s.signature = signature(s.g);
  if (s.signature.zero != 0) throw Error(ErrorCode::NotCompatible, "induced metric is degenerate");
  s.psi_norm_sq = wedge(s.psi_minus, s.psi_plus).top() / (cube / Scalar(6));
  if (s.psi_norm_sq.is_zero()) throw Error(ErrorCode::ZeroLength, "|psi+|^2 = 0");
  return s;
}

SUStructure build_su_structure(const LieAlgebra& g, const FormS& omega, const FormS& rho, int orientation) {
  if (g.dim() != omega.dim()) throw Error(ErrorCode::DimensionMismatch, "forms do not live on this algebra");
  return build_su_structure(omega, rho, orientation);
}

TorsionFlags torsion_flags(const LieAlgebra& g, const SUStructure& s) {
  TorsionFlags f;
  const FormS omega2 = wedge(s.omega, s.omega);
  const FormS domega = ce_differential(g, s.omega);
  const FormS dplus = ce_differential(g, s.psi_plus);
  const FormS dminus = ce_differential(g, s.psi_minus);
  f.domega_zero = domega.is_zero();
  f.half_flat = dplus.is_zero() && ce_differential(g, omega2).is_zero();
  f.nu = form_ratio(dminus, omega2);
  f.nearly_half_flat = f.nu.has_value();
  if (f.nu && !f.nu->is_zero() && domega == s.psi_plus * Scalar(3)) {
    f.nk_exterior = true;
    f.kappa = *f.nu / Scalar(2);
  }
  f.domega_type_30_03 = is_type_30_03(domega, s.J, s.epsilon);
  return f;
}

SUStructure homothety(const SUStructure& s, const Scalar& c) {
  if (c.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "homothety factor must be positive");
  Scalar root;
  try {
    root = exact_sqrt(c);
  } catch (const Error&) {
    throw Error(ErrorCode::SqrtNotRepresentable, "sqrt of homothety factor " + to_string(c));
  }
  SUStructure r = s;
  r.g = s.g * c;
  r.omega = s.omega * c;
  r.psi_plus = s.psi_plus * (c * root);
  r.psi_minus = s.psi_minus * (c * root);
  return r;
}

}  // namespace nk6
