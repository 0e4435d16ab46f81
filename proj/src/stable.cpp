#include "nk6/stable.hpp"

#include "nk6/linalg.hpp"

namespace nk6 {

StableInfo build_stable_info(const FormS& rho, int orientation) {
  if (orientation != 1 && orientation != -1) throw Error(ErrorCode::InvalidArgument, "orientation must be +1 or -1");
  StableInfo info;
  info.rho = rho;
  info.orientation = orientation;
  MatrixS k = k_rho(rho);
  info.lambda = lambda_invariant(rho);
  if (info.lambda.is_zero()) throw Error(ErrorCode::NotStable, "lambda(rho) = 0");
  info.epsilon = info.lambda.sign();
  Scalar root;
  try {
    root = exact_sqrt(abs(info.lambda));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotRepresentable) throw;
    throw Error(ErrorCode::SqrtNotRepresentable, "sqrt|lambda| with lambda = " + to_string(info.lambda));
  }
  info.phi = orientation > 0 ? root : -root;
  info.J = k * info.phi.inverse();
  info.psi_minus = pullback(info.J, rho);
  return info;
}

StableInfoD build_stable_info_float(const FormD& rho, int orientation, double tol) {
  StableInfoD info;
  info.rho = rho;
  info.orientation = orientation;
  MatrixD k = k_rho(rho);
  info.lambda = (k * k).trace() / 6.0;
  if (std::abs(info.lambda) <= tol) throw Error(ErrorCode::NotStable, "lambda(rho) numerically zero");
  info.epsilon = info.lambda > 0 ? 1 : -1;
  info.phi = orientation * std::sqrt(std::abs(info.lambda));
  info.J = k / info.phi;
  info.psi_minus = pullback(info.J, rho);
  return info;
}

bool contraction_injective(const FormS& rho) {
  const int n = rho.dim();
  auto masks = masks_of_degree(n, rho.degree() - 1);
  MatrixS m = zeros<Scalar>(static_cast<int>(masks.size()), n);
  for (int i = 0; i < n; ++i) {
    FormS c = contract_basis(i, rho);
    for (std::size_t r = 0; r < masks.size(); ++r) m(static_cast<int>(r), i) = c.coefficient(masks[r]);
  }
  return rank(m) == n;
}

}  // namespace nk6
