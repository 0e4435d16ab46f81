#include "nk6/lie_algebra.hpp"

#include "nk6/linalg.hpp"

namespace nk6 {

namespace {

constexpr int kTableDimension = 10;

}  // namespace

LieAlgebra LieAlgebra::from_differentials(std::string name, std::vector<FormS> de) {
  LieAlgebra g;
  g.name_ = std::move(name);
  g.n_ = static_cast<int>(de.size());
  const int n = g.n_;
  if (n > kMaxFormDim) throw Error(ErrorCode::DimensionMismatch, "Lie algebra dimension too large");
  for (const auto& f : de) {
    if (f.dim() != n || f.degree() != 2) {
      throw Error(ErrorCode::DimensionMismatch, "structure equations must be 2-forms on the algebra");
    }
  }
  g.de_ = std::move(de);
  g.c_.assign(static_cast<std::size_t>(n) * n * n, Scalar(0));
  for (int k = 0; k < n; ++k) {
    for (const auto& [m, c] : g.de_[k].terms()) {
      auto idx = mask_indices(m);
      g.c_[(idx[0] * n + idx[1]) * n + k] = -c;
      g.c_[(idx[1] * n + idx[0]) * n + k] = c;
    }
  }
  if (n <= kTableDimension) {
    g.d_table_.reserve(std::size_t(1) << n);
    g.d_table_float_.reserve(std::size_t(1) << n);
    for (Mask m = 0; m <= full_mask(n); ++m) {
      g.d_table_.push_back(g.compute_d_monomial(m));
      g.d_table_float_.push_back(g.d_table_.back().map([](const Scalar& s) { return s.to_double(); }));
      if (m == full_mask(n)) break;
    }
  }
  return g;
}

LieAlgebra LieAlgebra::abelian(int n, std::string name) {
  std::vector<FormS> de;
  for (int i = 0; i < n; ++i) de.emplace_back(n, 2);
  return from_differentials(std::move(name), std::move(de));
}

FormS LieAlgebra::compute_d_monomial(Mask m) const {
  const int k = std::popcount(m);
  if (k == n_) return FormS(n_, n_);
  FormS r(n_, k + 1);
  auto idx = mask_indices(m);
  for (int p = 0; p < k; ++p) {
    const Mask bit = Mask(1) << idx[p];
    const Mask pre = m & (bit - 1);
    const Mask post = m & ~(pre | bit);
    for (const auto& [dm, dc] : de_[idx[p]].terms()) {
      int s1 = wedge_sign(pre, dm);
      if (s1 == 0) continue;
      int s2 = wedge_sign(pre | dm, post);
      if (s2 == 0) continue;
      int s = s1 * s2 * ((p & 1) ? -1 : 1);
      r.add(pre | dm | post, s > 0 ? dc : -dc);
    }
  }
  return r;
}

FormS LieAlgebra::d_monomial(Mask m) const {
  if (!d_table_.empty()) return d_table_[m];
  return compute_d_monomial(m);
}

FormD LieAlgebra::d_monomial_float(Mask m) const {
  if (!d_table_float_.empty()) return d_table_float_[m];
  return compute_d_monomial(m).map([](const Scalar& s) { return s.to_double(); });
}

VectorS LieAlgebra::bracket(const VectorS& x, const VectorS& y) const {
  VectorS r = VectorS::Constant(n_, Scalar(0));
  for (int i = 0; i < n_; ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      if (y(j).is_zero() || i == j) continue;
      Scalar xy = x(i) * y(j);
      for (int k = 0; k < n_; ++k) {
        const Scalar& c = structure_constant(i, j, k);
        if (!c.is_zero()) r(k) += xy * c;
      }
    }
  }
  return r;
}

MatrixS LieAlgebra::ad_basis(int i) const {
  MatrixS m = zeros<Scalar>(n_, n_);
  for (int j = 0; j < n_; ++j) {
    for (int k = 0; k < n_; ++k) m(k, j) = structure_constant(i, j, k);
  }
  return m;
}

MatrixS LieAlgebra::ad(const VectorS& x) const {
  MatrixS m = zeros<Scalar>(n_, n_);
  for (int i = 0; i < n_; ++i) {
    if (!x(i).is_zero()) m += ad_basis(i) * x(i);
  }
  return m;
}

bool jacobi_check(const LieAlgebra& g) {
  for (const auto& f : g.differentials()) {
    if (!ce_differential(g, f).is_zero()) return false;
  }
  return true;
}

MatrixS killing_form(const LieAlgebra& g) {
  const int n = g.dim();
  std::vector<MatrixS> ads;
  for (int i = 0; i < n; ++i) ads.push_back(g.ad_basis(i));
  MatrixS k(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      k(i, j) = k(j, i) = (ads[i] * ads[j]).trace();
    }
  }
  return k;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, std::string name) {
  const int n = a.dim() + b.dim();
  std::vector<FormS> de;
  for (const auto& f : a.differentials()) de.push_back(embed_form(f, n, 0));
  for (const auto& f : b.differentials()) de.push_back(embed_form(f, n, a.dim()));
  return LieAlgebra::from_differentials(std::move(name), std::move(de));
}

LieAlgebra so3() {
  return LieAlgebra::from_differentials(
      "so3", {FormS::basis(3, {2, 3}), FormS::basis(3, {3, 1}), FormS::basis(3, {1, 2})});
}

LieAlgebra so12(int tau) {
  if (tau != 1 && tau != -1) throw Error(ErrorCode::InvalidArgument, "tau must be +1 or -1");
  return LieAlgebra::from_differentials(
      "so12", {FormS::basis(3, {2, 3}, Scalar(-1)), FormS::basis(3, {3, 1}), FormS::basis(3, {1, 2}, Scalar(tau))});
}

}  // namespace nk6
