#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nk6/form.hpp"

namespace nk6 {

// Finite-dimensional real Lie algebra given by structure constants
// [e_i, e_j] = sum_k c_ij^k e_k, equivalently de^k = -sum_{i<j} c_ij^k e^{ij}.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  // de[k] is the 2-form d e^{k+1}.
  static LieAlgebra from_differentials(std::string name, std::vector<FormS> de);
  static LieAlgebra abelian(int n, std::string name = "abelian");

  int dim() const { return n_; }
  const std::string& name() const { return name_; }

  const Scalar& structure_constant(int i, int j, int k) const { return c_[(i * n_ + j) * n_ + k]; }
  const std::vector<FormS>& differentials() const { return de_; }

  VectorS bracket(const VectorS& x, const VectorS& y) const;
  MatrixS ad(const VectorS& x) const;
  MatrixS ad_basis(int i) const;

  // d e^I, extended from the basis differentials by the Leibniz rule.
  FormS d_monomial(Mask m) const;
  FormD d_monomial_float(Mask m) const;
  // Table entries, or nullptr when the dimension is too large for the table.
  const FormS* d_monomial_cached(Mask m) const { return d_table_.empty() ? nullptr : &d_table_[m]; }
  const FormD* d_monomial_float_cached(Mask m) const {
    return d_table_float_.empty() ? nullptr : &d_table_float_[m];
  }

 private:
  FormS compute_d_monomial(Mask m) const;

  std::string name_;
  int n_ = 0;
  std::vector<FormS> de_;
  std::vector<Scalar> c_;
  // Tables over all masks, filled for small dimensions.
  std::vector<FormS> d_table_;
  std::vector<FormD> d_table_float_;
};

template <class R>
Form<R> ce_differential(const LieAlgebra& g, const Form<R>& a) {
  if (a.dim() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "form and Lie algebra dimensions differ");
  if (a.degree() == a.dim()) throw Error(ErrorCode::InvalidArgument, "differential of a top-degree form");
  Form<R> r(a.dim(), a.degree() + 1);
  for (const auto& [m, c] : a.terms()) {
    if constexpr (std::is_same_v<R, double>) {
      FormD local;
      const FormD* dm = g.d_monomial_float_cached(m);
      if (!dm) dm = &(local = g.d_monomial_float(m));
      for (const auto& [mask, dc] : dm->terms()) r.add(mask, c * dc);
    } else {
      FormS local;
      const FormS* dm = g.d_monomial_cached(m);
      if (!dm) dm = &(local = g.d_monomial(m));
      for (const auto& [mask, dc] : dm->terms()) r.add(mask, c * from_scalar<R>(dc));
    }
  }
  return r;
}

// d^2 = 0 on every basis 1-form.
bool jacobi_check(const LieAlgebra& g);

// K(x, y) = tr(ad x ad y) on the basis.
MatrixS killing_form(const LieAlgebra& g);

// Basis e_1..e_n of a followed by e_1..e_m of b.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, std::string name);

// Re-index a form on R^n into R^m, index i going to i + offset.
template <class R>
Form<R> embed_form(const Form<R>& f, int new_dim, int offset) {
  Form<R> r(new_dim, f.degree());
  for (const auto& [m, c] : f.terms()) r.add(m << offset, c);
  return r;
}

// Standard three-dimensional algebras.
LieAlgebra so3();                   // de^1 = e^23, de^2 = e^31, de^3 = e^12
LieAlgebra so12(int tau = 1);       // de^1 = -e^23, de^2 = e^31, de^3 = tau e^12

struct CatalogEntry {
  std::string name;
  LieAlgebra algebra;
  int field = kDefaultField;
  std::map<std::string, FormS> forms;
  std::map<std::string, MatrixS> endos;
  std::map<std::string, MatrixS> metrics;
};

std::vector<std::string> catalog_names();
// Throws UnknownName.
CatalogEntry catalog(std::string_view name);

struct ThreeSymmetricStructure {
  LieAlgebra algebra;  // g0 + g0
  MatrixS J;
  MatrixS g;
  FormS omega;
};

// Left-invariant almost Hermitian structure on G x G coming from the
// order-three symmetry of G x G x G / diag(G). The tangent space
// p = {(X, Y, Z) : X + Y + Z = 0} is identified with g0 + g0 through the
// coset map (a, b) -> [(a, b, e)], i.e. (U, V) = (2X + Y, X + 2Y); J and the
// restricted metric K + K + K are transported along this identification.
ThreeSymmetricStructure three_symmetric_structure(const LieAlgebra& g0);

}  // namespace nk6
