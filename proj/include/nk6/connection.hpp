#pragma once

#include <optional>
#include <vector>

#include "nk6/lie_algebra.hpp"
#include "nk6/linalg.hpp"

namespace nk6 {

// Left-invariant connection: nabla_{e_i} acts on left-invariant fields by the
// matrix gamma[i], with gamma[i](k, j) = Gamma_ij^k.
struct ConnectionTable {
  std::vector<MatrixS> gamma;

  int dim() const { return static_cast<int>(gamma.size()); }
  const Scalar& christoffel(int i, int j, int k) const { return gamma[i](k, j); }
  // nabla_X as an endomorphism.
  MatrixS along(const VectorS& x) const;
  VectorS covariant(const VectorS& x, const VectorS& y) const { return along(x) * y; }
};

enum class TensorRole { Generic, A, NijenhuisMetric, TorsionMetric };

// Components T(e_i, e_j, e_k).
class CubicTensor {
 public:
  CubicTensor() = default;
  CubicTensor(int n, TensorRole role) : n_(n), role_(role), t_(static_cast<std::size_t>(n) * n * n, Scalar(0)) {}

  int dim() const { return n_; }
  TensorRole role() const { return role_; }
  Scalar& operator()(int i, int j, int k) { return t_[(i * n_ + j) * n_ + k]; }
  const Scalar& operator()(int i, int j, int k) const { return t_[(i * n_ + j) * n_ + k]; }
  Scalar evaluate(const VectorS& x, const VectorS& y, const VectorS& z) const;

  bool is_zero() const;
  bool totally_skew() const;
  // Components agree, role ignored.
  bool same_components(const CubicTensor& o) const { return n_ == o.n_ && t_ == o.t_; }
  CubicTensor scaled(const Scalar& c) const;
  // (L^* T)(X, Y, Z) = T(LX, LY, LZ).
  CubicTensor pulled_back(const MatrixS& l) const;

 private:
  int n_ = 0;
  TensorRole role_ = TensorRole::Generic;
  std::vector<Scalar> t_;
};

CubicTensor tensor_from_form(const FormS& f);

// Sum T_ijk T_lmn g^il g^jm g^kn.
Scalar full_contraction(const CubicTensor& t, const MatrixS& g);
// Norm of a cubic tensor read as a 3-form: full contraction / 3!.
Scalar tensor_norm_sq(const CubicTensor& t, const MatrixS& g);

// Koszul formula. Throws DegenerateMetric.
ConnectionTable levi_civita(const LieAlgebra& lie, const MatrixS& g);
bool is_metric(const ConnectionTable& c, const MatrixS& g);
bool is_torsion_free(const LieAlgebra& lie, const ConnectionTable& c);

// nabla_{e_i} J as endomorphisms.
std::vector<MatrixS> covariant_derivative_of(const ConnectionTable& c, const MatrixS& j);

// A(X, Y, Z) = g((nabla_X J) Y, Z). Throws SymmetryViolation if A is not skew in
// its last two slots or A(X, JY, JZ) != eps A(X, Y, Z).
CubicTensor nabla_J(const ConnectionTable& c, const MatrixS& g, const MatrixS& j, int eps);

struct NearlyKahlerCheck {
  bool holds = false;
  Scalar nabla_j_norm_sq;
  Scalar kappa;  // |nabla J|^2 / 4
};

// Polarized condition A(X, Y, Z) + A(Y, X, Z) = 0 on basis triples.
NearlyKahlerCheck nearly_kahler_direct(const CubicTensor& a, const MatrixS& g);

struct NijenhuisTensor {
  // values[i][j] = N(e_i, e_j)
  std::vector<std::vector<VectorS>> values;
  CubicTensor lowered;  // g(N(X, Y), Z)
  bool totally_skew = false;
};

// N(X, Y) = -eps [X, Y] - [JX, JY] + J[JX, Y] + J[X, JY].
NijenhuisTensor nijenhuis(const LieAlgebra& lie, const MatrixS& j, int eps, const MatrixS& g);
// Same tensor through a torsion-free connection:
// N(X, Y) = (nabla_JY J) X - (nabla_JX J) Y + J((nabla_X J) Y - (nabla_Y J) X).
NijenhuisTensor nijenhuis_from_connection(const ConnectionTable& c, const MatrixS& j, const MatrixS& g);

struct CanonicalConnection {
  ConnectionTable table;
  CubicTensor torsion;  // g(T(X, Y), Z)
  bool metric = false;
  bool j_parallel = false;
};

// nabla-bar = nabla + T/2 with g(T(X,Y),Z) = eps g(N(X,Y),Z) - d omega(JX, JY, JZ).
// Throws NotG1 unless N is totally skew.
CanonicalConnection canonical_connection(const LieAlgebra& lie, const ConnectionTable& lc, const MatrixS& g,
                                         const MatrixS& j, const FormS& omega, const NijenhuisTensor& n, int eps);

// nabla B = 0 for a left-invariant tensor with constant components.
bool is_parallel(const ConnectionTable& c, const CubicTensor& b);
bool is_parallel_endomorphism(const ConnectionTable& c, const MatrixS& e);

struct CurvatureData {
  // riemann[i * n + j] = R(e_i, e_j) as an endomorphism.
  std::vector<MatrixS> riemann;
  MatrixS ricci;
  std::optional<Scalar> einstein_constant;
  std::optional<Scalar> kappa;

  const MatrixS& R(int i, int j) const { return riemann[i * static_cast<int>(ricci.rows()) + j]; }
};

// R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y]; Ric(Y, Z) = tr(X -> R(X, Y) Z).
CurvatureData curvature_ricci(const LieAlgebra& lie, const ConnectionTable& c, const MatrixS& g);

// Number of basis triples violating
// 2 (nabla_X omega)(Y, Z) = d omega(X,Y,Z) + eps d omega(X,JY,JZ) + s eps g(N(Y,Z), JX).
// The identity holds for both eps with s = -1; s = +1 is the variant with the
// opposite sign on the Nijenhuis term, kept for reporting.
int master_identity_failures(const LieAlgebra& lie, const ConnectionTable& c, const MatrixS& g, const MatrixS& j,
                             const FormS& omega, int eps, int nijenhuis_sign = -1);

// Number of basis quadruples violating
// 2 g((nabla^2_{W,X} J) Y, Z) = -sigma_{X,Y,Z} g((nabla_W J) X, (nabla_Y J) J Z).
int second_derivative_failures(const ConnectionTable& c, const MatrixS& g, const MatrixS& j);

// Number of vector pairs (basis pairs and their pairwise sums) violating
// g((nabla_X J) Y, (nabla_X J) Y) = kappa (g(X,X) g(Y,Y) - g(X,Y)^2 + eps g(JX,Y)^2).
int constant_type_failures(const ConnectionTable& c, const MatrixS& g, const MatrixS& j, int eps,
                           const Scalar& kappa);

}  // namespace nk6
