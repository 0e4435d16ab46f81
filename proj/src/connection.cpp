#include "nk6/connection.hpp"

#include "nk6/su_structure.hpp"

namespace nk6 {

namespace {

MatrixS combine(const std::vector<MatrixS>& ms, const VectorS& v) {
  const int n = static_cast<int>(v.size());
  MatrixS out = zeros<Scalar>(n, n);
  for (int i = 0; i < n; ++i) {
    if (!v(i).is_zero()) out += ms[i] * v(i);
  }
  return out;
}

Scalar inner(const MatrixS& g, const VectorS& x, const VectorS& y) { return (x.transpose() * g * y)(0, 0); }

void require_nondegenerate(const MatrixS& g) {
  if (!is_symmetric(g)) throw Error(ErrorCode::DegenerateMetric, "metric is not symmetric");
  if (determinant(g).is_zero()) throw Error(ErrorCode::DegenerateMetric, "metric is degenerate");
}

CubicTensor lower(const std::vector<std::vector<VectorS>>& values, const MatrixS& g, TensorRole role) {
  const int n = static_cast<int>(g.rows());
  CubicTensor t(n, role);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      VectorS low = g * values[i][j];
      for (int k = 0; k < n; ++k) t(i, j, k) = low(k);
    }
  }
  return t;
}

}  // namespace

MatrixS ConnectionTable::along(const VectorS& x) const { return combine(gamma, x); }

Scalar CubicTensor::evaluate(const VectorS& x, const VectorS& y, const VectorS& z) const {
  Scalar s;
  for (int i = 0; i < n_; ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      if (y(j).is_zero()) continue;
      for (int k = 0; k < n_; ++k) {
        if (z(k).is_zero()) continue;
        const Scalar& c = (*this)(i, j, k);
        if (!c.is_zero()) s += c * x(i) * y(j) * z(k);
      }
    }
  }
  return s;
}

bool CubicTensor::is_zero() const {
  for (const auto& c : t_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CubicTensor::totally_skew() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      for (int k = 0; k < n_; ++k) {
        const Scalar& c = (*this)(i, j, k);
        if (!(c + (*this)(j, i, k)).is_zero() || !(c + (*this)(i, k, j)).is_zero()) return false;
      }
    }
  }
  return true;
}

CubicTensor CubicTensor::scaled(const Scalar& c) const {
  CubicTensor r = *this;
  for (auto& v : r.t_) v *= c;
  return r;
}

CubicTensor CubicTensor::pulled_back(const MatrixS& l) const {
  CubicTensor r(n_, role_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      for (int k = 0; k < n_; ++k) r(i, j, k) = evaluate(l.col(i), l.col(j), l.col(k));
    }
  }
  return r;
}

CubicTensor tensor_from_form(const FormS& f) {
  if (f.degree() != 3) throw Error(ErrorCode::DimensionMismatch, "expected a 3-form");
  const int n = f.dim();
  CubicTensor t(n, TensorRole::Generic);
  for (const auto& [m, c] : f.terms()) {
    auto idx = mask_indices(m);
    const int p[6][4] = {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}, {1, 0, 2, -1}, {0, 2, 1, -1}, {2, 1, 0, -1}};
    for (const auto& q : p) t(idx[q[0]], idx[q[1]], idx[q[2]]) = q[3] > 0 ? c : -c;
  }
  return t;
}

Scalar full_contraction(const CubicTensor& t, const MatrixS& g) {
  require_nondegenerate(g);
  const int n = t.dim();
  const MatrixS gi = inverse(g);
  CubicTensor u(n, TensorRole::Generic), v(n, TensorRole::Generic), w(n, TensorRole::Generic);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int k = 0; k < n; ++k)
          if (!t(a, b, k).is_zero() && !gi(k, c).is_zero()) u(a, b, c) += t(a, b, k) * gi(k, c);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int k = 0; k < n; ++k)
          if (!u(a, k, c).is_zero() && !gi(k, b).is_zero()) v(a, b, c) += u(a, k, c) * gi(k, b);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int k = 0; k < n; ++k)
          if (!v(k, b, c).is_zero() && !gi(k, a).is_zero()) w(a, b, c) += v(k, b, c) * gi(k, a);
  Scalar s;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (!t(a, b, c).is_zero()) s += t(a, b, c) * w(a, b, c);
  return s;
}

Scalar tensor_norm_sq(const CubicTensor& t, const MatrixS& g) { return full_contraction(t, g) / Scalar(6); }

ConnectionTable levi_civita(const LieAlgebra& lie, const MatrixS& g) {
  require_nondegenerate(g);
  const int n = lie.dim();
  if (g.rows() != n) throw Error(ErrorCode::DimensionMismatch, "metric size does not match the algebra");
  const MatrixS gi = inverse(g);
  // b(i, j, k) = g([e_i, e_j], e_k)
  CubicTensor b(n, TensorRole::Generic);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) {
        const Scalar& c = lie.structure_constant(i, j, m);
        if (c.is_zero()) continue;
        for (int k = 0; k < n; ++k) b(i, j, k) += c * g(m, k);
      }
  ConnectionTable table;
  table.gamma.assign(n, zeros<Scalar>(n, n));
  const Scalar half = Scalar::fraction(1, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      VectorS low(n);
      for (int k = 0; k < n; ++k) low(k) = (b(i, j, k) - b(j, k, i) + b(k, i, j)) * half;
      table.gamma[i].col(j) = gi * low;
    }
  }
  return table;
}

bool is_metric(const ConnectionTable& c, const MatrixS& g) {
  for (const auto& gm : c.gamma) {
    if (!is_zero_matrix<Scalar>(MatrixS(gm.transpose() * g + g * gm))) return false;
  }
  return true;
}

bool is_torsion_free(const LieAlgebra& lie, const ConnectionTable& c) {
  const int n = lie.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      VectorS t = c.gamma[i].col(j) - c.gamma[j].col(i) -
                  lie.bracket(unit_vector<Scalar>(n, i), unit_vector<Scalar>(n, j));
      if (!is_zero_matrix<Scalar>(MatrixS(t))) return false;
    }
  }
  return true;
}

std::vector<MatrixS> covariant_derivative_of(const ConnectionTable& c, const MatrixS& j) {
  std::vector<MatrixS> d;
  d.reserve(c.gamma.size());
  for (const auto& gm : c.gamma) d.push_back(gm * j - j * gm);
  return d;
}

CubicTensor nabla_J(const ConnectionTable& c, const MatrixS& g, const MatrixS& j, int eps) {
  const int n = c.dim();
  auto d = covariant_derivative_of(c, j);
  CubicTensor a(n, TensorRole::A);
  for (int i = 0; i < n; ++i) {
    MatrixS gd = g * d[i];
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) a(i, y, z) = gd(z, y);
    MatrixS ai(n, n);
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) ai(y, z) = a(i, y, z);
    if (!is_zero_matrix<Scalar>(MatrixS(ai + ai.transpose()))) {
      throw Error(ErrorCode::SymmetryViolation, "A is not skew in its last two slots");
    }
    if (!is_zero_matrix<Scalar>(MatrixS(j.transpose() * ai * j - ai * Scalar(eps)))) {
      throw Error(ErrorCode::SymmetryViolation, "A(X, JY, JZ) != eps A(X, Y, Z)");
    }
  }
  return a;
}

NearlyKahlerCheck nearly_kahler_direct(const CubicTensor& a, const MatrixS& g) {
  NearlyKahlerCheck r;
  r.holds = true;
  const int n = a.dim();
  for (int x = 0; x < n && r.holds; ++x)
    for (int y = x; y < n && r.holds; ++y)
      for (int z = 0; z < n; ++z) {
        if (!(a(x, y, z) + a(y, x, z)).is_zero()) {
          r.holds = false;
          break;
        }
      }
  r.nabla_j_norm_sq = tensor_norm_sq(a, g);
  r.kappa = r.nabla_j_norm_sq / Scalar(4);
  return r;
}

NijenhuisTensor nijenhuis(const LieAlgebra& lie, const MatrixS& j, int eps, const MatrixS& g) {
  const int n = lie.dim();
  NijenhuisTensor out;
  out.values.assign(n, std::vector<VectorS>(n, VectorS::Constant(n, Scalar(0))));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      VectorS x = unit_vector<Scalar>(n, a);
      VectorS y = unit_vector<Scalar>(n, b);
      VectorS jx = j.col(a);
      VectorS jy = j.col(b);
      VectorS v = lie.bracket(x, y) * Scalar(-eps) - lie.bracket(jx, jy) + j * lie.bracket(jx, y) +
                  j * lie.bracket(x, jy);
      out.values[a][b] = v;
      out.values[b][a] = -v;
    }
  }
  out.lowered = lower(out.values, g, TensorRole::NijenhuisMetric);
  out.totally_skew = out.lowered.totally_skew();
  return out;
}

NijenhuisTensor nijenhuis_from_connection(const ConnectionTable& c, const MatrixS& j, const MatrixS& g) {
  const int n = c.dim();
  auto d = covariant_derivative_of(c, j);
  NijenhuisTensor out;
  out.values.assign(n, std::vector<VectorS>(n, VectorS::Constant(n, Scalar(0))));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      VectorS x = unit_vector<Scalar>(n, a);
      VectorS y = unit_vector<Scalar>(n, b);
      out.values[a][b] = combine(d, j.col(b)) * x - combine(d, j.col(a)) * y + j * (d[a] * y - d[b] * x);
    }
  }
  out.lowered = lower(out.values, g, TensorRole::NijenhuisMetric);
  out.totally_skew = out.lowered.totally_skew();
  return out;
}

CanonicalConnection canonical_connection(const LieAlgebra& lie, const ConnectionTable& lc, const MatrixS& g,
                                         const MatrixS& j, const FormS& omega, const NijenhuisTensor& nij, int eps) {
  if (!nij.totally_skew) throw Error(ErrorCode::NotG1, "Nijenhuis tensor is not totally skew");
  const int n = lie.dim();
  const FormS domega = ce_differential(lie, omega);
  CanonicalConnection out;
  out.torsion = CubicTensor(n, TensorRole::TorsionMetric);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k)
        out.torsion(a, b, k) = nij.lowered(a, b, k) * Scalar(eps) - evaluate(domega, {j.col(a), j.col(b), j.col(k)});
  const MatrixS gi = inverse(g);
  const Scalar half = Scalar::fraction(1, 2);
  out.table = lc;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      VectorS low(n);
      for (int k = 0; k < n; ++k) low(k) = out.torsion(a, b, k);
      out.table.gamma[a].col(b) += gi * low * half;
    }
  }
  out.metric = is_metric(out.table, g);
  out.j_parallel = is_parallel_endomorphism(out.table, j);
  return out;
}

bool is_parallel(const ConnectionTable& c, const CubicTensor& b) {
  const int n = c.dim();
  for (int i = 0; i < n; ++i) {
    const MatrixS& gm = c.gamma[i];
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          Scalar s;
          for (int m = 0; m < n; ++m) {
            if (!gm(m, x).is_zero()) s += gm(m, x) * b(m, y, z);
            if (!gm(m, y).is_zero()) s += gm(m, y) * b(x, m, z);
            if (!gm(m, z).is_zero()) s += gm(m, z) * b(x, y, m);
          }
          if (!s.is_zero()) return false;
        }
  }
  return true;
}

bool is_parallel_endomorphism(const ConnectionTable& c, const MatrixS& e) {
  for (const auto& gm : c.gamma) {
    if (!is_zero_matrix<Scalar>(MatrixS(gm * e - e * gm))) return false;
  }
  return true;
}

CurvatureData curvature_ricci(const LieAlgebra& lie, const ConnectionTable& c, const MatrixS& g) {
  const int n = lie.dim();
  CurvatureData out;
  out.riemann.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      MatrixS r = c.gamma[i] * c.gamma[j] - c.gamma[j] * c.gamma[i];
      for (int k = 0; k < n; ++k) {
        const Scalar& s = lie.structure_constant(i, j, k);
        if (!s.is_zero()) r -= c.gamma[k] * s;
      }
      out.riemann.push_back(r);
    }
  }
  out.ricci = zeros<Scalar>(n, n);
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z)
      for (int i = 0; i < n; ++i) out.ricci(y, z) += out.riemann[i * n + y](i, z);
  for (int a = 0; a < n && !out.einstein_constant; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g(a, b).is_zero()) continue;
      Scalar e = out.ricci(a, b) / g(a, b);
      if (out.ricci == MatrixS(g * e)) out.einstein_constant = e;
      break;
    }
    if (!out.einstein_constant && !g.row(a).isZero(Scalar(0))) break;
  }
  return out;
}

int master_identity_failures(const LieAlgebra& lie, const ConnectionTable& c, const MatrixS& g, const MatrixS& j,
                             const FormS& omega, int eps, int nijenhuis_sign) {
  const int n = lie.dim();
  const MatrixS w = form_matrix(omega);
  const FormS domega = ce_differential(lie, omega);
  const NijenhuisTensor nij = nijenhuis(lie, j, eps, g);
  int failures = 0;
  for (int x = 0; x < n; ++x) {
    // (nabla_X omega)(Y, Z) = -omega(nabla_X Y, Z) - omega(Y, nabla_X Z)
    const MatrixS nw = -(c.gamma[x].transpose() * w + w * c.gamma[x]);
    const VectorS ex = unit_vector<Scalar>(n, x);
    for (int y = 0; y < n; ++y) {
      for (int z = y + 1; z < n; ++z) {
        const VectorS ey = unit_vector<Scalar>(n, y);
        const VectorS ez = unit_vector<Scalar>(n, z);
        Scalar lhs = nw(y, z) * Scalar(2);
        Scalar rhs = evaluate(domega, {ex, ey, ez}) + evaluate(domega, {ex, VectorS(j.col(y)), VectorS(j.col(z))}) * Scalar(eps) +
                     inner(g, nij.values[y][z], j.col(x)) * Scalar(nijenhuis_sign * eps);
        if (!(lhs == rhs)) ++failures;
      }
    }
  }
  return failures;
}

int second_derivative_failures(const ConnectionTable& c, const MatrixS& g, const MatrixS& j) {
  const int n = c.dim();
  const auto d = covariant_derivative_of(c, j);
  int failures = 0;
  for (int w = 0; w < n; ++w) {
    for (int x = 0; x < n; ++x) {
      const MatrixS second = c.gamma[w] * d[x] - d[x] * c.gamma[w] - combine(d, c.gamma[w].col(x));
      const MatrixS lhs = g * second * Scalar(2);
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          auto term = [&](int a, int b, int cc) {
            // g((nabla_W J) e_a, (nabla_{e_b} J) J e_cc)
            return inner(g, d[w].col(a), d[b] * j.col(cc));
          };
          Scalar rhs = -(term(x, y, z) + term(y, z, x) + term(z, x, y));
          if (!(lhs(z, y) == rhs)) ++failures;
        }
      }
    }
  }
  return failures;
}

int constant_type_failures(const ConnectionTable& c, const MatrixS& g, const MatrixS& j, int eps,
                           const Scalar& kappa) {
  const int n = c.dim();
  const auto d = covariant_derivative_of(c, j);
  std::vector<VectorS> vs;
  for (int a = 0; a < n; ++a) vs.push_back(unit_vector<Scalar>(n, a));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) vs.push_back(unit_vector<Scalar>(n, a) + unit_vector<Scalar>(n, b));
  int failures = 0;
  for (const auto& x : vs) {
    const MatrixS dx = combine(d, x);
    for (const auto& y : vs) {
      const VectorS v = dx * y;
      Scalar lhs = inner(g, v, v);
      Scalar gxy = inner(g, x, y);
      Scalar gjxy = inner(g, j * x, y);
      Scalar rhs = kappa * (inner(g, x, x) * inner(g, y, y) - gxy * gxy + Scalar(eps) * gjxy * gjxy);
      if (!(lhs == rhs)) ++failures;
    }
  }
  return failures;
}

}  // namespace nk6
