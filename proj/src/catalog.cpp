#include <initializer_list>

#include "nk6/lie_algebra.hpp"
#include "nk6/linalg.hpp"

namespace nk6 {

namespace {

struct Term {
  Scalar c;
  std::initializer_list<int> idx;
};

FormS form6(std::initializer_list<Term> terms) {
  int degree = static_cast<int>(terms.begin()->idx.size());
  FormS f(6, degree);
  for (const auto& t : terms) f += FormS::basis(6, t.idx, t.c);
  return f;
}

// Symmetric matrix from a list of quadratic monomials; e^i.e^j = (e^i e^j + e^j e^i)/2.
MatrixS quadratic(int n, std::initializer_list<std::tuple<int, int, Scalar>> entries) {
  MatrixS g = zeros<Scalar>(n, n);
  for (const auto& [i, j, c] : entries) {
    if (i == j) {
      g(i - 1, i - 1) += c;
    } else {
      g(i - 1, j - 1) += c / Scalar(2);
      g(j - 1, i - 1) += c / Scalar(2);
    }
  }
  return g;
}

LieAlgebra so3_sum() { return direct_sum(so3(), so3(), "so3+so3"); }
LieAlgebra so12_sum(int tau) {
  return direct_sum(so12(tau), so12(1), tau == 1 ? "so12+so12" : "so12+so12:tau=-1");
}

CatalogEntry halfflat_example() {
  const Scalar r = Scalar::root(3);
  const Scalar x = Scalar(2) + r;
  CatalogEntry e{"s3s3-halfflat-example", so3_sum(), 3, {}, {}, {}};
  e.forms["omega"] = form6({{1, {1, 4}}, {1, {2, 5}}, {1, {3, 6}}});
  e.forms["psi_plus"] = form6({{-x * x / Scalar(2), {1, 2, 3}},
                              {Scalar(2) * x, {1, 2, 6}},
                              {Scalar(-2) * x, {1, 3, 5}},
                              {Scalar(-2) * x, {1, 5, 6}},
                              {Scalar(2) * x, {2, 3, 4}},
                              {Scalar(2) * x, {2, 4, 6}},
                              {Scalar(-2) * x, {3, 4, 5}},
                              {Scalar(4) * x - Scalar(8), {4, 5, 6}}});
  e.forms["psi_minus"] = form6({{x / Scalar(2), {1, 2, 3}},
                               {-2, {1, 5, 6}},
                               {2, {2, 4, 6}},
                               {-2, {3, 4, 5}},
                               {4, {4, 5, 6}}});
  e.metrics["g"] = quadratic(6, {{1, 1, x}, {2, 2, x}, {3, 3, x},
                                 {4, 4, 4}, {5, 5, 4}, {6, 6, 4},
                                 {1, 4, Scalar(-2) * x}, {2, 5, Scalar(-2) * x}, {3, 6, Scalar(-2) * x}});
  return e;
}

CatalogEntry nk_summary() {
  const Scalar r = Scalar::root(3);
  CatalogEntry e{"sl2sl2-nk-summary", so12_sum(1), 3, {}, {}, {}};
  const Scalar a = r / Scalar(18);
  e.forms["omega"] = form6({{a, {1, 4}}, {a, {2, 5}}, {a, {3, 6}}});
  const Scalar p = r / Scalar(54);
  e.forms["psi_plus"] = form6({{p, {1, 2, 6}}, {-p, {1, 3, 5}}, {p, {1, 5, 6}},
                               {-p, {2, 3, 4}}, {p, {2, 4, 6}}, {-p, {3, 4, 5}}});
  const Scalar m = Scalar::fraction(-1, 54);
  e.forms["psi_minus"] = form6({{m * Scalar(2), {1, 2, 3}}, {m, {1, 2, 6}}, {-m, {1, 3, 5}},
                                {-m, {1, 5, 6}}, {-m, {2, 3, 4}}, {-m, {2, 4, 6}},
                                {m, {3, 4, 5}}, {m * Scalar(2), {4, 5, 6}}});
  const Scalar t = r / Scalar(3);
  MatrixS j = zeros<Scalar>(6, 6);
  // Columns are J(e_i).
  j(0, 0) = -t; j(3, 0) = Scalar(-2) * t;
  j(0, 3) = Scalar(2) * t; j(3, 3) = t;
  j(1, 1) = -t; j(4, 1) = Scalar(2) * t;
  j(1, 4) = Scalar(-2) * t; j(4, 4) = t;
  j(2, 2) = -t; j(5, 2) = Scalar(2) * t;
  j(2, 5) = Scalar(-2) * t; j(5, 5) = t;
  e.endos["J"] = j;
  const Scalar n = Scalar::fraction(1, 9);
  e.metrics["g"] = quadratic(6, {{1, 1, n}, {2, 2, -n}, {3, 3, -n},
                                 {4, 4, n}, {5, 5, -n}, {6, 6, -n},
                                 {1, 4, -n}, {2, 5, -n}, {3, 6, -n}});
  return e;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"abelian6", "so3", "so12", "so3+so3", "so12+so12", "so12+so12:tau=-1",
          "s3s3-halfflat-example", "sl2sl2-nk-summary"};
}

CatalogEntry catalog(std::string_view name) {
  if (name == "abelian6") {
    CatalogEntry e{"abelian6", LieAlgebra::abelian(6, "abelian6"), 3, {}, {}, {}};
    e.forms["omega"] = form6({{1, {1, 4}}, {1, {2, 5}}, {1, {3, 6}}});
    e.forms["psi_plus"] = form6({{1, {1, 2, 3}}, {-1, {1, 5, 6}}, {-1, {4, 2, 6}}, {-1, {4, 5, 3}}});
    return e;
  }
  if (name == "so3") return CatalogEntry{"so3", so3(), 3, {}, {}, {}};
  if (name == "so12") return CatalogEntry{"so12", so12(1), 3, {}, {}, {}};
  if (name == "so3+so3") {
    CatalogEntry e{"so3+so3", so3_sum(), 3, {}, {}, {}};
    e.forms["omega"] = form6({{1, {1, 4}}, {1, {2, 5}}, {1, {3, 6}}});
    e.forms["psi_plus"] = ce_differential(e.algebra, e.forms["omega"]) * Scalar::fraction(1, 3);
    return e;
  }
  if (name == "so12+so12" || name == "so12+so12:tau=1") return CatalogEntry{"so12+so12", so12_sum(1), 3, {}, {}, {}};
  if (name == "so12+so12:tau=-1") return CatalogEntry{"so12+so12:tau=-1", so12_sum(-1), 3, {}, {}, {}};
  if (name == "s3s3-halfflat-example") return halfflat_example();
  if (name == "sl2sl2-nk-summary") return nk_summary();
  throw Error(ErrorCode::UnknownName, "no catalog entry '" + std::string(name) + "'");
}

ThreeSymmetricStructure three_symmetric_structure(const LieAlgebra& g0) {
  if (g0.dim() != 3) throw Error(ErrorCode::InvalidArgument, "three-symmetric construction needs a 3-dimensional algebra");
  const MatrixS k = killing_form(g0);
  if (determinant(k).is_zero()) throw Error(ErrorCode::InvalidArgument, "algebra is not simple");

  const Scalar s = Scalar::root(3).inverse();
  MatrixS i3 = identity<Scalar>(3);
  auto block = [&](const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    MatrixS m(6, 6);
    m << i3 * a, i3 * b, i3 * c, i3 * d;
    return m;
  };
  // On p in (X, Y) coordinates, Z = -X - Y.
  const MatrixS j_p = block(-s, Scalar(-2) * s, Scalar(2) * s, s);
  MatrixS g_p(6, 6);
  g_p << k * Scalar(2), k, k, k * Scalar(2);
  // (X, Y) = P (U, V).
  const MatrixS p = block(Scalar::fraction(2, 3), Scalar::fraction(-1, 3), Scalar::fraction(-1, 3), Scalar::fraction(2, 3));
  const MatrixS p_inv = block(2, 1, 1, 2);

  ThreeSymmetricStructure out;
  out.algebra = direct_sum(g0, g0, g0.name() + "+" + g0.name());
  out.J = p_inv * j_p * p;
  out.g = p.transpose() * g_p * p;
  const MatrixS w = out.g * out.J;
  out.omega = FormS(6, 2);
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) out.omega.add((Mask(1) << a) | (Mask(1) << b), w(a, b));
  }
  return out;
}

}  // namespace nk6
