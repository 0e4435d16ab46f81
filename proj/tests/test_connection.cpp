#include <doctest.h>

#include "nk6/connection.hpp"
#include "nk6/su_structure.hpp"
#include "support.hpp"

using namespace nk6;

namespace {

struct Geometry {
  LieAlgebra lie;
  SUStructure s;
  ConnectionTable lc;
  std::vector<MatrixS> dj;
  CubicTensor a;
};

Geometry geometry(const LieAlgebra& lie, const FormS& omega, const FormS& rho) {
  Geometry g{lie, build_su_structure(lie, omega, rho), {}, {}, {}};
  g.lc = levi_civita(lie, g.s.g);
  g.dj = covariant_derivative_of(g.lc, g.s.J);
  g.a = nabla_J(g.lc, g.s.g, g.s.J, g.s.epsilon);
  return g;
}

Geometry catalog_geometry(const char* name) {
  CatalogEntry c = catalog(name);
  return geometry(c.algebra, c.forms.at("omega"), c.forms.at("psi_plus"));
}

MatrixS random_metric(std::mt19937_64& rng, int n) {
  for (;;) {
    MatrixS m = testing::random_matrix(rng, n);
    MatrixS g = m + m.transpose();
    if (!determinant(g).is_zero()) return g;
  }
}

// Almost Hermitian data from the three-symmetric construction, with the metric
// rescaled so that |nabla J|^2 = 4.
struct ThreeSymmetricGeometry {
  LieAlgebra lie;
  MatrixS g, J;
  FormS omega;
  ConnectionTable lc;
};

ThreeSymmetricGeometry normalized_three_symmetric(const LieAlgebra& g0) {
  ThreeSymmetricStructure t = three_symmetric_structure(g0);
  ConnectionTable lc = levi_civita(t.algebra, t.g);
  CubicTensor a = nabla_J(lc, t.g, t.J, -1);
  Scalar c = tensor_norm_sq(a, t.g) / Scalar(4);
  ThreeSymmetricGeometry out{t.algebra, t.g * c, t.J, t.omega * c, {}};
  out.lc = levi_civita(out.lie, out.g);
  return out;
}

}  // namespace

TEST_CASE("Levi-Civita examples") {
  LieAlgebra ab = LieAlgebra::abelian(6);
  ConnectionTable flat = levi_civita(ab, identity<Scalar>(6));
  for (const auto& gm : flat.gamma) CHECK(is_zero_matrix<Scalar>(gm));

  LieAlgebra s = so3();
  ConnectionTable c = levi_civita(s, identity<Scalar>(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      VectorS half = s.bracket(unit_vector<Scalar>(3, i), unit_vector<Scalar>(3, j)) * Scalar::fraction(1, 2);
      CHECK(c.covariant(unit_vector<Scalar>(3, i), unit_vector<Scalar>(3, j)) == half);
    }
  }

  Geometry nk = catalog_geometry("sl2sl2-nk-summary");
  CHECK(is_metric(nk.lc, nk.s.g));
  CHECK(is_torsion_free(nk.lie, nk.lc));
  for (const auto& gm : nk.lc.gamma)
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) CHECK((gm(i, j).field() == 0 || gm(i, j).field() == 3));

  CHECK_THROWS_AS(levi_civita(so3(), zeros<Scalar>(3, 3)), Error);
}

TEST_CASE("Koszul connection is metric and torsion-free for random metrics") {
  std::mt19937_64 rng(31);
  for (const auto& name : catalog_names()) {
    LieAlgebra lie = catalog(name).algebra;
    for (int trial = 0; trial < 5; ++trial) {
      MatrixS g = random_metric(rng, lie.dim());
      ConnectionTable c = levi_civita(lie, g);
      CHECK(is_metric(c, g));
      CHECK(is_torsion_free(lie, c));
      // Uniqueness oracle: the Koszul right-hand side is reproduced.
      const int n = lie.dim();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            auto e = [n](int a) { return unit_vector<Scalar>(n, a); };
            auto gg = [&](const VectorS& x, const VectorS& y) { return (x.transpose() * g * y)(0, 0); };
            Scalar lhs = gg(c.covariant(e(i), e(j)), e(k)) * Scalar(2);
            Scalar rhs = gg(lie.bracket(e(i), e(j)), e(k)) - gg(lie.bracket(e(j), e(k)), e(i)) +
                         gg(lie.bracket(e(k), e(i)), e(j));
            CHECK(lhs == rhs);
          }
    }
  }
}

TEST_CASE("nabla J examples") {
  Geometry flat = geometry(LieAlgebra::abelian(6), testing::normal_two_form(), testing::normal_three_form(-1));
  CHECK(flat.a.is_zero());
  NearlyKahlerCheck fk = nearly_kahler_direct(flat.a, flat.s.g);
  CHECK(fk.holds);
  CHECK(fk.kappa.is_zero());

  Geometry nk = catalog_geometry("sl2sl2-nk-summary");
  CHECK(nk.a.same_components(tensor_from_form(nk.s.psi_plus).scaled(Scalar(-1))));
  CHECK(ce_differential(nk.lie, nk.s.omega) == nk.s.psi_plus * Scalar(3));
  NearlyKahlerCheck nkc = nearly_kahler_direct(nk.a, nk.s.g);
  CHECK(nkc.holds);
  CHECK(nkc.kappa == Scalar(1));
  CHECK(nkc.nabla_j_norm_sq == Scalar(4));
  CHECK(nkc.nabla_j_norm_sq == nk.s.psi_norm_sq);
  CHECK(full_contraction(nk.a, nk.s.g) == Scalar(24));

  Geometry hf = catalog_geometry("s3s3-halfflat-example");
  CHECK_FALSE(hf.a.totally_skew());
  CHECK_FALSE(nearly_kahler_direct(hf.a, hf.s.g).holds);
}

TEST_CASE("para pairing norm of a e123 + b e456 is 2ab") {
  MatrixS g = zeros<Scalar>(6, 6);
  for (int i = 0; i < 3; ++i) g(i, i + 3) = g(i + 3, i) = Scalar(1);
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      FormS f = FormS::basis(6, {1, 2, 3}, Scalar(a)) + FormS::basis(6, {4, 5, 6}, Scalar(b));
      CHECK(tensor_norm_sq(tensor_from_form(f), g) == Scalar(2 * a * b));
    }
  }
}

TEST_CASE("Nijenhuis tensor") {
  Geometry flat = geometry(LieAlgebra::abelian(6), testing::normal_two_form(), testing::normal_three_form(1));
  NijenhuisTensor nf = nijenhuis(flat.lie, flat.s.J, flat.s.epsilon, flat.s.g);
  CHECK(nf.lowered.is_zero());
  CHECK(nf.totally_skew);

  Geometry nk = catalog_geometry("sl2sl2-nk-summary");
  const int eps = nk.s.epsilon;
  NijenhuisTensor n = nijenhuis(nk.lie, nk.s.J, eps, nk.s.g);
  CHECK(n.totally_skew);
  CHECK(n.lowered.same_components(nk.a.pulled_back(nk.s.J).scaled(Scalar(-4 * eps))));
  CHECK_FALSE(n.lowered.is_zero());

  // Two independent routes agree on every catalog structure and random ones.
  std::mt19937_64 rng(3);
  std::vector<Geometry> gs = {nk, catalog_geometry("s3s3-halfflat-example"), flat};
  for (const char* name : {"so12+so12", "so3+so3", "so12+so12:tau=-1"}) {
    for (int eps2 : {-1, 1}) {
      MatrixS l = testing::random_positive_matrix(rng);
      gs.push_back(geometry(catalog(name).algebra, pullback(l, testing::normal_two_form()),
                            pullback(l, testing::normal_three_form(eps2))));
    }
  }
  for (const Geometry& g : gs) {
    NijenhuisTensor a = nijenhuis(g.lie, g.s.J, g.s.epsilon, g.s.g);
    NijenhuisTensor b = nijenhuis_from_connection(g.lc, g.s.J, g.s.g);
    CHECK(a.lowered.same_components(b.lowered));
  }
}

TEST_CASE("canonical connection of the nearly Kaehler summary") {
  Geometry nk = catalog_geometry("sl2sl2-nk-summary");
  const int eps = nk.s.epsilon;
  NijenhuisTensor n = nijenhuis(nk.lie, nk.s.J, eps, nk.s.g);
  CanonicalConnection cc = canonical_connection(nk.lie, nk.lc, nk.s.g, nk.s.J, nk.s.omega, n, eps);
  CHECK(cc.metric);
  CHECK(cc.j_parallel);
  // T(X, Y) = eps J (nabla_X J) Y = eps N / 4.
  CubicTensor oracle(6, TensorRole::Generic);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) {
      VectorS t = nk.s.g * nk.s.J * nk.dj[x].col(y) * Scalar(eps);
      for (int z = 0; z < 6; ++z) oracle(x, y, z) = t(z);
    }
  CHECK(cc.torsion.same_components(oracle));
  CHECK(cc.torsion.same_components(n.lowered.scaled(Scalar::fraction(eps, 4))));
  CHECK(is_parallel(cc.table, nk.a));
  CHECK(is_parallel(cc.table, cc.torsion));
  CHECK(is_parallel(cc.table, n.lowered));
  CHECK(is_parallel_endomorphism(cc.table, nk.s.J));
  CHECK_FALSE(is_parallel(nk.lc, nk.a));

  Geometry flat = geometry(LieAlgebra::abelian(6), testing::normal_two_form(), testing::normal_three_form(-1));
  NijenhuisTensor nf = nijenhuis(flat.lie, flat.s.J, flat.s.epsilon, flat.s.g);
  CanonicalConnection cf = canonical_connection(flat.lie, flat.lc, flat.s.g, flat.s.J, flat.s.omega, nf, -1);
  CHECK(cf.torsion.is_zero());
  for (const auto& gm : cf.table.gamma) CHECK(is_zero_matrix<Scalar>(gm));
}

TEST_CASE("canonical connection requires skew Nijenhuis tensor") {
  std::mt19937_64 rng(8);
  int rejected = 0;
  for (int trial = 0; trial < 10; ++trial) {
    MatrixS l = testing::random_positive_matrix(rng);
    Geometry g = geometry(catalog("so3+so3").algebra, pullback(l, testing::normal_two_form()),
                          pullback(l, testing::normal_three_form(-1)));
    NijenhuisTensor n = nijenhuis(g.lie, g.s.J, g.s.epsilon, g.s.g);
    if (n.totally_skew) continue;
    try {
      canonical_connection(g.lie, g.lc, g.s.g, g.s.J, g.s.omega, n, g.s.epsilon);
      FAIL("expected NotG1");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::NotG1);
      ++rejected;
    }
  }
  CHECK(rejected > 0);
}

TEST_CASE("curvature") {
  Geometry flat = geometry(LieAlgebra::abelian(6), testing::normal_two_form(), testing::normal_three_form(-1));
  CurvatureData cf = curvature_ricci(flat.lie, flat.lc, flat.s.g);
  CHECK(is_zero_matrix<Scalar>(cf.ricci));
  for (const auto& r : cf.riemann) CHECK(is_zero_matrix<Scalar>(r));

  Geometry nk = catalog_geometry("sl2sl2-nk-summary");
  CurvatureData c = curvature_ricci(nk.lie, nk.lc, nk.s.g);
  REQUIRE(c.einstein_constant);
  CHECK(*c.einstein_constant == Scalar(5));
  CHECK(c.ricci == nk.s.g * Scalar(5));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(c.R(i, j) == -c.R(j, i));
  CHECK(c.ricci == MatrixS(c.ricci.transpose()));

  // so(3) with g = I: Ric(X, Y) = -B(X, Y)/4 = g/2.
  LieAlgebra s = so3();
  ConnectionTable lc = levi_civita(s, identity<Scalar>(3));
  CurvatureData cs = curvature_ricci(s, lc, identity<Scalar>(3));
  REQUIRE(cs.einstein_constant);
  CHECK(*cs.einstein_constant == Scalar::fraction(1, 2));
  CHECK(cs.ricci == killing_form(s) * Scalar::fraction(-1, 4));
}

TEST_CASE("master identity on eps = -1 structures") {
  std::mt19937_64 rng(12);
  std::vector<Geometry> gs = {catalog_geometry("sl2sl2-nk-summary"), catalog_geometry("s3s3-halfflat-example"),
                              catalog_geometry("abelian6")};
  for (const char* name : {"so12+so12", "so3+so3", "so12+so12:tau=-1"}) {
    for (int trial = 0; trial < 3; ++trial) {
      MatrixS l = testing::random_positive_matrix(rng);
      gs.push_back(geometry(catalog(name).algebra, pullback(l, testing::normal_two_form()),
                            pullback(l, testing::normal_three_form(-1))));
    }
  }
  for (const Geometry& g : gs) {
    REQUIRE(g.s.epsilon == -1);
    CHECK(master_identity_failures(g.lie, g.lc, g.s.g, g.s.J, g.s.omega, -1) == 0);
  }
  // With +eps on the Nijenhuis term the identity contradicts g(N(X,Y),Z) = -4 A(X,Y,JZ)
  // on the nearly Kaehler summary.
  const Geometry& nk = gs.front();
  CHECK(master_identity_failures(nk.lie, nk.lc, nk.s.g, nk.s.J, nk.s.omega, -1, +1) > 0);
  const NijenhuisTensor n = nijenhuis(nk.lie, nk.s.J, -1, nk.s.g);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      for (int z = 0; z < 6; ++z) {
        Scalar rhs;
        for (int m = 0; m < 6; ++m) rhs += nk.a(x, y, m) * nk.s.J(m, z);
        CHECK(n.lowered(x, y, z) == rhs * Scalar(-4));
      }
}

TEST_CASE("master identity on eps = +1 structures") {
  std::mt19937_64 rng(13);
  int displayed = 0;
  for (const char* name : {"so12+so12", "so3+so3", "so12+so12:tau=-1", "abelian6"}) {
    for (int trial = 0; trial < 3; ++trial) {
      MatrixS l = testing::random_positive_matrix(rng);
      Geometry g = geometry(catalog(name).algebra, pullback(l, testing::normal_two_form()),
                            pullback(l, testing::normal_three_form(1)));
      REQUIRE(g.s.epsilon == 1);
      CHECK(master_identity_failures(g.lie, g.lc, g.s.g, g.s.J, g.s.omega, 1) == 0);
      if (master_identity_failures(g.lie, g.lc, g.s.g, g.s.J, g.s.omega, 1, +1) == 0) ++displayed;
    }
  }
  MESSAGE("variant with +eps on the Nijenhuis term holds on " << displayed << " of 12 para structures");
}

TEST_CASE("char_NK: direct check iff d omega of type (3,0) and N totally skew") {
  std::mt19937_64 rng(100);
  int nk_count = 0;
  int other_count = 0;
  auto check_one = [&](const LieAlgebra& lie, const FormS& omega, const FormS& rho) {
    Geometry g = geometry(lie, omega, rho);
    bool direct = nearly_kahler_direct(g.a, g.s.g).holds;
    FormS domega = ce_differential(lie, g.s.omega);
    bool exterior = is_type_30_03(domega, g.s.J, g.s.epsilon) &&
                    nijenhuis(lie, g.s.J, g.s.epsilon, g.s.g).totally_skew;
    CHECK(direct == exterior);
    (direct ? nk_count : other_count)++;
  };
  for (const auto& name : catalog_names()) {
    CatalogEntry c = catalog(name);
    if (c.forms.count("omega") && c.forms.count("psi_plus")) {
      check_one(c.algebra, c.forms.at("omega"), c.forms.at("psi_plus"));
    }
  }
  CatalogEntry nk = catalog("sl2sl2-nk-summary");
  for (int trial = 0; trial < 100; ++trial) {
    const int kind = trial % 4;
    if (kind == 0) {
      // Automorphic image of the nearly Kaehler structure.
      MatrixS l = testing::random_automorphism(rng, false);
      check_one(nk.algebra, pullback(l, nk.forms.at("omega")), pullback(l, nk.forms.at("psi_plus")));
    } else {
      const char* names[] = {"so12+so12", "so3+so3", "so12+so12:tau=-1"};
      LieAlgebra lie = catalog(names[kind - 1]).algebra;
      MatrixS l = testing::random_positive_matrix(rng);
      check_one(lie, pullback(l, testing::normal_two_form()), pullback(l, testing::normal_three_form(trial % 8 < 4 ? -1 : 1)));
    }
  }
  CHECK(nk_count > 0);
  CHECK(other_count > 0);
}

TEST_CASE("second derivative identity and constant type on nearly Kaehler structures") {
  Geometry nk = catalog_geometry("sl2sl2-nk-summary");
  CHECK(second_derivative_failures(nk.lc, nk.s.g, nk.s.J) == 0);
  CHECK(constant_type_failures(nk.lc, nk.s.g, nk.s.J, nk.s.epsilon, Scalar(1)) == 0);
  CHECK(constant_type_failures(nk.lc, nk.s.g, nk.s.J, nk.s.epsilon, Scalar(2)) > 0);

  Geometry flat = catalog_geometry("abelian6");
  CHECK(second_derivative_failures(flat.lc, flat.s.g, flat.s.J) == 0);
  CHECK(constant_type_failures(flat.lc, flat.s.g, flat.s.J, flat.s.epsilon, Scalar(0)) == 0);

  // Not nearly Kaehler: the identity is expected to fail somewhere.
  Geometry hf = catalog_geometry("s3s3-halfflat-example");
  CHECK(second_derivative_failures(hf.lc, hf.s.g, hf.s.J) > 0);
}

TEST_CASE("three-symmetric structures are nearly Kaehler after homothety") {
  for (const LieAlgebra& g0 : {so12(1), so3()}) {
    ThreeSymmetricGeometry t = normalized_three_symmetric(g0);
    CubicTensor a = nabla_J(t.lc, t.g, t.J, -1);
    NearlyKahlerCheck c = nearly_kahler_direct(a, t.g);
    CHECK(c.holds);
    CHECK(c.kappa == Scalar(1));
    CHECK(second_derivative_failures(t.lc, t.g, t.J) == 0);
    CHECK(constant_type_failures(t.lc, t.g, t.J, -1, Scalar(1)) == 0);
    CHECK(master_identity_failures(t.lie, t.lc, t.g, t.J, t.omega, -1) == 0);
    CurvatureData curv = curvature_ricci(t.lie, t.lc, t.g);
    REQUIRE(curv.einstein_constant);
    CHECK(*curv.einstein_constant == Scalar(5));
    NijenhuisTensor n = nijenhuis(t.lie, t.J, -1, t.g);
    CanonicalConnection cc = canonical_connection(t.lie, t.lc, t.g, t.J, t.omega, n, -1);
    CHECK(cc.metric);
    CHECK(cc.j_parallel);
    CHECK(is_parallel(cc.table, a));
  }
}
