#include <doctest.h>

#include "nk6/connection.hpp"
#include "nk6/su_structure.hpp"
#include "support.hpp"

using namespace nk6;

namespace {

FormS e(std::initializer_list<int> idx, Scalar c = Scalar(1)) { return FormS::basis(6, idx, c); }

void check_invariants(const SUStructure& s) {
  const MatrixS w = form_matrix(s.omega);
  const FormS cube = wedge(wedge(s.omega, s.omega), s.omega);
  CHECK(wedge(s.omega, s.psi_plus).is_zero());
  CHECK(s.J.transpose() * s.g * s.J == s.g * Scalar(-s.epsilon));
  CHECK(s.g * s.J == w);
  // g(J., J.) = -eps g forces omega(J., J.) = -eps omega.
  CHECK(s.J.transpose() * w * s.J == w * Scalar(-s.epsilon));
  CHECK(wedge(s.psi_minus, s.psi_plus) == cube * (s.psi_norm_sq / Scalar(6)));
  CHECK_FALSE(s.psi_norm_sq.is_zero());
  CHECK(cube.top().sign() == s.orientation);
}

}  // namespace

TEST_CASE("nearly Kaehler summary structure") {
  CatalogEntry c = catalog("sl2sl2-nk-summary");
  SUStructure s = build_su_structure(c.algebra, c.forms.at("omega"), c.forms.at("psi_plus"));
  CHECK(s.orientation == -1);
  CHECK(s.epsilon == -1);
  CHECK(s.g == c.metrics.at("g"));
  CHECK(s.J == c.endos.at("J"));
  CHECK(s.psi_minus == c.forms.at("psi_minus"));
  CHECK(s.signature.negative == 4);
  CHECK(s.signature.positive == 2);
  CHECK(s.psi_norm_sq == Scalar(4));
  check_invariants(s);

  TorsionFlags f = torsion_flags(c.algebra, s);
  CHECK(f.nk_exterior);
  REQUIRE(f.kappa);
  CHECK(*f.kappa == Scalar(1));
  CHECK(*f.kappa == s.psi_norm_sq / Scalar(4));
  CHECK(f.half_flat);
  CHECK(f.domega_type_30_03);
  CHECK(ce_differential(c.algebra, s.omega) == s.psi_plus * Scalar(3));
  CHECK(ce_differential(c.algebra, s.psi_minus) == wedge(s.omega, s.omega) * Scalar(2));
}

TEST_CASE("half-flat example on so3+so3") {
  CatalogEntry c = catalog("s3s3-halfflat-example");
  SUStructure s = build_su_structure(c.algebra, c.forms.at("omega"), c.forms.at("psi_plus"));
  CHECK(s.epsilon == -1);
  CHECK(s.psi_minus == c.forms.at("psi_minus"));
  CHECK(s.g == c.metrics.at("g"));
  CHECK(s.signature.positive == 6);
  CHECK(s.psi_norm_sq == Scalar(4));
  check_invariants(s);
  TorsionFlags f = torsion_flags(c.algebra, s);
  CHECK(f.half_flat);
  CHECK(f.nearly_half_flat);
  REQUIRE(f.nu);
  CHECK(*f.nu == Scalar(1));
  CHECK_FALSE(f.nk_exterior);
  CHECK_FALSE(f.domega_type_30_03);
  CHECK_FALSE(f.domega_zero);
}

TEST_CASE("abelian structures have trivial flags") {
  CatalogEntry c = catalog("abelian6");
  for (int eps : {-1, 1}) {
    SUStructure s = build_su_structure(c.algebra, testing::normal_two_form(), testing::normal_three_form(eps));
    CHECK(s.epsilon == eps);
    check_invariants(s);
    TorsionFlags f = torsion_flags(c.algebra, s);
    CHECK(f.half_flat);
    CHECK(f.nearly_half_flat);
    REQUIRE(f.nu);
    CHECK(f.nu->is_zero());
    CHECK_FALSE(f.nk_exterior);
    CHECK(f.domega_zero);
    CHECK(f.domega_type_30_03);
  }
}

TEST_CASE("build errors") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& err) {
      return err.code();
    }
    return ErrorCode::UsageError;
  };
  const FormS omega = testing::normal_two_form();
  CHECK(code_of([&] { build_su_structure(omega, e({1, 2, 3})); }) == ErrorCode::NotStable3Form);
  CHECK(code_of([&] { build_su_structure(e({1, 2}), testing::normal_three_form(-1)); }) ==
        ErrorCode::NotStable2Form);
  // omega ^ rho != 0
  CHECK(code_of([&] { build_su_structure(e({1, 2}) + e({3, 4}) + e({5, 6}), testing::normal_three_form(-1)); }) ==
        ErrorCode::NotCompatible);
}

TEST_CASE("both orientations") {
  CatalogEntry c = catalog("sl2sl2-nk-summary");
  SUStructure neg = build_su_structure(c.forms.at("omega"), c.forms.at("psi_plus"), -1);
  SUStructure pos = build_su_structure(c.forms.at("omega"), c.forms.at("psi_plus"), 1);
  CHECK(pos.J == -neg.J);
  CHECK(pos.g == -neg.g);
  CHECK(pos.psi_minus == -neg.psi_minus);
  CHECK(pos.psi_norm_sq == -neg.psi_norm_sq);
  CHECK(pos.signature.negative == 2);
}

TEST_CASE("naturality under Lie algebra automorphisms") {
  std::mt19937_64 rng(77);
  for (const char* name : {"sl2sl2-nk-summary", "s3s3-halfflat-example"}) {
    CatalogEntry c = catalog(name);
    const bool compact = c.algebra.name() == "so3+so3";
    SUStructure s = build_su_structure(c.algebra, c.forms.at("omega"), c.forms.at("psi_plus"));
    TorsionFlags f = torsion_flags(c.algebra, s);
    for (int trial = 0; trial < 10; ++trial) {
      MatrixS l = testing::random_automorphism(rng, compact);
      REQUIRE(testing::commutes_with_d(c.algebra, l));
      SUStructure t = build_su_structure(c.algebra, pullback(l, s.omega), pullback(l, s.psi_plus));
      CHECK(t.g == l.transpose() * s.g * l);
      CHECK(t.J == inverse(l) * s.J * l);
      TorsionFlags ft = torsion_flags(c.algebra, t);
      CHECK(ft.half_flat == f.half_flat);
      CHECK(ft.nearly_half_flat == f.nearly_half_flat);
      CHECK(ft.nu == f.nu);
      CHECK(ft.nk_exterior == f.nk_exterior);
      CHECK(ft.kappa == f.kappa);
      CHECK(ft.domega_type_30_03 == f.domega_type_30_03);
    }
  }
}

TEST_CASE("half-flat structures: nearly half-flat iff N is totally skew") {
  std::mt19937_64 rng(9);
  int half_flat = 0;
  int agree = 0;
  for (const char* name : {"so3+so3", "so12+so12", "so12+so12:tau=-1", "abelian6"}) {
    LieAlgebra g = catalog(name).algebra;
    for (int trial = 0; trial < 25; ++trial) {
      MatrixS l = testing::random_positive_matrix(rng);
      FormS omega = pullback(l, testing::normal_two_form());
      for (int eps : {-1, 1}) {
        SUStructure s = build_su_structure(g, omega, pullback(l, testing::normal_three_form(eps)));
        TorsionFlags f = torsion_flags(g, s);
        if (!f.half_flat) continue;
        ++half_flat;
        NijenhuisTensor n = nijenhuis(g, s.J, s.epsilon, s.g);
        if (n.totally_skew == f.nearly_half_flat) ++agree;
      }
    }
  }
  // The half-flat example and the summary are half-flat as well.
  for (const char* name : {"s3s3-halfflat-example", "sl2sl2-nk-summary"}) {
    CatalogEntry c = catalog(name);
    SUStructure s = build_su_structure(c.algebra, c.forms.at("omega"), c.forms.at("psi_plus"));
    TorsionFlags f = torsion_flags(c.algebra, s);
    REQUIRE(f.half_flat);
    ++half_flat;
    if (nijenhuis(c.algebra, s.J, s.epsilon, s.g).totally_skew == f.nearly_half_flat) ++agree;
  }
  CHECK(half_flat >= 2);
  CHECK(agree == half_flat);
}

TEST_CASE("homothety") {
  CatalogEntry c = catalog("sl2sl2-nk-summary");
  SUStructure s = build_su_structure(c.algebra, c.forms.at("omega"), c.forms.at("psi_plus"));
  SUStructure h = homothety(s, Scalar(4));
  CHECK(h.g == s.g * Scalar(4));
  CHECK(h.omega == s.omega * Scalar(4));
  CHECK(h.psi_plus == s.psi_plus * Scalar(8));
  SUStructure rebuilt = build_su_structure(h.omega, h.psi_plus);
  CHECK(rebuilt.g == h.g);
  CHECK(rebuilt.J == h.J);
  CHECK(rebuilt.psi_minus == h.psi_minus);
  CHECK(rebuilt.psi_norm_sq == s.psi_norm_sq);
  CHECK_THROWS_AS(homothety(s, Scalar(-1)), Error);
  try {
    homothety(s, Scalar(2));
    FAIL("expected SqrtNotRepresentable");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::SqrtNotRepresentable);
  }
  TorsionFlags f = torsion_flags(c.algebra, homothety(s, Scalar(3)));
  CHECK_FALSE(f.nk_exterior);
  CHECK(f.nearly_half_flat);
}
