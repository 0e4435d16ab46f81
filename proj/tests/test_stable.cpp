#include <doctest.h>

#include "nk6/lie_algebra.hpp"
#include "nk6/linalg.hpp"
#include "nk6/polynomial.hpp"
#include "nk6/stable.hpp"
#include "support.hpp"

using namespace nk6;

namespace {

FormS e(std::initializer_list<int> idx, Scalar c = Scalar(1)) { return FormS::basis(6, idx, c); }

FormS normal_rho(int eps) { return e({1, 2, 3}) + (e({1, 5, 6}) + e({4, 2, 6}) + e({4, 5, 3})) * Scalar(eps); }

FormD to_float(const FormS& f) {
  return f.map([](const Scalar& s) { return s.to_double(); });
}

}  // namespace

TEST_CASE("k_rho on the split form and on a decomposable form") {
  MatrixS expected = zeros<Scalar>(6, 6);
  for (int i = 0; i < 6; ++i) expected(i, i) = Scalar(i < 3 ? 1 : -1);
  CHECK(k_rho(e({1, 2, 3}) + e({4, 5, 6})) == expected);
  CHECK(is_zero_matrix<Scalar>(k_rho(e({1, 2, 3}))));
}

TEST_CASE("k_rho column against a direct contraction oracle") {
  // (v _| rho) ^ rho = K(v) _| e^{1..6}: compare as 5-forms.
  std::mt19937_64 rng(11);
  FormS vol = e({1, 2, 3, 4, 5, 6});
  for (int trial = 0; trial < 20; ++trial) {
    FormS rho = testing::random_form(rng, 6, 3);
    MatrixS k = k_rho(rho);
    for (int i = 0; i < 6; ++i) {
      CHECK(wedge(contract_basis(i, rho), rho) == contract(VectorS(k.col(i)), vol));
    }
  }
}

TEST_CASE("lambda examples") {
  CHECK(lambda_invariant(normal_rho(1)) == Scalar(4));
  CHECK(lambda_invariant(normal_rho(-1)) == Scalar(-4));
  CHECK(lambda_invariant(e({1, 2, 3}) + e({4, 5, 6})) == Scalar(1));
  CHECK(lambda_invariant(e({1, 2, 3})) == Scalar(0));
}

TEST_CASE("lambda of d omega / 3 on so12+so12 is -alpha^4/27") {
  RingPtr ring = make_ring({"alpha"});
  Polynomial a = Polynomial::variable(ring, "alpha");
  FormP omega(6, 2);
  omega.add(mask_from_indices({1, 4}).first, a);
  omega.add(mask_from_indices({2, 5}).first, a);
  omega.add(mask_from_indices({3, 6}).first, a);
  LieAlgebra sum = catalog("so12+so12").algebra;
  FormP rho = ce_differential(sum, omega);
  rho *= Polynomial(Rational(1, 3));
  Polynomial lambda = lambda_invariant(rho);
  CHECK(lambda == pow(a, 4) * Rational(-1, 27));
}

TEST_CASE("para degenerate family: lambda = (ab)^2") {
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      FormS rho = e({1, 2, 3}, Scalar(a)) + e({4, 5, 6}, Scalar(b));
      CHECK(lambda_invariant(rho) == Scalar(a * a * b * b));
      if (a * b == 0) {
        CHECK_THROWS_AS(build_stable_info(rho), Error);
      } else {
        CHECK(build_stable_info(rho).epsilon == 1);
      }
    }
  }
}

TEST_CASE("build_stable_info examples") {
  StableInfo para = build_stable_info(e({1, 2, 3}) + e({4, 5, 6}));
  CHECK(para.epsilon == 1);
  MatrixS expected = zeros<Scalar>(6, 6);
  for (int i = 0; i < 6; ++i) expected(i, i) = Scalar(i < 3 ? 1 : -1);
  CHECK(para.J == expected);

  try {
    build_stable_info(e({1, 2, 3}));
    FAIL("expected NotStable");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotStable);
  }

  CatalogEntry summary = catalog("sl2sl2-nk-summary");
  StableInfo s = build_stable_info(summary.forms.at("psi_plus"), -1);
  CHECK(s.epsilon == -1);
  const Scalar r3 = Scalar::root(3);
  CHECK(s.J(0, 0) == -r3 / Scalar(3));
  CHECK(s.J(3, 0) == -r3 * Scalar(2) / Scalar(3));
  for (int i : {1, 2, 4, 5}) CHECK(s.J(i, 0).is_zero());
  CHECK(s.J == summary.endos.at("J"));
  CHECK(s.psi_minus == summary.forms.at("psi_minus"));
}

TEST_CASE("SqrtNotRepresentable outside the field") {
  FormS bad = e({1, 2, 3}) + (e({1, 5, 6}) + e({4, 2, 6}) + e({4, 5, 3})) * Scalar::fraction(1, 2);
  // lambda(e123 + t(...)) = 4 t^3, so t = 1/2 gives lambda = 1/2.
  CHECK(lambda_invariant(bad) == Scalar::fraction(1, 2));
  try {
    build_stable_info(bad);
    FAIL("expected SqrtNotRepresentable");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::SqrtNotRepresentable);
  }
  StableInfoD f = build_stable_info_float(to_float(bad));
  CHECK(std::abs(f.phi - std::sqrt(0.5)) < 1e-12);
}

TEST_CASE("stable form invariants on catalog and normal forms") {
  std::vector<FormS> forms = {normal_rho(1), normal_rho(-1), e({1, 2, 3}) + e({4, 5, 6})};
  for (const auto& name : catalog_names()) {
    CatalogEntry c = catalog(name);
    for (const auto& [key, f] : c.forms) {
      if (f.degree() == 3 && f.dim() == 6 && !lambda_invariant(f).is_zero()) forms.push_back(f);
    }
  }
  CHECK(forms.size() >= 8);
  for (const FormS& rho : forms) {
    for (int orientation : {1, -1}) {
      StableInfo s = build_stable_info(rho, orientation);
      CAPTURE(to_string(rho));
      CHECK(s.J * s.J == identity<Scalar>(6) * Scalar(s.epsilon));
      CHECK(pullback(s.J, s.psi_minus) == rho * Scalar(s.epsilon));
      CHECK(wedge(s.psi_minus, rho).top() / Scalar(2) == s.phi);
      CHECK(s.phi.sign() == orientation);
      CHECK(is_type_30_03(rho, s.J, s.epsilon));
      CHECK(is_type_30_03(s.psi_minus, s.J, s.epsilon));
      CHECK(contraction_injective(rho));
    }
    CHECK(build_stable_info(rho, -1).J == -build_stable_info(rho, 1).J);
  }
  CHECK_FALSE(contraction_injective(e({1, 2, 3})));
}

TEST_CASE("is_type_30_03 examples") {
  CatalogEntry hf = catalog("s3s3-halfflat-example");
  StableInfo s = build_stable_info(hf.forms.at("psi_plus"), -1);
  FormS domega = ce_differential(hf.algebra, hf.forms.at("omega"));
  CHECK_FALSE(domega.is_zero());
  CHECK_FALSE(is_type_30_03(domega, s.J, s.epsilon));
  CHECK(is_type_30_03(FormS(6, 3), s.J, s.epsilon));
}

TEST_CASE("naturality under 200 random maps with positive determinant") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    MatrixS l = testing::random_positive_matrix(rng);
    Scalar det = determinant(l);
    MatrixS li = inverse(l);
    FormS rho = normal_rho(trial % 2 == 0 ? 1 : -1);
    FormS pulled = pullback(l, rho);
    CHECK(lambda_invariant(pulled) == det * det * lambda_invariant(rho));
    StableInfo a = build_stable_info(rho);
    StableInfo b = build_stable_info(pulled);
    CHECK(b.phi == det * a.phi);
    CHECK(b.J == li * a.J * l);
    CHECK(b.psi_minus == pullback(l, a.psi_minus));
  }
  // lambda alone on random forms, where no root is taken.
  for (int trial = 0; trial < 30; ++trial) {
    MatrixS l = testing::random_positive_matrix(rng);
    Scalar det = determinant(l);
    FormS rho = testing::random_form(rng, 6, 3);
    CHECK(lambda_invariant(pullback(l, rho)) == det * det * lambda_invariant(rho));
    CHECK(k_rho(pullback(l, rho)) == inverse(l) * k_rho(rho) * l * det);
  }
}

TEST_CASE("lambda scales with the fourth power") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    FormS rho = testing::random_form(rng, 6, 3, trial % 2 == 0);
    Scalar c = testing::random_rational(rng);
    CHECK(lambda_invariant(rho * c) == pow(c, 4) * lambda_invariant(rho));
  }
}

TEST_CASE("float path agrees with the exact path") {
  std::vector<FormS> forms = {normal_rho(1), normal_rho(-1), catalog("sl2sl2-nk-summary").forms.at("psi_plus"),
                              catalog("s3s3-halfflat-example").forms.at("psi_plus")};
  for (const FormS& rho : forms) {
    for (int orientation : {1, -1}) {
      StableInfo s = build_stable_info(rho, orientation);
      StableInfoD f = build_stable_info_float(to_float(rho), orientation);
      CHECK(f.epsilon == s.epsilon);
      CHECK(std::abs(f.lambda - s.lambda.to_double()) < 1e-10);
      CHECK(std::abs(f.phi - s.phi.to_double()) < 1e-10);
      CHECK((f.J - to_double(s.J)).cwiseAbs().maxCoeff() < 1e-10);
      FormD diff = f.psi_minus - to_float(s.psi_minus);
      for (const auto& [m, c] : diff.terms()) CHECK(std::abs(c) < 1e-10);
    }
  }
  CHECK_THROWS_AS(build_stable_info_float(to_float(e({1, 2, 3}))), Error);
}
