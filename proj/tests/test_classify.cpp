#include <doctest.h>

#include <cmath>
#include <random>

#include "nk6/classify.hpp"
#include "nk6/error.hpp"
#include "nk6/expression.hpp"
#include "nk6/stable.hpp"
#include "nk6/sweep.hpp"

using namespace nk6;

namespace {

Polynomial fam(std::string_view text) { return parse_polynomial(text, family_ring()); }

void require_passed(const Report& r) {
  for (const auto& e : r.entries()) {
    CAPTURE(e.id);
    CHECK(e.status != Status::Fail);
  }
  CHECK(r.passed());
}

double eval_double(const Polynomial& p, const std::vector<double>& v) {
  std::vector<Scalar> s;
  for (double x : v) s.push_back(Scalar(Rational(static_cast<long>(std::lround(x * 64)), 64)));
  return p.evaluate(s).to_double();
}

}  // namespace

TEST_CASE("expression parser") {
  RingPtr r = family_ring();
  Polynomial a = Polynomial::variable(r, "alpha");
  Polynomial b = Polynomial::variable(r, "beta");
  CHECK(fam("2*alpha^2*beta - (alpha - beta)") == a * a * b * Rational(2) - a + b);
  CHECK(fam("{alpha + beta}^2") == a * a + a * b * Rational(2) + b * b);
  MonomialFraction f = parse_fraction("1/alpha + 1/beta", r);
  CHECK(f.numerator == a + b);
  CHECK(f.denominator == a * b);
  CHECK(parse_polynomial("c1 * alpha", r, {{"c1", Rational(3)}}) == a * Rational(3));
  CHECK_THROWS_AS(parse_polynomial("alpha/beta", r), Error);
  CHECK_THROWS_AS(parse_polynomial("alpha +* beta", r), Error);
  CHECK_THROWS_AS(parse_polynomial("alpha/(alpha+beta)", r), Error);
  CHECK_THROWS_AS(parse_polynomial("(alpha", r), Error);
  CHECK_THROWS_AS(parse_polynomial("delta", r), Error);
  try {
    parse_polynomial("alpha^", r);
    FAIL("expected SyntaxError");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::SyntaxError);
  }
}

TEST_CASE("family coefficients") {
  SymbolicFamily f = derive_family(1, -1);
  CHECK(f.domega.coefficient({2, 3, 4}) == fam("-alpha"));
  CHECK(f.k_domega(1, 4) == fam("2*alpha*gamma"));
  CHECK(f.psi_minus_scaled.coefficient({1, 2, 3}) == fam("2*alpha*beta*gamma"));
  SymbolicFamily g = derive_family(-1, -1);
  CHECK(g.psi_minus_scaled.coefficient({1, 2, 3}) == fam("-2*alpha*beta*gamma"));
  // d d omega = 0 and d omega is the derivative of omega.
  CHECK(ce_differential(f.algebra, f.domega).is_zero());
  CHECK(f.psi_plus * Polynomial(3) == f.domega);
  // J^2 = eps k^2 lambda(psi+) id with k^2 |lambda| = 1.
  Polynomial lam = lambda_invariant(f.psi_plus);
  MatrixP j2 = f.J * f.J;
  Polynomial k = Polynomial::variable(f.ring, kK);
  for (int i = 0; i < 6; ++i) {
    for (int c = 0; c < 6; ++c) CHECK(j2(i, c) == (i == c ? k * k * lam : Polynomial(0)));
  }
}

TEST_CASE("regeneration against the transcribed displays") {
  for (int tau : {1, -1}) {
    for (int eps : {-1, 1}) {
      CAPTURE(tau);
      CAPTURE(eps);
      Report r = regeneration_report(tau, eps);
      require_passed(r);
      CHECK(r.entries().size() >= 20);
    }
  }
  ReferenceExpansions ref = reference_expansions(1, -1);
  CHECK(ref.errata.size() == 2);
  CHECK(ref.d_psi_minus_verbatim != ref.d_psi_minus_scaled);
  CHECK(ref.equations.size() == 9);
}

TEST_CASE("e1356 equation matches the display after k -> -k") {
  SymbolicFamily f = derive_family(1, -1);
  CoefficientSystem sys = coefficient_equations(f);
  REQUIRE(sys.equations.size() == 9);
  CHECK(sys.unexpected.empty());
  ReferenceExpansions ref = reference_expansions(1, -1);
  const PrintedEquation* printed = nullptr;
  for (const auto& e : ref.equations) {
    if (e.label == "e1356") printed = &e;
  }
  REQUIRE(printed != nullptr);
  const LabeledEquation* derived = nullptr;
  for (const auto& e : sys.equations) {
    if (e.label == "e1356") derived = &e;
  }
  REQUIRE(derived != nullptr);
  auto ratio = proportionality(flip_k(derived->polynomial), printed->cleared);
  REQUIRE(ratio);
  CHECK(*ratio != Rational(0));
}

TEST_CASE("x = y = z = 0 gives the quartic system") {
  for (int tau : {1, -1}) {
    SymbolicFamily f = derive_family(tau, -1);
    CoefficientSystem sys = coefficient_equations(f);
    Polynomial a = Polynomial::variable(f.ring, kAlpha);
    Polynomial b = Polynomial::variable(f.ring, kBeta);
    Polynomial g = Polynomial::variable(f.ring, kGamma);
    Polynomial k = Polynomial::variable(f.ring, kK);
    Polynomial g2 = g * g * Rational(tau);
    // Independent form: k (2 t^4 - c1 t^2) + 54 a b g with c1 = a^2 + b^2 + tau g^2 at eps = -1.
    Polynomial c1 = a * a + b * b + g2;
    std::array<Polynomial, 3> expected = {
        k * (pow(a, 4) * Rational(2) - c1 * a * a) + a * b * g * Rational(54),
        k * (pow(b, 4) * Rational(2) - c1 * b * b) + a * b * g * Rational(54),
        k * (g2 * g2 * Rational(2) - c1 * g2) + a * b * g * Rational(54),
    };
    for (int i = 0; i < 3; ++i) {
      CAPTURE(i);
      CHECK(sys.reduced[i] == expected[i]);
    }
  }
}

TEST_CASE("symbolic equations agree with the numeric residual") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(-64, 64);
  const std::vector<Mask> masks = masks_of_degree(6, 4);
  for (int tau : {1, -1}) {
    const LieAlgebra lie = catalog(tau == 1 ? "so12+so12" : "so12+so12:tau=-1").algebra;
    const CoefficientSystem neg = coefficient_equations(derive_family(tau, -1));
    const CoefficientSystem pos = coefficient_equations(derive_family(tau, 1));
    const Polynomial lambda = lambda_invariant(derive_family(tau, -1).psi_plus);
    int compared = 0;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> v(7, 0.0);
      for (int i = 0; i < 6; ++i) v[i] = pick(rng) / 64.0;
      FamilyParams p{v[0], v[1], v[2], v[3], v[4], v[5]};
      std::vector<double> res;
      try {
        res = nk_residual(lie, p, -1);
      } catch (const Error&) {
        continue;
      }
      const double lam = eval_double(lambda, v);
      const int eps = lam < 0 ? -1 : 1;
      const double k = 1.0 / std::sqrt(std::abs(lam));
      for (const auto& eq : (eps == -1 ? neg : pos).equations) {
        const double p0 = eval_double(eq.polynomial.coefficient(kK, 0), v);
        const double p1 = eval_double(eq.polynomial.coefficient(kK, 1), v);
        int idx = 0;
        while (masks[idx] != eq.mask) ++idx;
        // p0 + k p1 = 27 eps (d psi- - 2 omega^2)
        CHECK(std::abs(p0 + k * p1 - 27.0 * eps * res[idx]) < 1e-8 * (1.0 + std::abs(p0) + std::abs(k * p1)));
        ++compared;
      }
    }
    CHECK(compared >= 90);
  }
}

TEST_CASE("verification reports") {
  require_passed(verify_unique_solution());
  require_passed(blockform_report());
  CHECK(blockform_check());
  require_passed(so3so3_nonexistence());
}

TEST_CASE("local solve from a perturbed canonical point") {
  const double a0 = std::sqrt(3.0) / 18.0;
  FamilyParams start{a0 + 0.01, a0 - 0.01, a0 + 0.005, 0.01, -0.01, 0.005};
  SolveOutcome out = solve_from(start, 1, -1);
  CHECK(out.root);
  CHECK(out.residual < 1e-10);
  CHECK(out.in_orbit);
  CHECK(orbit_distance({a0, a0, a0, 0, 0, 0}, 1) < 1e-14);
  // A sign automorphism of one summand stays in the orbit.
  CHECK(orbit_distance({-a0, -a0, a0, 0, 0, 0}, 1) < 1e-14);
  CHECK(orbit_distance({2 * a0, a0, a0, 0, 0, 0}, 1) > 1e-3);
}

TEST_CASE("small sweep is deterministic") {
  SweepOptions opt;
  opt.starts = 24;
  opt.threads = 1;
  SweepResult a = numeric_uniqueness_sweep(opt);
  opt.threads = 2;
  SweepResult b = numeric_uniqueness_sweep(opt);
  REQUIRE(a.outcomes.size() == 24);
  REQUIRE(b.outcomes.size() == 24);
  for (std::size_t i = 0; i < a.outcomes.size(); ++i) {
    CHECK(a.outcomes[i].params == b.outcomes[i].params);
    CHECK(a.outcomes[i].root == b.outcomes[i].root);
  }
  REQUIRE(a.configs.size() == 4);
  for (const auto& c : a.configs) {
    CHECK(c.starts == 6);
    CHECK(c.roots == c.in_orbit);
    if (c.tau == -1) CHECK(c.roots == 0);
  }
  Report r = sweep_report(a, opt);
  CHECK(r.find("sweep.all_roots_canonical") != nullptr);
}
