#include <doctest.h>

#include <Eigen/LU>
#include <random>

#include "nk6/cnormal.hpp"
#include "nk6/error.hpp"

using namespace nk6;

namespace {

void check_result(const Eigen::Matrix3d& C, const NormalFormResult& r) {
  CHECK(r.residuals.lorentz() < 1e-9);
  CHECK(r.residuals.orthochronous);
  CHECK(r.residuals.shape < 1e-8);
  CHECK(std::abs(r.residuals.diagonal_product) > 1e-12);
  // The witnesses reproduce C_normal.
  CHECK((r.A.transpose() * C * r.B - r.C_normal).norm() < 1e-9);
  // det C is preserved.
  CHECK(std::abs(r.C_normal.determinant() - C.determinant()) < 1e-8 * (1 + std::abs(C.determinant())));
}

Eigen::Matrix3d rows(std::initializer_list<double> v) {
  Eigen::Matrix3d m;
  auto it = v.begin();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m(i, j) = *it++;
  }
  return m;
}

}  // namespace

TEST_CASE("identity is already normal") {
  const Eigen::Matrix3d C = Eigen::Matrix3d::Identity();
  NormalFormResult r = cnormal_reduce(C);
  CHECK(r.case_tag == NormalCase::Timelike);
  CHECK_FALSE(r.swapped_shape);
  CHECK((r.A - Eigen::Matrix3d::Identity()).norm() < 1e-12);
  CHECK((r.B - Eigen::Matrix3d::Identity()).norm() < 1e-12);
  check_result(C, r);
}

TEST_CASE("spacelike first column gives the second shape") {
  const Eigen::Matrix3d C = rows({0, 1, 2, 1, 0.5, -1, 0, 3, 1});
  NormalFormResult r = cnormal_reduce(C);
  CHECK(r.case_tag == NormalCase::Spacelike);
  CHECK(r.swapped_shape);
  CHECK(std::abs(r.C_normal(0, 0)) < 1e-9);
  CHECK(std::abs(std::abs(r.C_normal(1, 0)) - 1) < 1e-9);
  check_result(C, r);
}

TEST_CASE("null first column") {
  for (const Eigen::Matrix3d& C : {rows({1, 0.5, 0, 1, -1, 2, 0, 1, 1}), rows({-2, 1, 1, 0, 0.5, -1, 2, 1, 3}),
                                   rows({3, 1, 0, 1.8, 2, 1, 2.4, 0, 1})}) {
    NormalFormResult r = cnormal_reduce(C);
    CHECK(r.case_tag == NormalCase::Null);
    CHECK_FALSE(r.swapped_shape);
    check_result(C, r);
  }
}

TEST_CASE("boosts are Lorentz transformations") {
  const Eigen::Matrix3d eta = Eigen::Vector3d(-1, 1, 1).asDiagonal();
  for (double q : {-2.0, -0.3, 0.0, 1.5}) {
    Eigen::Matrix3d b = boost(q);
    CHECK((b.transpose() * eta * b - eta).norm() < 1e-12);
    CHECK((boost(q) * boost(-q) - Eigen::Matrix3d::Identity()).norm() < 1e-12);
  }
}

TEST_CASE("errors") {
  const Eigen::Matrix3d singular = rows({1, 2, 3, 2, 4, 6, 0, 1, 1});
  try {
    cnormal_reduce(singular);
    FAIL("expected NearSingular");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NearSingular);
  }
}

TEST_CASE("1000 random matrices") {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> u(-2, 2);
  int reduced = 0;
  int counts[3] = {0, 0, 0};
  double worst_lorentz = 0;
  double worst_shape = 0;
  while (reduced < 1000) {
    Eigen::Matrix3d C;
    for (int i = 0; i < 9; ++i) C(i / 3, i % 3) = u(rng);
    if (std::abs(C.determinant()) <= 0.1) continue;
    NormalFormResult r = cnormal_reduce(C);
    check_result(C, r);
    worst_lorentz = std::max(worst_lorentz, r.residuals.lorentz());
    worst_shape = std::max(worst_shape, r.residuals.shape);
    ++counts[static_cast<int>(r.case_tag)];
    ++reduced;
  }
  CHECK(worst_lorentz < 1e-9);
  CHECK(worst_shape < 1e-8);
  CHECK(counts[0] > 0);
  CHECK(counts[1] > 0);
}
