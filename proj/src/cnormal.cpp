#include "nk6/cnormal.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <cmath>

#include "nk6/error.hpp"

namespace nk6 {

namespace {

using Mat = Eigen::Matrix3d;
using Vec = Eigen::Vector3d;

const Mat& eta() {
  static const Mat e = Eigen::Vector3d(-1, 1, 1).asDiagonal();
  return e;
}

double minkowski(const Vec& a, const Vec& b) { return -a(0) * b(0) + a(1) * b(1) + a(2) * b(2); }

Vec unit(const Vec& v) { return v / std::sqrt(std::abs(minkowski(v, v))); }

// Completes to a Lorentz basis [l1 l2 l3] in SO_0(1,2): l3 is the Lorentz cross product,
// flipped for det = +1.
Mat lorentz_basis(const Vec& l1, const Vec& l2) {
  Mat m;
  m.col(0) = l1;
  m.col(1) = l2;
  m.col(2) = unit(eta() * l1.cross(l2));
  if (m.determinant() < 0) m.col(2) = -m.col(2);
  return m;
}

// diag(1, r) for a 2x2 block r.
Mat lift(const Eigen::Matrix2d& r) {
  Mat m = Mat::Identity();
  m.block<2, 2>(1, 1) = r;
  return m;
}

// Rotation O in SO(2) with (p, q) O = (0, hypot(p, q)).
Eigen::Matrix2d zeroing_rotation(double p, double q) {
  const double r = std::hypot(p, q);
  Eigen::Matrix2d o = Eigen::Matrix2d::Identity();
  if (r == 0) return o;
  o << q / r, p / r, -p / r, q / r;
  return o;
}

void timelike(const Mat& C, double alpha, NormalFormResult& out) {
  Vec l1 = C.col(0) / alpha;
  if (l1(0) < 0) l1 = -l1;
  // Project the better-conditioned spatial axis onto l1's orthogonal complement.
  Vec e = std::abs(l1(1)) <= std::abs(l1(2)) ? Vec::UnitY() : Vec::UnitZ();
  const Vec l2 = unit(e + minkowski(e, l1) * l1);
  const Mat m = lorentz_basis(l1, l2);
  const Mat l = eta() * m.transpose() * eta();  // m^{-1}
  const Mat c1 = l * C;
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(c1.block<2, 2>(1, 1), Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix2d u = svd.matrixU();
  Eigen::Matrix2d v = svd.matrixV();
  if (u.determinant() < 0) u.col(1) = -u.col(1);
  if (v.determinant() < 0) v.col(1) = -v.col(1);
  out.A = l.transpose() * lift(u);
  out.B = lift(v);
  out.case_tag = NormalCase::Timelike;
}

void spacelike(const Mat& C, double alpha, NormalFormResult& out) {
  const Vec l2 = C.col(0) / alpha;
  const Vec e1 = Vec::UnitX();
  const Vec l1 = unit(e1 - minkowski(e1, l2) * l2);
  const Mat m = lorentz_basis(l1, l2);
  const Mat l = eta() * m.transpose() * eta();
  const Mat c1 = l * C;
  out.A = l.transpose();
  out.B = lift(zeroing_rotation(c1(2, 1), c1(2, 2)));
  out.case_tag = NormalCase::Spacelike;
  out.swapped_shape = true;
}

void null_case(const Mat& C, NormalFormResult& out) {
  const double c0 = C(0, 0);
  const double v0 = C(1, 0);
  const double v1 = C(2, 0);
  const double r = std::hypot(v0, v1);
  // Spatial rotation taking c to kappa (e1 + e2).
  Eigen::Matrix2d rot;
  rot << v0, v1, -v1, v0;
  rot *= std::copysign(1.0, c0) / r;
  const Mat l = lift(rot);
  const Mat c1 = l * C;
  const Mat o = lift(zeroing_rotation(c1(2, 1), c1(2, 2)));
  const Mat c2 = c1 * o;
  const double kappa = c2(0, 0);
  const double a = c2(0, 1);
  const double b = c2(1, 1);
  const double scale = C.cwiseAbs().maxCoeff();
  if (std::abs(b - a) <= 1e-14 * scale) throw Error(ErrorCode::NullCaseDegenerate, "c1 = c2 in the null case");
  const double s = (a + b) / (2 * kappa);
  double e2q = 2 * (2 + std::abs(s)) * std::abs(kappa) / std::abs(b - a);
  for (int attempt = 0; attempt < 8; ++attempt, e2q *= 4) {
    const double q1 = -0.5 * std::log(e2q);
    const Mat c3 = boost(q1) * c2;
    const double ratio = c3(1, 0) / c3(1, 1);
    if (!(std::abs(ratio) < 1)) continue;
    const double q2 = std::atanh(-ratio);
    out.A = l.transpose() * boost(q1);
    out.B = o * boost(q2);
    out.case_tag = NormalCase::Null;
    return;
  }
  throw Error(ErrorCode::NullCaseDegenerate, "no boost brings |c22/c21| above 1");
}

}  // namespace

const char* to_string(NormalCase c) {
  switch (c) {
    case NormalCase::Timelike:
      return "timelike";
    case NormalCase::Spacelike:
      return "spacelike";
    case NormalCase::Null:
      return "null";
  }
  return "?";
}

double NormalFormResiduals::lorentz() const { return std::max({lorentz_a, lorentz_b, det_a, det_b}); }

Mat boost(double q) {
  Mat b = Mat::Identity();
  b(0, 0) = b(1, 1) = std::cosh(q);
  b(0, 1) = b(1, 0) = std::sinh(q);
  return b;
}

NormalFormResiduals normal_form_residuals(const Mat& A, const Mat& B, const Mat& C_normal, bool swapped_shape) {
  NormalFormResiduals r;
  r.lorentz_a = (A.transpose() * eta() * A - eta()).norm();
  r.lorentz_b = (B.transpose() * eta() * B - eta()).norm();
  r.det_a = std::abs(A.determinant() - 1);
  r.det_b = std::abs(B.determinant() - 1);
  r.orthochronous = A(0, 0) > 0 && B(0, 0) > 0;
  const int pivot_row = swapped_shape ? 1 : 0;
  const int zero_row = swapped_shape ? 0 : 1;
  r.shape = std::max({std::abs(C_normal(zero_row, 0)), std::abs(C_normal(2, 0)), std::abs(C_normal(2, 1))});
  r.diagonal_product = C_normal(pivot_row, 0) * C_normal(zero_row, 1) * C_normal(2, 2);
  return r;
}

NormalFormResult cnormal_reduce(const Mat& C, double det_tol) {
  if (!C.allFinite() || std::abs(C.determinant()) <= det_tol) {
    throw Error(ErrorCode::NearSingular, "matrix is not invertible within tolerance");
  }
  NormalFormResult out;
  const Vec c = C.col(0);
  const double len = minkowski(c, c);
  if (std::abs(len) <= 1e-12 * c.squaredNorm()) {
    null_case(C, out);
  } else if (len < 0) {
    timelike(C, std::sqrt(-len), out);
  } else {
    spacelike(C, std::sqrt(len), out);
  }
  out.C_normal = out.A.transpose() * C * out.B;
  out.residuals = normal_form_residuals(out.A, out.B, out.C_normal, out.swapped_shape);
  return out;
}

}  // namespace nk6
