#pragma once

#include <Eigen/Core>

#include "nk6/error.hpp"
#include "nk6/polynomial.hpp"
#include "nk6/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<nk6::Scalar> : GenericNumTraits<nk6::Scalar> {
  using Real = nk6::Scalar;
  using NonInteger = nk6::Scalar;
  using Literal = nk6::Scalar;
  using Nested = nk6::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32,
  };
  static inline nk6::Scalar epsilon() { return nk6::Scalar(0); }
  static inline nk6::Scalar dummy_precision() { return nk6::Scalar(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<nk6::Polynomial> : GenericNumTraits<nk6::Polynomial> {
  using Real = nk6::Polynomial;
  using NonInteger = nk6::Polynomial;
  using Literal = nk6::Polynomial;
  using Nested = nk6::Polynomial;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 256,
  };
  static inline nk6::Polynomial epsilon() { return nk6::Polynomial(0); }
  static inline nk6::Polynomial dummy_precision() { return nk6::Polynomial(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace nk6 {

template <class R>
using Matrix = Eigen::Matrix<R, Eigen::Dynamic, Eigen::Dynamic>;
template <class R>
using Vector = Eigen::Matrix<R, Eigen::Dynamic, 1>;

using MatrixS = Matrix<Scalar>;
using VectorS = Vector<Scalar>;
using MatrixP = Matrix<Polynomial>;
using MatrixD = Eigen::MatrixXd;
using VectorD = Eigen::VectorXd;

inline bool is_zero(double v) { return v == 0.0; }

// Coefficient conversions between the supported rings.
template <class R>
R from_rational(const Rational& q) {
  if constexpr (std::is_same_v<R, double>) {
    return q.get_d();
  } else {
    return R(q);
  }
}

template <class R>
R from_scalar(const Scalar& s) {
  if constexpr (std::is_same_v<R, double>) {
    return s.to_double();
  } else if constexpr (std::is_same_v<R, Scalar>) {
    return s;
  } else {
    if (!s.is_rational()) {
      throw Error(ErrorCode::FieldMismatch, "irrational constant in a polynomial over Q");
    }
    return R(s.rational_part());
  }
}

template <class R>
bool is_zero_matrix(const Matrix<R>& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (!is_zero(m.data()[i])) return false;
  }
  return true;
}

template <class R>
Matrix<R> identity(int n) {
  Matrix<R> m = Matrix<R>::Constant(n, n, R(0));
  for (int i = 0; i < n; ++i) m(i, i) = R(1);
  return m;
}

template <class R>
Matrix<R> zeros(int rows, int cols) {
  return Matrix<R>::Constant(rows, cols, R(0));
}

template <class R>
Vector<R> unit_vector(int n, int i) {
  Vector<R> v = Vector<R>::Constant(n, R(0));
  v(i) = R(1);
  return v;
}

MatrixD to_double(const MatrixS& m);
VectorD to_double(const VectorS& v);

}  // namespace nk6
