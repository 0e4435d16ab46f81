#include "nk6/linalg.hpp"

#include <utility>

#include "nk6/error.hpp"

namespace nk6 {

std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.negative) + "," + std::to_string(s.positive) + ")";
}

namespace {

// Row echelon form in place; returns the pivot columns.
std::vector<int> echelon(MatrixS& m, int* swaps = nullptr) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      m.row(p).swap(m.row(r));
      if (swaps) ++*swaps;
    }
    Scalar inv = m(r, c).inverse();
    for (int i = r + 1; i < rows; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) * inv;
      for (int j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Scalar determinant(const MatrixS& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  MatrixS a = m;
  int swaps = 0;
  auto pivots = echelon(a, &swaps);
  if (static_cast<Eigen::Index>(pivots.size()) < a.rows()) return Scalar(0);
  Scalar d(swaps % 2 ? -1 : 1);
  for (Eigen::Index i = 0; i < a.rows(); ++i) d *= a(i, i);
  return d;
}

int rank(const MatrixS& m) {
  MatrixS a = m;
  return static_cast<int>(echelon(a).size());
}

MatrixS inverse(const MatrixS& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  MatrixS aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = identity<Scalar>(n);
  auto pivots = echelon(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] >= n) {
    throw Error(ErrorCode::InvalidArgument, "singular matrix");
  }
  for (int r = n - 1; r >= 0; --r) {
    Scalar inv = aug(r, r).inverse();
    for (int j = 0; j < 2 * n; ++j) aug(r, j) *= inv;
    for (int i = 0; i < r; ++i) {
      if (aug(i, r).is_zero()) continue;
      Scalar f = aug(i, r);
      for (int j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(r, j);
    }
  }
  return aug.rightCols(n);
}

std::optional<VectorS> solve(const MatrixS& a, const VectorS& b) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  MatrixS aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  auto pivots = echelon(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  VectorS x = VectorS::Constant(cols, Scalar(0));
  for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
    int c = pivots[r];
    Scalar s = aug(r, cols);
    for (int j = c + 1; j < cols; ++j) s -= aug(r, j) * x(j);
    x(c) = s / aug(r, c);
  }
  return x;
}

bool is_symmetric(const MatrixS& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      if (!(m(i, j) == m(j, i))) return false;
    }
  }
  return true;
}

Signature signature(const MatrixS& symmetric) {
  if (!is_symmetric(symmetric)) throw Error(ErrorCode::InvalidArgument, "signature of a non-symmetric matrix");
  MatrixS a = symmetric;
  const int n = static_cast<int>(a.rows());
  Signature sig;
  // Symmetric elimination; a zero diagonal with a nonzero off-diagonal entry
  // is repaired by adding the partner row/column first.
  for (int k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      int p = k + 1;
      while (p < n && a(p, p).is_zero()) ++p;
      if (p < n) {
        a.row(k).swap(a.row(p));
        a.col(k).swap(a.col(p));
      } else {
        int q = k + 1;
        while (q < n && a(k, q).is_zero()) ++q;
        if (q == n) {
          ++sig.zero;
          continue;
        }
        a.row(k) += a.row(q);
        a.col(k) += a.col(q);
      }
    }
    const Scalar pivot = a(k, k);
    (pivot.sign() > 0 ? sig.positive : sig.negative)++;
    Scalar inv = pivot.inverse();
    for (int i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      Scalar f = a(i, k) * inv;
      for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
    for (int i = k + 1; i < n; ++i) a(i, k) = a(k, i) = Scalar(0);
  }
  return sig;
}

}  // namespace nk6
