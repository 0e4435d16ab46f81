#include "nk6/form.hpp"

namespace nk6 {

std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  out.reserve(std::popcount(m));
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string mask_label(Mask m) {
  std::string s;
  for (int i : mask_indices(m)) s += static_cast<char>(i < 9 ? '1' + i : 'a' + (i - 9));
  return s;
}

std::pair<Mask, int> mask_from_indices(const std::vector<int>& one_based) {
  Mask m = 0;
  int sign = 1;
  for (int i : one_based) {
    Mask bit = Mask(1) << (i - 1);
    if (m & bit) return {0, 0};
    // Moving e^i past the larger indices already placed.
    if (std::popcount(m >> i) & 1) sign = -sign;
    m |= bit;
  }
  return {m, sign};
}

std::vector<Mask> masks_of_degree(int n, int k) {
  std::vector<Mask> out;
  for (Mask m = 0; m <= full_mask(n); ++m) {
    if (std::popcount(m) == k) out.push_back(m);
    if (m == full_mask(n)) break;
  }
  return out;
}

MatrixD to_double(const MatrixS& m) {
  MatrixD r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_double();
  }
  return r;
}

VectorD to_double(const VectorS& v) {
  VectorD r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = v(i).to_double();
  return r;
}

}  // namespace nk6
