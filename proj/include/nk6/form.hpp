#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "nk6/eigen_support.hpp"
#include "nk6/error.hpp"

namespace nk6 {

// Bit i set <=> index i (0-based) present in a strictly increasing index tuple.
using Mask = std::uint32_t;

inline constexpr int kMaxFormDim = 16;

inline int mask_degree(Mask m) { return std::popcount(m); }
inline Mask full_mask(int n) { return n == 32 ? ~Mask(0) : ((Mask(1) << n) - 1); }

// Sign of e^I ^ e^J against e^{I u J}; zero when I and J overlap.
inline int wedge_sign(Mask i, Mask j) {
  if (i & j) return 0;
  int swaps = 0;
  for (Mask rest = j; rest; rest &= rest - 1) {
    int b = std::countr_zero(rest);
    swaps += std::popcount(i >> (b + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

// 0-based indices of a mask in increasing order.
std::vector<int> mask_indices(Mask m);
// "123" style label, 1-based digits (letters above 9).
std::string mask_label(Mask m);
// Mask for 1-based digit string; repeated digits give 0 and sign 0.
std::pair<Mask, int> mask_from_indices(const std::vector<int>& one_based);
// All masks of the given degree in dimension n, increasing order.
std::vector<Mask> masks_of_degree(int n, int k);

template <class R>
class Form {
 public:
  using Term = std::pair<Mask, R>;

  Form() = default;
  Form(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 0 || dim > kMaxFormDim || degree < 0 || degree > dim) {
      throw Error(ErrorCode::DimensionMismatch, "form degree/dimension out of range");
    }
  }

  // c * e^{i1...ik} for 1-based indices in any order.
  static Form basis(int dim, std::initializer_list<int> one_based, R c = R(1)) {
    return basis(dim, std::vector<int>(one_based), std::move(c));
  }
  static Form basis(int dim, const std::vector<int>& one_based, R c = R(1)) {
    Form f(dim, static_cast<int>(one_based.size()));
    for (int i : one_based) {
      if (i < 1 || i > dim) throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
    }
    auto [m, s] = mask_from_indices(one_based);
    if (s == 0) return f;
    if (s < 0) c = -c;
    f.add(m, c);
    return f;
  }
  static Form scalar(int dim, R c) {
    Form f(dim, 0);
    f.add(0, std::move(c));
    return f;
  }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  R coefficient(Mask m) const {
    auto it = find(m);
    return it != terms_.end() && it->first == m ? it->second : R(0);
  }
  // Coefficient on e^{i1...ik}, 1-based, any order.
  R coefficient(std::initializer_list<int> one_based) const {
    auto [m, s] = mask_from_indices(std::vector<int>(one_based));
    if (s == 0) return R(0);
    R c = coefficient(m);
    return s < 0 ? R(-c) : c;
  }
  // Coefficient of a top-degree form relative to e^{1...n}.
  R top() const {
    if (degree_ != dim_) throw Error(ErrorCode::DimensionMismatch, "not a top-degree form");
    return coefficient(full_mask(dim_));
  }

  void add(Mask m, const R& c) {
    if (static_cast<int>(std::popcount(m)) != degree_ || (m & ~full_mask(dim_))) {
      throw Error(ErrorCode::DimensionMismatch, "index tuple does not fit the form");
    }
    if (nk6::is_zero(c)) return;
    auto it = find(m);
    if (it != terms_.end() && it->first == m) {
      it->second += c;
      if (nk6::is_zero(it->second)) terms_.erase(it);
    } else {
      terms_.insert(it, Term(m, c));
    }
  }

  Form operator-() const {
    Form r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  Form& operator+=(const Form& o) { return merge(o, 1); }
  Form& operator-=(const Form& o) { return merge(o, -1); }
  Form& operator*=(const R& c) {
    if (nk6::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& [m, v] : terms_) {
      R p = v * c;
      if (!nk6::is_zero(p)) out.emplace_back(m, std::move(p));
    }
    terms_ = std::move(out);
    return *this;
  }

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const R& c) { return a *= c; }
  friend Form operator*(const R& c, Form a) { return a *= c; }

  friend bool operator==(const Form& a, const Form& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

  // Coefficientwise image under f; zero images are dropped.
  template <class F>
  auto map(F f) const -> Form<std::decay_t<decltype(f(std::declval<const R&>()))>> {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    Form<S> r(dim_, degree_);
    for (const auto& [m, v] : terms_) r.add(m, f(v));
    return r;
  }

 private:
  typename std::vector<Term>::iterator find(Mask m) {
    return std::lower_bound(terms_.begin(), terms_.end(), m,
                            [](const Term& t, Mask k) { return t.first < k; });
  }
  typename std::vector<Term>::const_iterator find(Mask m) const {
    return std::lower_bound(terms_.begin(), terms_.end(), m,
                            [](const Term& t, Mask k) { return t.first < k; });
  }

  Form& merge(const Form& o, int sign) {
    if (o.dim_ != dim_ || o.degree_ != degree_) {
      throw Error(ErrorCode::DimensionMismatch, "adding forms of different shape");
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->first < a->first) {
        out.emplace_back(b->first, sign > 0 ? b->second : R(-b->second));
        ++b;
      } else {
        R s = sign > 0 ? R(a->second + b->second) : R(a->second - b->second);
        if (!nk6::is_zero(s)) out.emplace_back(a->first, std::move(s));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  int dim_ = 0;
  int degree_ = 0;
  std::vector<Term> terms_;
};

using FormS = Form<Scalar>;
using FormP = Form<Polynomial>;
using FormD = Form<double>;

template <class R>
Form<R> wedge(const Form<R>& a, const Form<R>& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "wedge of forms on different spaces");
  if (a.degree() + b.degree() > a.dim()) throw Error(ErrorCode::DimensionMismatch, "wedge degree exceeds dimension");
  Form<R> r(a.dim(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      R p = ca * cb;
      r.add(ma | mb, s > 0 ? p : R(-p));
    }
  }
  return r;
}

// e_i contracted into a, i 0-based.
template <class R>
Form<R> contract_basis(int i, const Form<R>& a) {
  if (a.degree() == 0) throw Error(ErrorCode::InvalidArgument, "contraction into a 0-form");
  Form<R> r(a.dim(), a.degree() - 1);
  Mask bit = Mask(1) << i;
  for (const auto& [m, c] : a.terms()) {
    if (!(m & bit)) continue;
    int pos = std::popcount(m & (bit - 1));
    r.add(m & ~bit, (pos & 1) ? R(-c) : c);
  }
  return r;
}

template <class R>
Form<R> contract(const Vector<R>& v, const Form<R>& a) {
  if (v.size() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "vector/form dimension mismatch");
  if (a.degree() == 0) throw Error(ErrorCode::InvalidArgument, "contraction into a 0-form");
  Form<R> r(a.dim(), a.degree() - 1);
  for (int i = 0; i < a.dim(); ++i) {
    if (is_zero(v(i))) continue;
    r += contract_basis(i, a) * v(i);
  }
  return r;
}

// Determinant by cofactor expansion; sizes here never exceed the form degree.
template <class R>
R small_determinant(const Matrix<R>& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return R(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return R(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
  if (n == 3) {
    return R(m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)));
  }
  R total(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (is_zero(m(0, j))) continue;
    Matrix<R> minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
        if (c != j) minor(r - 1, cc++) = m(r, c);
      }
    }
    R t = m(0, j) * small_determinant(minor);
    if (j & 1) {
      total -= t;
    } else {
      total += t;
    }
  }
  return total;
}

// a(v_1, ..., v_k) with e^{12}(e_1, e_2) = 1.
template <class R>
R evaluate(const Form<R>& a, const std::vector<Vector<R>>& vs) {
  const int k = a.degree();
  if (static_cast<int>(vs.size()) != k) throw Error(ErrorCode::DimensionMismatch, "wrong number of arguments");
  R total(0);
  Matrix<R> m(k, k);
  for (const auto& [mask, c] : a.terms()) {
    auto idx = mask_indices(mask);
    for (int r = 0; r < k; ++r) {
      for (int s = 0; s < k; ++s) m(r, s) = vs[s](idx[r]);
    }
    total += c * small_determinant(m);
  }
  return total;
}

// (L^* a)(v_1, ..., v_k) = a(L v_1, ..., L v_k).
template <class R>
Form<R> pullback(const Matrix<R>& l, const Form<R>& a) {
  const int n = a.dim();
  const int k = a.degree();
  if (l.rows() != n || l.cols() != n) throw Error(ErrorCode::DimensionMismatch, "pullback by a non-square map");
  Form<R> r(n, k);
  Matrix<R> m(k, k);
  for (Mask target : masks_of_degree(n, k)) {
    auto cols = mask_indices(target);
    R total(0);
    for (const auto& [mask, c] : a.terms()) {
      auto rows = mask_indices(mask);
      for (int p = 0; p < k; ++p) {
        for (int q = 0; q < k; ++q) m(p, q) = l(rows[p], cols[q]);
      }
      total += c * small_determinant(m);
    }
    r.add(target, total);
  }
  return r;
}

// The multilinear map (v_1, ..., v_k) -> a(M v_1, v_2, ..., v_k) read off on
// increasing basis tuples. It is alternating only for suitably compatible M;
// see first_slot_alternates.
template <class R>
Form<R> substitute_first_slot(const Matrix<R>& mat, const Form<R>& a) {
  const int n = a.dim();
  const int k = a.degree();
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "first slot of a 0-form");
  Form<R> r(n, k);
  for (Mask target : masks_of_degree(n, k)) {
    auto idx = mask_indices(target);
    Mask rest = target & ~(Mask(1) << idx[0]);
    R total(0);
    for (int s = 0; s < n; ++s) {
      if (is_zero(mat(s, idx[0]))) continue;
      Mask bit = Mask(1) << s;
      if (rest & bit) continue;
      int sign = wedge_sign(bit, rest);
      R c = a.coefficient(rest | bit);
      if (is_zero(c)) continue;
      R t = mat(s, idx[0]) * c;
      if (sign > 0) {
        total += t;
      } else {
        total -= t;
      }
    }
    r.add(target, total);
  }
  return r;
}

// True when (v_1, v_2, ...) -> a(M v_1, v_2, ...) is antisymmetric in its first two slots.
template <class R>
bool first_slot_alternates(const Matrix<R>& mat, const Form<R>& a) {
  const int n = a.dim();
  const int k = a.degree();
  if (k < 2) return true;
  std::vector<Vector<R>> args(k);
  for (Mask rest : masks_of_degree(n, k - 2)) {
    auto idx = mask_indices(rest);
    for (int p = 0; p < k - 2; ++p) args[p + 2] = unit_vector<R>(n, idx[p]);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        args[0] = mat.col(i);
        args[1] = unit_vector<R>(n, j);
        R x = evaluate(a, args);
        args[0] = mat.col(j);
        args[1] = unit_vector<R>(n, i);
        R y = evaluate(a, args);
        if (!is_zero(R(x + y))) return false;
      }
    }
  }
  return true;
}

// The vector u with u contracted into e^{1...n} equal to eta (deg n-1).
template <class R>
Vector<R> vector_from_five_form(const Form<R>& eta) {
  const int n = eta.dim();
  if (eta.degree() != n - 1) throw Error(ErrorCode::DimensionMismatch, "expected a form of degree n-1");
  Vector<R> u = Vector<R>::Constant(n, R(0));
  for (const auto& [m, c] : eta.terms()) {
    int i = std::countr_zero(~m & full_mask(n));
    u(i) = (i & 1) ? R(-c) : c;
  }
  return u;
}

// Terms as coeff*indices; compound coefficients are parenthesized.
template <class R>
std::string to_string(const Form<R>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    if constexpr (std::is_same_v<R, double>) {
      out += std::to_string(c);
    } else {
      std::string s = to_string(c);
      bool compound = s.find_first_of("+ ", 1) != std::string::npos || s.find('-', 1) != std::string::npos;
      out += compound ? "(" + s + ")" : s;
    }
    out += "*" + (m == 0 ? std::string("1") : mask_label(m));
  }
  return out;
}

}  // namespace nk6
