#pragma once

#include <random>

#include "nk6/form.hpp"
#include "nk6/lie_algebra.hpp"
#include "nk6/linalg.hpp"

// Seeded random data for property checks.
namespace nk6::sampling {

inline Scalar random_rational(std::mt19937_64& rng, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, range);
  return Scalar::fraction(num(rng), den(rng));
}

inline Scalar random_scalar(std::mt19937_64& rng, int range = 5) {
  return random_rational(rng, range) + random_rational(rng, range) * Scalar::root(3);
}

inline FormS random_form(std::mt19937_64& rng, int n, int k, bool rational = true) {
  FormS f(n, k);
  std::bernoulli_distribution keep(0.6);
  for (Mask m : masks_of_degree(n, k)) {
    if (keep(rng)) f.add(m, rational ? random_rational(rng) : random_scalar(rng));
  }
  return f;
}

inline MatrixS random_matrix(std::mt19937_64& rng, int n, int range = 3) {
  MatrixS m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = random_rational(rng, range);
  }
  return m;
}

inline VectorS random_vector(std::mt19937_64& rng, int n) {
  VectorS v(n);
  for (int i = 0; i < n; ++i) v(i) = random_rational(rng);
  return v;
}

// Rational rotation or boost acting on coordinates (a, b) of an n-dimensional space.
inline MatrixS plane_map(int n, int a, int b, const Scalar& c, const Scalar& s, bool boost) {
  MatrixS m = identity<Scalar>(n);
  m(a, a) = c;
  m(b, b) = c;
  m(a, b) = boost ? s : -s;
  m(b, a) = s;
  return m;
}

// Random inner automorphism of so3 + so3 (compact = true) or so12 + so12 with tau = 1,
// built from Pythagorean rotations and boosts, optionally followed by the factor swap.
inline MatrixS random_automorphism(std::mt19937_64& rng, bool compact, bool allow_swap = true) {
  static const int triples[3][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}};
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> steps(1, 3);
  std::bernoulli_distribution coin(0.5);
  MatrixS l = identity<Scalar>(6);
  for (int offset : {0, 3}) {
    const int count = steps(rng);
    for (int step = 0; step < count; ++step) {
      const int* t = triples[pick(rng)];
      const Scalar sign(coin(rng) ? 1 : -1);
      const int plane = pick(rng);
      const int a = plane == 0 ? 1 : 0;
      const int b = plane == 2 ? 1 : 2;
      const bool boost = !compact && a == 0;
      if (boost) {
        l = l * plane_map(6, offset + a, offset + b, Scalar::fraction(t[2], t[0]), Scalar::fraction(t[1], t[0]) * sign, true);
      } else {
        l = l * plane_map(6, offset + a, offset + b, Scalar::fraction(t[0], t[2]), Scalar::fraction(t[1], t[2]) * sign, false);
      }
    }
  }
  if (allow_swap && coin(rng)) {
    MatrixS swap = zeros<Scalar>(6, 6);
    for (int i = 0; i < 3; ++i) {
      swap(i, i + 3) = Scalar(1);
      swap(i + 3, i) = Scalar(1);
    }
    l = l * swap;
  }
  return l;
}

// d(L^* a) = L^* d a on all basis 1-forms.
inline bool commutes_with_d(const LieAlgebra& g, const MatrixS& l) {
  const int n = g.dim();
  for (int i = 0; i < n; ++i) {
    FormS a = FormS::basis(n, {i + 1});
    if (!(ce_differential(g, pullback(l, a)) == pullback(l, ce_differential(g, a)))) return false;
  }
  return true;
}

inline MatrixS random_positive_matrix(std::mt19937_64& rng, int n = 6) {
  for (;;) {
    MatrixS l = random_matrix(rng, n);
    if (determinant(l).sign() > 0) return l;
  }
}

// eps = -1: e123 + e(156 + 426 + 453) normal form; eps = +1: e123 + e456.
inline FormS normal_three_form(int eps) {
  if (eps > 0) return FormS::basis(6, {1, 2, 3}) + FormS::basis(6, {4, 5, 6});
  return FormS::basis(6, {1, 2, 3}) - FormS::basis(6, {1, 5, 6}) - FormS::basis(6, {4, 2, 6}) - FormS::basis(6, {4, 5, 3});
}

inline FormS normal_two_form() {
  return FormS::basis(6, {1, 4}) + FormS::basis(6, {2, 5}) + FormS::basis(6, {3, 6});
}

}  // namespace nk6::sampling
