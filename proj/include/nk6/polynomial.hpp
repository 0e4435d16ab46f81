#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nk6/scalar.hpp"

namespace nk6 {

// Ordered variable names of a polynomial ring over Q.
class PolyRing {
 public:
  static constexpr int kMaxVariables = 16;

  explicit PolyRing(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  int index_of(std::string_view name) const;  // -1 when absent
  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> names);

// alpha, beta, gamma, x, y, z, k
RingPtr family_ring();

using Exponents = std::array<std::uint8_t, PolyRing::kMaxVariables>;

// Graded lexicographic order: total degree first, then the first variable dominates.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

int total_degree(const Exponents& e);

class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  // Constants carry no ring and adopt the ring of the other operand.
  Polynomial() = default;
  Polynomial(int c);
  Polynomial(const Rational& c);
  Polynomial(RingPtr ring, const Rational& c);

  static Polynomial variable(const RingPtr& ring, std::string_view name);
  static Polynomial variable(const RingPtr& ring, int index);
  static Polynomial monomial(const RingPtr& ring, const Exponents& e, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int total_degree() const;
  int degree_in(int var) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // values[i] is assigned to variable i of the ring.
  Scalar evaluate(const std::vector<Scalar>& values) const;
  Polynomial substitute(int var, const Polynomial& value) const;
  Polynomial substitute(std::string_view var, const Polynomial& value) const;
  // Coefficient of var^power, as a polynomial in the remaining variables.
  Polynomial coefficient(int var, int power) const;

 private:
  static RingPtr common_ring(const RingPtr& a, const RingPtr& b);
  void add_term(const Exponents& e, const Rational& c);

  RingPtr ring_;
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, unsigned e);

// Terms in decreasing graded-lex order, e.g. "2*alpha^4 - alpha^2*beta + 1".
std::string to_string(const Polynomial& p);

// c with p == c*q, if one exists (q nonzero).
std::optional<Rational> proportionality(const Polynomial& p, const Polynomial& q);

bool is_zero(const Polynomial& p);

}  // namespace nk6
