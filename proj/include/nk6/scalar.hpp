#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace nk6 {

using Rational = mpq_class;

// Field tag used when a computation does not say otherwise.
inline constexpr int kDefaultField = 3;

// Element a + b*sqrt(d) of Q(sqrt d). d == 0 marks a plain rational (b == 0).
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : a_(v) {}
  Scalar(long v) : a_(v) {}
  Scalar(const Rational& q) : a_(q) { a_.canonicalize(); }
  Scalar(const Rational& a, const Rational& b, int d);

  static Scalar fraction(long p, long q);
  // sqrt(d) itself.
  static Scalar root(int d);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  int field() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  int sign() const;
  double to_double() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  Scalar inverse() const;
  Scalar conjugate() const;  // a - b*sqrt(d)
  // Field norm a^2 - d*b^2.
  Rational norm() const;

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.d_ == y.d_ || x.d_ == 0 || y.d_ == 0);
  }
  friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Scalar& x, const Scalar& y) { return y < x; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return !(y < x); }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return !(x < y); }

 private:
  void normalize();
  static int common_field(int d1, int d2);

  Rational a_;
  Rational b_;
  int d_ = 0;
};

Scalar abs(const Scalar& s);
Scalar pow(const Scalar& s, unsigned e);

// Non-negative square root inside Q(sqrt field). A rational argument is
// interpreted in Q(sqrt field); tagged arguments use their own tag.
// Throws NotRepresentable when no root exists in the field.
Scalar exact_sqrt(const Scalar& s, int field = kDefaultField);

// Compact text form accepted by parse_scalar: "2", "-1/3", "1/18r", "2+r".
std::string to_string(const Scalar& s);
std::string to_string(const Rational& q);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Grammar: p/q, p, p/q r, p/q + p'/q' r, optionally parenthesized; r is sqrt(field).
// field == 0 rejects r. Throws SyntaxError.
Scalar parse_scalar(std::string_view text, int field = kDefaultField);

bool is_zero(const Scalar& s);

}  // namespace nk6
