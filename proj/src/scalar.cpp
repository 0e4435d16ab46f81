#include "nk6/scalar.hpp"

#include <cctype>
#include <cmath>
#include <optional>
#include <ostream>

#include "nk6/error.hpp"

namespace nk6 {

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rational(0);
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  Rational r(sqrt(num), sqrt(den));
  r.canonicalize();
  return r;
}

bool square_free(int d) {
  if (d < 2) return false;
  for (int p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(const Rational& a, const Rational& b, int d) : a_(a), b_(b), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) != 0 && !square_free(d_)) {
    throw Error(ErrorCode::InvalidArgument, "field tag must be a square-free integer >= 2");
  }
  normalize();
}

Scalar Scalar::fraction(long p, long q) {
  if (q == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return Scalar(r);
}

Scalar Scalar::root(int d) { return Scalar(Rational(0), Rational(1), d); }

void Scalar::normalize() {
  if (sgn(b_) == 0) d_ = 0;
}

int Scalar::common_field(int d1, int d2) {
  if (d1 == 0) return d2;
  if (d2 == 0 || d1 == d2) return d1;
  throw Error(ErrorCode::FieldMismatch,
              "sqrt(" + std::to_string(d1) + ") and sqrt(" + std::to_string(d2) + ") mixed");
}

int Scalar::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with d*b^2.
  int c = cmp(a_ * a_, d_ * b_ * b_);
  return c > 0 ? sa : (c < 0 ? sb : 0);
}

double Scalar::to_double() const {
  if (d_ == 0) return a_.get_d();
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = common_field(d_, o.d_);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = common_field(d_, o.d_);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  int d = common_field(d_, o.d_);
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rational a = a_ * o.a_ + d * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Rational Scalar::norm() const { return a_ * a_ - d_ * b_ * b_; }

Scalar Scalar::conjugate() const {
  Scalar r = *this;
  r.b_ = -r.b_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (sgn(b_) == 0) return Scalar(Rational(1) / a_);
  Rational n = norm();
  return Scalar(a_ / n, -b_ / n, d_);
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

Scalar pow(const Scalar& s, unsigned e) {
  Scalar r(1);
  Scalar base = s;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

Scalar exact_sqrt(const Scalar& s, int field) {
  if (s.sign() < 0) throw Error(ErrorCode::InvalidArgument, "square root of a negative scalar");
  if (s.is_zero()) return Scalar(0);
  const Rational& x = s.rational_part();
  const Rational& y = s.radical_part();
  int d = s.field() != 0 ? s.field() : field;
  if (sgn(y) == 0) {
    if (auto r = rational_sqrt(x)) return Scalar(*r);
    if (d >= 2) {
      if (auto r = rational_sqrt(x / d)) return Scalar(Rational(0), *r, d);
    }
    throw Error(ErrorCode::NotRepresentable, "no square root of " + to_string(s) + " in the field");
  }
  // (a + b r)^2 = x + y r  =>  a^2 + d b^2 = x, 2ab = y, (a^2 - d b^2)^2 = x^2 - d y^2.
  if (auto m = rational_sqrt(x * x - d * y * y)) {
    for (const Rational& a2 : {Rational((x + *m) / 2), Rational((x - *m) / 2)}) {
      auto a = rational_sqrt(a2);
      if (!a || sgn(*a) == 0) continue;
      Scalar t(*a, y / (2 * *a), d);
      if (t * t == s) return t.sign() < 0 ? -t : t;
    }
  }
  throw Error(ErrorCode::NotRepresentable, "no square root of " + to_string(s) + " in the field");
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Scalar& s) {
  const Rational& a = s.rational_part();
  const Rational& b = s.radical_part();
  if (sgn(b) == 0) return a.get_str();
  std::string rad;
  if (b == 1) {
    rad = "r";
  } else if (b == -1) {
    rad = "-r";
  } else {
    rad = b.get_str() + "r";
  }
  if (sgn(a) == 0) return rad;
  return a.get_str() + (sgn(b) > 0 ? "+" : "") + rad;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

bool is_zero(const Scalar& s) { return s.is_zero(); }

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, int field) : text_(text), field_(field) {}

  Scalar parse() {
    skip_space();
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
    }
    Scalar total = sum();
    if (paren) {
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    }
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return total;
  }

 private:
  Scalar sum() {
    Scalar total;
    skip_space();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    total += term(sign);
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      total += term(c == '-' ? -1 : 1);
    }
    return total;
  }

  Scalar term(int sign) {
    skip_space();
    Rational coeff(sign);
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num(digits());
      mpz_class den(1);
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        den = mpz_class(digits());
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      coeff *= q;
      have_number = true;
    }
    skip_space();
    if (peek() == 'r') {
      ++pos_;
      if (field_ < 2) fail("'r' used in a rational field");
      return Scalar(Rational(0), coeff, field_);
    }
    if (!have_number) fail("expected a number or 'r'");
    return Scalar(coeff);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError,
                what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  int field_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, int field) { return ScalarParser(text, field).parse(); }

}  // namespace nk6
