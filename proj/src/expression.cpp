#include "nk6/expression.hpp"

#include <algorithm>
#include <cctype>

#include "nk6/error.hpp"

namespace nk6 {

namespace {

bool is_monomial(const Polynomial& p) { return p.terms().size() == 1; }

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring, const ConstantMap& constants)
      : text_(text), ring_(ring), constants_(constants) {}

  MonomialFraction run() {
    MonomialFraction r = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MonomialFraction constant(const Rational& c) const { return {Polynomial(ring_, c), Polynomial(ring_, Rational(1))}; }

  // Denominators are kept as monic monomials.
  static const Exponents& exponents(const Polynomial& monic) { return monic.terms().begin()->first; }

  MonomialFraction add(const MonomialFraction& a, const MonomialFraction& b, bool subtract) const {
    if (a.denominator == b.denominator) {
      return {subtract ? a.numerator - b.numerator : a.numerator + b.numerator, a.denominator};
    }
    const Exponents& ea = exponents(a.denominator);
    const Exponents& eb = exponents(b.denominator);
    Exponents lcm{}, fa{}, fb{};
    for (std::size_t i = 0; i < lcm.size(); ++i) {
      lcm[i] = std::max(ea[i], eb[i]);
      fa[i] = static_cast<std::uint8_t>(lcm[i] - ea[i]);
      fb[i] = static_cast<std::uint8_t>(lcm[i] - eb[i]);
    }
    Polynomial an = a.numerator * Polynomial::monomial(ring_, fa, Rational(1));
    Polynomial bn = b.numerator * Polynomial::monomial(ring_, fb, Rational(1));
    return {subtract ? an - bn : an + bn, Polynomial::monomial(ring_, lcm, Rational(1))};
  }

  MonomialFraction expr() {
    skip_space();
    MonomialFraction r = term();
    for (;;) {
      if (accept('+')) {
        r = add(r, term(), false);
      } else if (accept('-')) {
        r = add(r, term(), true);
      } else {
        return r;
      }
    }
  }

  MonomialFraction term() {
    MonomialFraction r = unary();
    for (;;) {
      if (accept('*')) {
        MonomialFraction f = unary();
        r = {r.numerator * f.numerator, r.denominator * f.denominator};
      } else if (accept('/')) {
        MonomialFraction f = unary();
        if (!is_monomial(f.numerator)) fail("division by a non-monomial");
        const auto& [e, c] = *f.numerator.terms().begin();
        r = {r.numerator * f.denominator * Rational(1 / c), r.denominator * Polynomial::monomial(ring_, e, Rational(1))};
      } else {
        return r;
      }
    }
  }

  MonomialFraction unary() {
    if (accept('-')) {
      MonomialFraction r = unary();
      return {-r.numerator, r.denominator};
    }
    if (accept('+')) return unary();
    return power();
  }

  MonomialFraction power() {
    MonomialFraction base = atom();
    if (!accept('^')) return base;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an exponent");
    unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    return {pow(base.numerator, e), pow(base.denominator, e)};
  }

  MonomialFraction atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(' || c == '{') {
      ++pos_;
      MonomialFraction r = expr();
      if (!accept(c == '(' ? ')' : '}')) fail("unbalanced bracket");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant(Rational(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (auto it = constants_.find(name); it != constants_.end()) return constant(it->second);
      if (ring_ && ring_->index_of(name) >= 0) {
        return {Polynomial::variable(ring_, name), Polynomial(ring_, Rational(1))};
      }
      pos_ = start;
      fail("unknown name '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const RingPtr& ring_;
  const ConstantMap& constants_;
};

}  // namespace

MonomialFraction parse_fraction(std::string_view text, const RingPtr& ring, const ConstantMap& constants) {
  return Parser(text, ring, constants).run();
}

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, const ConstantMap& constants) {
  MonomialFraction r = parse_fraction(text, ring, constants);
  if (!r.denominator.is_constant()) throw Error(ErrorCode::SyntaxError, "'" + std::string(text) + "' is not a polynomial");
  return r.numerator;
}

}  // namespace nk6
