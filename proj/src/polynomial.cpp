#include "nk6/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "nk6/error.hpp"

namespace nk6 {

PolyRing::PolyRing(std::vector<std::string> names) : names_(std::move(names)) {
  if (static_cast<int>(names_.size()) > kMaxVariables) {
    throw Error(ErrorCode::InvalidArgument, "too many polynomial variables");
  }
}

int PolyRing::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i) {
    if (names_[i] == name) return i;
  }
  return -1;
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const PolyRing>(std::move(names));
}

RingPtr family_ring() {
  static const RingPtr ring = make_ring({"alpha", "beta", "gamma", "x", "y", "z", "k"});
  return ring;
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  int da = total_degree(a);
  int db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

Polynomial::Polynomial(int c) : Polynomial(Rational(c)) {}

Polynomial::Polynomial(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Exponents{}, c);
}

Polynomial::Polynomial(RingPtr ring, const Rational& c) : Polynomial(c) { ring_ = std::move(ring); }

Polynomial Polynomial::variable(const RingPtr& ring, int index) {
  if (index < 0 || index >= ring->size()) {
    throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  }
  Exponents e{};
  e[index] = 1;
  return monomial(ring, e, Rational(1));
}

Polynomial Polynomial::variable(const RingPtr& ring, std::string_view name) {
  int i = ring->index_of(name);
  if (i < 0) throw Error(ErrorCode::UnknownName, "no variable '" + std::string(name) + "'");
  return variable(ring, i);
}

Polynomial Polynomial::monomial(const RingPtr& ring, const Exponents& e, const Rational& c) {
  Polynomial p;
  p.ring_ = ring;
  if (sgn(c) != 0) p.terms_.emplace(e, c);
  return p;
}

RingPtr Polynomial::common_ring(const RingPtr& a, const RingPtr& b) {
  if (!a) return b;
  if (!b || a == b || *a == *b) return a;
  throw Error(ErrorCode::InvalidArgument, "polynomials from different rings");
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : nk6::total_degree(terms_.rbegin()->first);
}

int Polynomial::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  } else if (sgn(c) == 0) {
    terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  ring_ = common_ring(ring_, o.ring_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  ring_ = common_ring(ring_, o.ring_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  r.ring_ = Polynomial::common_ring(a.ring_, b.ring_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (int i = 0; i < PolyRing::kMaxVariables; ++i) {
        int s = ea[i] + eb[i];
        if (s > 255) throw Error(ErrorCode::InvalidArgument, "exponent overflow");
        e[i] = static_cast<std::uint8_t>(s);
      }
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ && b.ring_ && a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
  return a.terms_ == b.terms_;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& values) const {
  int n = ring_ ? ring_->size() : 0;
  if (static_cast<int>(values.size()) < n) {
    throw Error(ErrorCode::DimensionMismatch, "too few values for polynomial evaluation");
  }
  Scalar total;
  for (const auto& [e, c] : terms_) {
    Scalar t(c);
    for (int i = 0; i < n; ++i) {
      if (e[i]) t *= pow(values[i], e[i]);
    }
    total += t;
  }
  return total;
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const {
  Polynomial r;
  r.ring_ = common_ring(ring_, value.ring_);
  std::vector<Polynomial> powers{Polynomial(r.ring_, Rational(1))};
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(powers.size()) <= e[var]) powers.push_back(powers.back() * value);
    Exponents rest = e;
    rest[var] = 0;
    r += monomial(r.ring_, rest, c) * powers[e[var]];
  }
  return r;
}

Polynomial Polynomial::substitute(std::string_view var, const Polynomial& value) const {
  int i = ring_ ? ring_->index_of(var) : -1;
  if (i < 0) throw Error(ErrorCode::UnknownName, "no variable '" + std::string(var) + "'");
  return substitute(i, value);
}

Polynomial Polynomial::coefficient(int var, int power) const {
  Polynomial r;
  r.ring_ = ring_;
  for (const auto& [e, c] : terms_) {
    if (e[var] != power) continue;
    Exponents rest = e;
    rest[var] = 0;
    r.add_term(rest, c);
  }
  return r;
}

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial r(p.ring(), Rational(1));
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int i = 0; i < PolyRing::kMaxVariables; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += p.ring() ? p.ring()->name(i) : "v" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

std::optional<Rational> proportionality(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) return std::nullopt;
  if (p.is_zero()) return Rational(0);
  if (p.terms().size() != q.terms().size()) return std::nullopt;
  const auto& [e0, c0] = *q.terms().begin();
  auto it = p.terms().find(e0);
  if (it == p.terms().end()) return std::nullopt;
  Rational ratio = it->second / c0;
  if (p == q * ratio) return ratio;
  return std::nullopt;
}

bool is_zero(const Polynomial& p) { return p.is_zero(); }

}  // namespace nk6
