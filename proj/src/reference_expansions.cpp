#include <utility>

#include "nk6/classify.hpp"
#include "nk6/expression.hpp"

namespace nk6 {

namespace {

struct Term {
  const char* coefficient;
  std::vector<int> indices;
};

FormP transcribe(int degree, const std::vector<Term>& terms, const RingPtr& ring, const ConstantMap& constants) {
  FormP f(6, degree);
  for (const auto& t : terms) {
    f += FormP::basis(6, t.indices, parse_polynomial(t.coefficient, ring, constants));
  }
  return f;
}

}  // namespace

ReferenceExpansions reference_expansions(int tau, int eps) {
  const RingPtr ring = family_ring();
  const ConstantMap constants = {{"tau", Rational(tau)}, {"eps", Rational(eps)}};
  ReferenceExpansions r;

  r.domega = transcribe(3,
                        {{"-alpha", {2, 3, 4}}, {"alpha", {1, 5, 6}}, {"-x", {2, 3, 5}}, {"x", {1, 4, 6}},
                         {"-y", {2, 3, 6}}, {"-y", {1, 4, 5}}, {"-beta", {1, 3, 5}}, {"beta", {2, 4, 6}},
                         {"-z", {1, 3, 6}}, {"-z", {2, 4, 5}}, {"tau*gamma", {1, 2, 6}}, {"-gamma", {3, 4, 5}}},
                        ring, constants);

  // K(e_column) = sum of entries along e_row.
  struct Entry {
    int column;
    int row;
    const char* value;
  };
  const std::vector<Entry> k_table = {
      {1, 1, "x^2+y^2+z^2-alpha^2+beta^2+tau*gamma^2"},
      {1, 2, "-(2*x*beta+2*y*z)"},
      {1, 3, "-2*tau*gamma*y"},
      {1, 4, "2*tau*gamma*beta"},
      {2, 1, "2*x*beta+2*y*z"},
      {2, 2, "-x^2-y^2-z^2+alpha^2-beta^2+tau*gamma^2"},
      {2, 3, "-2*tau*gamma*z"},
      {2, 4, "2*tau*gamma*x"},
      {2, 5, "-2*tau*alpha*gamma"},
      {3, 1, "2*y*gamma"},
      {3, 2, "-2*z*gamma"},
      {3, 3, "-x^2-y^2+z^2+alpha^2+beta^2-tau*gamma^2"},
      {3, 4, "2*y*beta-2*x*z"},
      {3, 5, "2*alpha*z"},
      {3, 6, "-2*alpha*beta"},
      {4, 1, "-2*beta*gamma"},
      {4, 2, "2*x*gamma"},
      {4, 3, "2*y*beta-2*x*z"},
      {4, 4, "x^2+y^2-z^2+alpha^2-beta^2-tau*gamma^2"},
      {4, 5, "-2*alpha*x"},
      {4, 6, "-2*alpha*y"},
      {5, 2, "2*alpha*gamma"},
      {5, 3, "-2*alpha*z"},
      {5, 4, "2*alpha*x"},
      {5, 5, "-x^2+y^2-z^2-alpha^2+beta^2-tau*gamma^2"},
      {5, 6, "2*beta*z-2*x*y"},
      {6, 3, "2*alpha*beta"},
      {6, 4, "2*alpha*y"},
      {6, 5, "2*beta*z-2*x*y"},
      {6, 6, "x^2-y^2+z^2-alpha^2-beta^2+tau*gamma^2"},
  };
  r.k_columns = MatrixP::Constant(6, 6, Polynomial(ring, Rational(0)));
  for (const auto& e : k_table) r.k_columns(e.row - 1, e.column - 1) = parse_polynomial(e.value, ring, constants);

  r.psi_minus_scaled = transcribe(
      3,
      {{"2*tau*alpha*beta*gamma", {1, 2, 3}},
       {"2*tau*y*alpha*gamma", {1, 2, 4}},
       {"2*tau*gamma*(x*y-beta*z)", {1, 2, 5}},
       {"-2*(x*beta+y*z)*alpha", {1, 3, 4}},
       {"tau*gamma*(-x^2+y^2-z^2+alpha^2+beta^2-tau*gamma^2)", {1, 2, 6}},
       {"-{beta*(x^2-y^2-z^2+alpha^2-beta^2+tau*gamma^2)+2*x*y*z}", {1, 3, 5}},
       {"{z*(x^2-y^2+z^2-alpha^2+beta^2+tau*gamma^2)-2*x*y*beta}", {1, 3, 6}},
       {"-{y*(-x^2-y^2+z^2+alpha^2-beta^2+tau*gamma^2)+2*x*z*beta}", {1, 4, 5}},
       {"-{x*(x^2+y^2+z^2-alpha^2-beta^2+tau*gamma^2)-2*y*z*beta}", {1, 4, 6}},
       {"-alpha*(x^2+y^2+z^2-alpha^2+beta^2+tau*gamma^2)", {1, 5, 6}},
       {"-alpha*(x^2+y^2+z^2-alpha^2+beta^2+tau*gamma^2)", {2, 3, 4}},
       {"-{x*(x^2+y^2+z^2-alpha^2-beta^2+tau*gamma^2)-2*y*z*beta}", {2, 3, 5}},
       {"{y*(-x^2-y^2+z^2+alpha^2-beta^2+tau*gamma^2)+2*x*z*beta}", {2, 3, 6}},
       {"-{z*(x^2-y^2+z^2-alpha^2+beta^2+tau*gamma^2)-2*x*y*beta}", {2, 4, 5}},
       {"-{beta*(x^2-y^2-z^2+alpha^2-beta^2+tau*gamma^2)+2*x*y*z}", {2, 4, 6}},
       {"gamma*(-x^2+y^2-z^2+alpha^2+beta^2-tau*gamma^2)", {3, 4, 5}},
       {"-2*(x*beta+y*z)*alpha", {2, 5, 6}},
       {"-2*gamma*(x*y-beta*z)", {3, 4, 6}},
       {"-2*y*alpha*gamma", {3, 5, 6}},
       {"2*alpha*beta*gamma", {4, 5, 6}}},
      ring, constants);

  r.d_psi_minus_verbatim = transcribe(
      4,
      {{"-4*tau*gamma*alpha*y", {1, 2, 5, 6}},
       {"-4*tau*gamma*(x*y-beta*z)", {1, 2, 4, 6}},
       {"4*alpha*(x*beta+y*z)", {1, 3, 5, 6}},
       {"2*tau*gamma*(-x^2+y^2-z^2+alpha^2+beta^2-tau*gamma^2)", {1, 2, 4, 5}},
       {"2*{beta*(x^2-y^2-z^2+alpha^2-beta^2+tau*gamma^2)+2*x*y*z}", {1, 3, 4, 6}},
       {"2*{z*(x^2+y^2+z^2-alpha^2+beta^2+tau*gamma^2)-2*x*y*beta}", {1, 3, 4, 5}},
       {"2*{y*(-x^2-y^2+z^2+alpha^2-beta^2+tau*gamma^2)+2*x*z*beta}", {2, 3, 4, 5}},
       {"2*{x*(x^2+y^2+z^2-alpha^2-beta^2+tau*gamma^2)-2*y*z*beta}", {2, 3, 4, 6}},
       {"2*alpha*(x^2+y^2+z^2-alpha^2+beta^2+tau*gamma^2)", {2, 3, 5, 6}}},
      ring, constants);

  // The e^1345 coefficient does not follow from the psi- display above: the
  // y^2 term has the wrong sign. The same slip, with a flipped right-hand
  // side, is in the e^1345 equation.
  r.errata = {
      {"d_psi_minus_scaled", "e1345", "2*{z*(x^2+y^2+z^2-alpha^2+beta^2+tau*gamma^2)-2*x*y*beta}",
       "2*{z*(x^2-y^2+z^2-alpha^2+beta^2+tau*gamma^2)-2*x*y*beta}"},
      {"equation", "e1345", "z*(x^2+y^2+z^2-alpha^2+beta^2+tau*gamma^2) = -2*beta*y*x",
       "z*(x^2-y^2+z^2-alpha^2+beta^2+tau*gamma^2) = 2*beta*y*x"},
  };
  r.d_psi_minus_scaled = r.d_psi_minus_verbatim;
  for (const auto& e : r.errata) {
    if (e.object != "d_psi_minus_scaled") continue;
    std::vector<int> idx;
    for (char c : e.label.substr(1)) idx.push_back(c - '0');
    r.d_psi_minus_scaled -= FormP::basis(6, idx, parse_polynomial(e.verbatim, ring, constants));
    r.d_psi_minus_scaled += FormP::basis(6, idx, parse_polynomial(e.corrected, ring, constants));
  }

  r.omega_sq = transcribe(4,
                          {{"2*(y*beta-x*z)", {1, 2, 5, 6}},
                           {"-2*alpha*z", {1, 2, 4, 6}},
                           {"-2*x*gamma", {1, 3, 5, 6}},
                           {"-2*alpha*beta", {1, 2, 4, 5}},
                           {"-2*alpha*gamma", {1, 3, 4, 6}},
                           {"-2*beta*gamma", {2, 3, 5, 6}}},
                          ring, constants);

  const std::vector<std::array<const char*, 3>> printed = {
      {"e1356", "(alpha*beta-27*eps/k*gamma)*x", "-alpha*y*z"},
      {"e1256", "(tau*gamma*alpha-27*eps/k*beta)*y", "-27*eps/k*x*z"},
      {"e1246", "(tau*beta*gamma-27*eps/k*alpha)*z", "tau*gamma*x*y"},
      {"e2356", "x^2+y^2+z^2-alpha^2+beta^2+tau*gamma^2", "54*eps/k*beta*gamma/alpha"},
      {"e1345", "z*(x^2+y^2+z^2-alpha^2+beta^2+tau*gamma^2)", "-2*beta*y*x"},
      {"e1346", "x^2-y^2-z^2+alpha^2-beta^2+tau*gamma^2", "54*eps/k*alpha*gamma/beta-2*x*y*z/beta"},
      {"e2345", "y*(-x^2-y^2+z^2+alpha^2-beta^2+tau*gamma^2)", "-2*beta*z*x"},
      {"e1245", "-x^2+y^2-z^2+alpha^2+beta^2-tau*gamma^2", "54*tau*eps/k*alpha*beta/gamma"},
      {"e2346", "x*(-x^2-y^2-z^2+alpha^2+beta^2-tau*gamma^2)", "-2*beta*y*z"},
  };
  auto clear = [&](const std::string& lhs, const std::string& rhs) {
    return parse_fraction("(" + lhs + ")-(" + rhs + ")", ring, constants);
  };
  for (const auto& [label, lhs, rhs] : printed) {
    MonomialFraction diff = clear(lhs, rhs);
    PrintedEquation eq{label, lhs, rhs, diff.numerator, diff.denominator, diff.numerator};
    for (const auto& e : r.errata) {
      if (e.object != "equation" || e.label != label) continue;
      const auto split = e.corrected.find(" = ");
      MonomialFraction fixed = clear(e.corrected.substr(0, split), e.corrected.substr(split + 3));
      eq.cleared = fixed.numerator;
      eq.denominator = fixed.denominator;
    }
    r.equations.push_back(std::move(eq));
  }

  const std::array<const char*, 3> cubic = {
      "alpha^3-alpha*beta^2-tau*alpha*gamma^2-54*eps/k*beta*gamma",
      "beta^3-tau*beta*gamma^2-beta*alpha^2-54*eps/k*gamma*alpha",
      "gamma^3-tau*gamma*alpha^2-tau*gamma*beta^2-54*eps/k*alpha*beta",
  };
  // c1 = alpha^2 + beta^2 + tau gamma^2, c2 = 54 eps k^-1 alpha beta gamma.
  const std::string c1 = "(alpha^2+beta^2+tau*gamma^2)";
  const std::string c2 = "(54*eps/k*alpha*beta*gamma)";
  const std::array<std::string, 3> quartic = {
      "2*alpha^4-" + c1 + "*alpha^2-" + c2,
      "2*beta^4-" + c1 + "*beta^2-" + c2,
      "2*gamma^4-" + c1 + "*tau*gamma^2-" + c2,
  };
  for (int i = 0; i < 3; ++i) {
    r.cubic[i] = parse_fraction(cubic[i], ring, constants).numerator;
    r.quartic[i] = parse_fraction(quartic[i], ring, constants).numerator;
  }
  return r;
}

}  // namespace nk6
