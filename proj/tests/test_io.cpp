#include <doctest.h>

#include <string>

#include "nk6/error.hpp"
#include "nk6/io.hpp"

using namespace nk6;

namespace {

ErrorCode code_of(const std::string& text, std::string* message = nullptr) {
  try {
    parse_input(text, "t.txt");
  } catch (const Error& err) {
    if (message) *message = err.what();
    return err.code();
  }
  return ErrorCode::UsageError;
}

}  // namespace

TEST_CASE("round trip over the catalog") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    CatalogEntry c = catalog(name);
    const std::string text = emit_input(c);
    CatalogEntry p = parse_input(text, name);
    CHECK(p.field == c.field);
    CHECK(p.algebra.dim() == c.algebra.dim());
    CHECK(p.algebra.name() == c.algebra.name());
    CHECK(p.algebra.differentials() == c.algebra.differentials());
    CHECK(p.forms == c.forms);
    CHECK(p.endos.size() == c.endos.size());
    for (const auto& [k, m] : c.endos) CHECK(p.endos.at(k) == m);
    CHECK(p.metrics.size() == c.metrics.size());
    for (const auto& [k, m] : c.metrics) CHECK(p.metrics.at(k) == m);
    CHECK(emit_input(p) == text);
  }
}

TEST_CASE("hand-written input") {
  const std::string text =
      "# so(3)\n"
      "field sqrt 3\n"
      "dim 3\n"
      "d 1 = 1*23   # e^1\n"
      "d 2 = -1*13\n"
      "d 3 = 1*12\n"
      "form w = 1/2*12 - (1+r)*13 + 2*32\n"
      "endo E = 1/2 + 1/2 r, 0, 0, 0, 1, 0, 0, 0, 1\n"
      "metric g = 1 0 0 0 1 0 0 0 1\n";
  CatalogEntry p = parse_input(text);
  CHECK(p.algebra.differentials() == catalog("so3").algebra.differentials());
  const FormS& w = p.forms.at("w");
  CHECK(w.coefficient({1, 2}) == Scalar::fraction(1, 2));
  CHECK(w.coefficient({1, 3}) == -(Scalar(1) + Scalar::root(3)));
  CHECK(w.coefficient({2, 3}) == Scalar(-2));
  MatrixS e = identity<Scalar>(3);
  e(0, 0) = (Scalar(1) + Scalar::root(3)) / Scalar(2);
  CHECK(p.endos.at("E") == e);
  CHECK(p.metrics.at("g") == identity<Scalar>(3));
}

TEST_CASE("syntax errors carry the line") {
  std::string msg;
  CHECK(code_of("dim 2\nform w = 1//2*12\n", &msg) == ErrorCode::SyntaxError);
  CHECK(msg.find("t.txt:2:") != std::string::npos);
  CHECK(code_of("dim 2\nform w = 12\n") == ErrorCode::SyntaxError);
  CHECK(code_of("form w = 1*12\n") == ErrorCode::SyntaxError);
  CHECK(code_of("dim 2\nfrob w = 1*12\n") == ErrorCode::SyntaxError);
  CHECK(code_of("dim 2\nform w = 1*11\n") == ErrorCode::SyntaxError);
  CHECK(code_of("field rational\ndim 2\nform w = r*12\n") == ErrorCode::SyntaxError);
  CHECK(code_of("dim 2\nform w = 1*13\n") == ErrorCode::ValidationError);
  CHECK(code_of("dim 2\nform w = 1*12 + 1*1\n") == ErrorCode::ValidationError);
  CHECK(code_of("dim 2\nendo E = 1 0 0\n") == ErrorCode::ValidationError);
  CHECK(code_of("dim 2\nmetric g = 1 1 0 1\n") == ErrorCode::ValidationError);
}

TEST_CASE("perturbed so3 fails jacobi_check") {
  const std::string text =
      "dim 3\n"
      "d 1 = 1*23\n"
      "d 2 = 1*31\n"
      "d 3 = 1*12\n";
  CHECK_NOTHROW(parse_input(text));
  // Add e^{13} to de^1: d de^1 = e^{2} wedge ... no longer vanishes.
  const std::string bad =
      "dim 3\n"
      "d 1 = 1*23 + 1*13\n"
      "d 2 = 1*31\n"
      "d 3 = 1*12\n";
  std::string msg;
  CHECK(code_of(bad, &msg) == ErrorCode::ValidationError);
  CHECK(msg.find("jacobi_check") != std::string::npos);
  CHECK(msg.find("t.txt:2:") != std::string::npos);
}
