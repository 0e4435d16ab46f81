#include "nk6/io.hpp"

#include <fstream>
#include <sstream>

namespace nk6 {

namespace {

struct Cursor {
  std::string_view source;
  int line = 0;

  [[noreturn]] void fail(ErrorCode code, std::size_t column, const std::string& message) const {
    throw Error(code, std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(column + 1) + ": " +
                          message);
  }
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Offset of s inside its line.
std::size_t offset_in(std::string_view line, std::string_view s) {
  return static_cast<std::size_t>(s.data() - line.data());
}

Scalar scalar_at(const Cursor& cur, std::string_view line, std::string_view text, int field) {
  try {
    return parse_scalar(text, field);
  } catch (const Error&) {
    cur.fail(ErrorCode::SyntaxError, offset_in(line, text), "bad scalar '" + std::string(text) + "'");
  }
}

// Sum of [sign] <scalar>*<indices> terms.
FormS parse_form(const Cursor& cur, std::string_view line, std::string_view text, int dim, int field,
                 int required_degree) {
  std::vector<std::pair<Mask, Scalar>> terms;
  int degree = required_degree;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && is_space(text[i])) ++i;
  };
  auto here = [&] { return offset_in(line, text) + i; };
  skip();
  if (trim(text.substr(i)) == "0") return FormS(dim, required_degree < 0 ? 0 : required_degree);
  bool first = true;
  while (true) {
    skip();
    if (i >= text.size()) {
      if (first) cur.fail(ErrorCode::SyntaxError, here(), "expected a term");
      break;
    }
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
      negative = text[i] == '-';
      ++i;
      skip();
    } else if (!first) {
      cur.fail(ErrorCode::SyntaxError, here(), "expected '+' or '-' between terms");
    }
    std::string_view coeff;
    if (i < text.size() && text[i] == '(') {
      const std::size_t close = text.find(')', i);
      if (close == std::string_view::npos) cur.fail(ErrorCode::SyntaxError, here(), "unbalanced '('");
      coeff = text.substr(i + 1, close - i - 1);
      i = close + 1;
    } else {
      const std::size_t star = text.find('*', i);
      if (star == std::string_view::npos) cur.fail(ErrorCode::SyntaxError, here(), "expected <scalar>*<indices>");
      coeff = text.substr(i, star - i);
      i = star;
    }
    Scalar c = scalar_at(cur, line, trim(coeff), field);
    skip();
    if (i >= text.size() || text[i] != '*') cur.fail(ErrorCode::SyntaxError, here(), "expected '*'");
    ++i;
    skip();
    const std::size_t start = i;
    std::vector<int> idx;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') idx.push_back(text[i++] - '0');
    if (idx.empty()) cur.fail(ErrorCode::SyntaxError, offset_in(line, text) + start, "expected index digits");
    for (int k : idx) {
      if (k < 1 || k > dim) cur.fail(ErrorCode::ValidationError, offset_in(line, text) + start, "index out of range");
    }
    auto [mask, sign] = mask_from_indices(idx);
    if (sign == 0) cur.fail(ErrorCode::SyntaxError, offset_in(line, text) + start, "repeated index");
    const int k = static_cast<int>(idx.size());
    if (degree < 0) degree = k;
    if (k != degree) cur.fail(ErrorCode::ValidationError, offset_in(line, text) + start, "mixed degrees");
    if (negative != (sign < 0)) c = -c;
    terms.emplace_back(mask, c);
    first = false;
  }
  FormS f(dim, degree);
  for (auto& [m, c] : terms) f.add(m, c);
  return f;
}

MatrixS parse_matrix(const Cursor& cur, std::string_view line, std::string_view text, int dim, int field) {
  std::vector<std::string_view> items;
  const char sep = text.find(',') != std::string_view::npos ? ',' : ' ';
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = sep == ',' ? text.find(',', pos) : text.find_first_of(" \t", pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view item = trim(text.substr(pos, next - pos));
    if (!item.empty() || sep == ',') items.push_back(item);
    pos = next + 1;
  }
  if (static_cast<int>(items.size()) != dim * dim) {
    cur.fail(ErrorCode::ValidationError, offset_in(line, text),
             "expected " + std::to_string(dim * dim) + " entries, got " + std::to_string(items.size()));
  }
  MatrixS m(dim, dim);
  for (int i = 0; i < dim * dim; ++i) {
    if (items[i].empty()) cur.fail(ErrorCode::SyntaxError, offset_in(line, text), "empty entry");
    m(i / dim, i % dim) = scalar_at(cur, line, items[i], field);
  }
  return m;
}

// "<name> = <rest>"
std::pair<std::string_view, std::string_view> split_assignment(const Cursor& cur, std::string_view line,
                                                               std::string_view rest) {
  const std::size_t eq = rest.find('=');
  if (eq == std::string_view::npos) cur.fail(ErrorCode::SyntaxError, offset_in(line, rest), "expected '='");
  std::string_view name = trim(rest.substr(0, eq));
  if (name.empty() || name.find_first_of(" \t") != std::string_view::npos) {
    cur.fail(ErrorCode::SyntaxError, offset_in(line, rest), "expected a single name before '='");
  }
  return {name, rest.substr(eq + 1)};
}

std::string join_matrix(const MatrixS& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (!out.empty()) out += ", ";
      out += to_string(m(i, j));
    }
  }
  return out;
}

}  // namespace

CatalogEntry parse_input(std::string_view text, std::string_view source) {
  Cursor cur{source, 0};
  CatalogEntry entry;
  entry.name = std::string(source);
  int dim = -1;
  std::string algebra_name = "input";
  std::vector<FormS> de;
  int first_d_line = 0;
  int dim_line = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++cur.line;
    std::string_view line = raw;
    std::string_view body = line.substr(0, line.find('#'));
    body = trim(body);
    if (body.empty()) continue;
    const std::size_t sp = body.find_first_of(" \t");
    const std::string_view key = body.substr(0, sp);
    const std::string_view rest = sp == std::string_view::npos ? std::string_view{} : trim(body.substr(sp));
    auto need_dim = [&] {
      if (dim < 0) cur.fail(ErrorCode::SyntaxError, offset_in(line, key), "'dim' must come first");
    };
    if (key == "field") {
      if (rest == "rational") {
        entry.field = 0;
      } else if (rest.substr(0, 4) == "sqrt") {
        const std::string_view d = trim(rest.substr(4));
        if (d.empty() || d.find_first_not_of("0123456789") != std::string_view::npos) {
          cur.fail(ErrorCode::SyntaxError, offset_in(line, rest), "expected 'sqrt <d>'");
        }
        entry.field = std::stoi(std::string(d));
        if (entry.field < 2) cur.fail(ErrorCode::ValidationError, offset_in(line, d), "field tag must be >= 2");
      } else {
        cur.fail(ErrorCode::SyntaxError, offset_in(line, key), "expected 'field sqrt <d>' or 'field rational'");
      }
    } else if (key == "dim") {
      if (dim >= 0) cur.fail(ErrorCode::SyntaxError, offset_in(line, key), "repeated 'dim'");
      if (rest.empty() || rest.find_first_not_of("0123456789") != std::string_view::npos) {
        cur.fail(ErrorCode::SyntaxError, offset_in(line, key), "expected 'dim <n>'");
      }
      dim = std::stoi(std::string(rest));
      if (dim < 1 || dim > 9) cur.fail(ErrorCode::ValidationError, offset_in(line, rest), "dim must be in 1..9");
      de.assign(dim, FormS(dim, 2));
      dim_line = cur.line;
    } else if (key == "algebra") {
      if (rest.empty()) cur.fail(ErrorCode::SyntaxError, offset_in(line, key), "expected 'algebra <name>'");
      algebra_name = std::string(rest);
    } else if (key == "d") {
      need_dim();
      auto [index, rhs] = split_assignment(cur, line, rest);
      if (index.size() != 1 || index[0] < '1' || index[0] > '0' + dim) {
        cur.fail(ErrorCode::ValidationError, offset_in(line, index), "basis index out of range");
      }
      if (first_d_line == 0) first_d_line = cur.line;
      de[index[0] - '1'] = parse_form(cur, line, rhs, dim, entry.field, 2);
    } else if (key == "form") {
      need_dim();
      auto [name, rhs] = split_assignment(cur, line, rest);
      if (entry.forms.count(std::string(name))) {
        cur.fail(ErrorCode::ValidationError, offset_in(line, name), "duplicate form '" + std::string(name) + "'");
      }
      entry.forms.emplace(std::string(name), parse_form(cur, line, rhs, dim, entry.field, -1));
    } else if (key == "endo" || key == "metric") {
      need_dim();
      auto [name, rhs] = split_assignment(cur, line, rest);
      MatrixS m = parse_matrix(cur, line, rhs, dim, entry.field);
      if (key == "metric") {
        if (m != m.transpose()) cur.fail(ErrorCode::ValidationError, offset_in(line, rhs), "metric is not symmetric");
        entry.metrics[std::string(name)] = m;
      } else {
        entry.endos[std::string(name)] = m;
      }
    } else {
      cur.fail(ErrorCode::SyntaxError, offset_in(line, key), "unknown directive '" + std::string(key) + "'");
    }
  }
  if (dim < 0) {
    cur.line = std::max(cur.line, 1);
    cur.fail(ErrorCode::SyntaxError, 0, "missing 'dim'");
  }
  entry.algebra = LieAlgebra::from_differentials(algebra_name, de);
  if (!jacobi_check(entry.algebra)) {
    cur.line = first_d_line ? first_d_line : dim_line;
    cur.fail(ErrorCode::ValidationError, 0, "jacobi_check failed: d^2 != 0 on the structure equations");
  }
  return entry;
}

FormS parse_form_text(std::string_view text, int dim, int field) {
  Cursor cur{"<form>", 1};
  return parse_form(cur, text, text, dim, field, -1);
}

CatalogEntry parse_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_input(ss.str(), path);
}

std::string emit_input(const CatalogEntry& entry) {
  const int n = entry.algebra.dim();
  std::ostringstream out;
  out << "# " << entry.name << "\n";
  out << (entry.field == 0 ? std::string("field rational") : "field sqrt " + std::to_string(entry.field)) << "\n";
  out << "dim " << n << "\n";
  out << "algebra " << entry.algebra.name() << "\n";
  for (int k = 0; k < n; ++k) {
    const FormS& f = entry.algebra.differentials()[k];
    if (!f.is_zero()) out << "d " << k + 1 << " = " << to_string(f) << "\n";
  }
  for (const auto& [name, f] : entry.forms) {
    if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "cannot emit the zero form '" + name + "'");
    out << "form " << name << " = " << to_string(f) << "\n";
  }
  for (const auto& [name, m] : entry.endos) out << "endo " << name << " = " << join_matrix(m) << "\n";
  for (const auto& [name, m] : entry.metrics) out << "metric " << name << " = " << join_matrix(m) << "\n";
  return out.str();
}

}  // namespace nk6
