#include "leibniz/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace leibniz {

std::string ParseError::to_string() const {
  std::ostringstream out;
  out << "parse error at line " << line << ", column " << column << ": "
      << message;
  return out.str();
}

std::string to_fraction_string(const Rational& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << "/" << denominator(r);
  return out.str();
}

Rational rational_from_string(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text))
      throw std::invalid_argument("not a rational: " + std::string(text));
    return Rational(std::string(text));
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.empty() || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("not a rational: " + std::string(text));
  const Rational d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return Rational(std::string(num)) / d;
}

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;
  int line = 1;
  int col = 1;  // column of text[pos]

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  void advance() {
    if (done()) return;
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_spaces() {
    while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r'))
      advance();
  }
};

ParseError err(const Cursor& c, std::string message,
               ParseError::Kind kind = ParseError::Kind::Syntax) {
  return ParseError{kind, std::move(message), c.line, c.col};
}

bool read_unsigned(Cursor& c, long& out) {
  if (!std::isdigit(static_cast<unsigned char>(c.peek()))) return false;
  long v = 0;
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    v = v * 10 + (c.peek() - '0');
    if (v > 1000000) v = 1000001;  // clamp; dimensions are desk scale
    c.advance();
  }
  out = v;
  return true;
}

// RATIONAL := INT [ "/" INT ]; the sign has already been consumed
bool read_rational_magnitude(Cursor& c, Rational& out, ParseError& error) {
  long num = 0;
  if (!read_unsigned(c, num)) return false;
  out = Rational(num);
  c.skip_spaces();
  if (c.peek() == '/') {
    c.advance();
    c.skip_spaces();
    long den = 0;
    if (!read_unsigned(c, den)) {
      error = err(c, "expected denominator digits after '/'");
      error.line = c.line;
      return false;
    }
    if (den == 0) {
      error = err(c, "zero denominator");
      return false;
    }
    out /= den;
  }
  return true;
}

// BASIS := "e" INT (1-based)
bool read_basis(Cursor& c, long& out, ParseError& error) {
  if (c.peek() != 'e') {
    error = err(c, "expected a basis symbol 'e<k>'");
    return false;
  }
  c.advance();
  if (!read_unsigned(c, out)) {
    error = err(c, "expected a basis index after 'e'");
    return false;
  }
  return true;
}

}  // namespace

ParseOutcome parse_algebra(std::string_view text) {
  Cursor c{text};
  auto fail = [](ParseError e) {
    ParseOutcome out;
    out.error = std::move(e);
    return out;
  };

  auto next_content_line = [&]() {
    for (;;) {
      c.skip_spaces();
      if (c.done()) return false;
      if (c.peek() == '\n') {
        c.advance();
        continue;
      }
      if (c.peek() == '#') {
        while (!c.done() && c.peek() != '\n') c.advance();
        continue;
      }
      return true;
    }
  };

  auto expect_word = [&](std::string_view word) -> std::optional<ParseError> {
    for (char ch : word) {
      if (c.peek() != ch)
        return err(c, "expected '" + std::string(word) + "'");
      c.advance();
    }
    if (c.peek() != ' ' && c.peek() != '\t')
      return err(c, "expected whitespace after '" + std::string(word) + "'");
    return std::nullopt;
  };

  if (!next_content_line()) return fail(err(c, "empty document"));
  if (auto e = expect_word("algebra")) return fail(*e);
  c.skip_spaces();
  std::string name;
  while (!c.done() && c.peek() != '\n' && c.peek() != '#' && c.peek() != '\r') {
    name.push_back(c.peek());
    c.advance();
  }
  while (!name.empty() && (name.back() == ' ' || name.back() == '\t'))
    name.pop_back();
  if (name.empty()) return fail(err(c, "missing algebra name"));

  if (!next_content_line()) return fail(err(c, "missing 'dim' line"));
  if (auto e = expect_word("dim")) return fail(*e);
  c.skip_spaces();
  long dim = -1;
  if (!read_unsigned(c, dim)) return fail(err(c, "expected a dimension"));
  if (dim > 4096) return fail(err(c, "dimension too large"));
  c.skip_spaces();
  if (!c.done() && c.peek() != '\n' && c.peek() != '#')
    return fail(err(c, "unexpected text after the dimension"));

  LeibnizAlgebra::Builder builder(dim, name);
  std::map<std::pair<long, long>, bool> seen;

  while (next_content_line()) {
    const int line_start = c.line;
    if (c.peek() != '[') return fail(err(c, "expected '[' starting a bracket line"));
    c.advance();
    c.skip_spaces();
    ParseError e;
    long i = 0, j = 0;
    if (!read_basis(c, i, e)) return fail(e);
    c.skip_spaces();
    if (c.peek() != ',') return fail(err(c, "expected ',' between basis symbols"));
    c.advance();
    c.skip_spaces();
    if (!read_basis(c, j, e)) return fail(e);
    c.skip_spaces();
    if (c.peek() != ']') return fail(err(c, "expected ']'"));
    c.advance();
    c.skip_spaces();
    if (c.peek() != '=') return fail(err(c, "expected '='"));
    c.advance();
    c.skip_spaces();

    if (i < 1 || i > dim || j < 1 || j > dim) {
      ParseError oor = err(c, "basis index out of range on the left-hand side",
                           ParseError::Kind::IndexOutOfRange);
      oor.line = line_start;
      return fail(oor);
    }
    if (seen.count({i, j})) {
      ParseError dup = err(c, "duplicate entry for this basis pair",
                           ParseError::Kind::DuplicateEntry);
      dup.line = line_start;
      return fail(dup);
    }
    seen[{i, j}] = true;

    Vec value = Vec::Zero(dim);
    // combo := "0" | [sign] term (("+"|"-") term)*
    bool saw_any = false;
    Rational sign = 1;
    if (c.peek() == '0') {
      c.advance();
      saw_any = true;
    } else {
      if (c.peek() == '-') {
        sign = -1;
        c.advance();
        c.skip_spaces();
      } else if (c.peek() == '+') {
        c.advance();
        c.skip_spaces();
      }
      for (;;) {
        Rational coeff = 1;
        ParseError rerr;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
          if (!read_rational_magnitude(c, coeff, rerr)) return fail(rerr);
          c.skip_spaces();
        }
        long k = 0;
        if (!read_basis(c, k, rerr)) return fail(rerr);
        if (k < 1 || k > dim) {
          ParseError oor = err(c, "basis index out of range on the right-hand side",
                               ParseError::Kind::IndexOutOfRange);
          return fail(oor);
        }
        value[k - 1] += sign * coeff;
        saw_any = true;
        c.skip_spaces();
        if (c.peek() == '+') {
          sign = 1;
        } else if (c.peek() == '-') {
          sign = -1;
        } else {
          break;
        }
        c.advance();
        c.skip_spaces();
      }
    }
    if (!saw_any) return fail(err(c, "expected a linear combination"));
    c.skip_spaces();
    if (!c.done() && c.peek() != '\n' && c.peek() != '#')
      return fail(err(c, "unexpected text after the combination"));
    builder.bracket(i - 1, j - 1, value);
  }

  ParseOutcome out;
  out.algebra = builder.build();
  return out;
}

std::string emit_algebra(const LeibnizAlgebra& g) {
  std::ostringstream out;
  out << "algebra " << (g.name().empty() ? "unnamed" : g.name()) << "\n";
  out << "dim " << g.dim() << "\n";
  for (Index i = 0; i < g.dim(); ++i) {
    for (Index j = 0; j < g.dim(); ++j) {
      const Vec v = g.bracket_basis(i, j);
      if (is_zero_vec(v)) continue;
      out << "[e" << (i + 1) << ",e" << (j + 1) << "] = ";
      bool first = true;
      for (Index k = 0; k < g.dim(); ++k) {
        if (v[k] == 0) continue;
        Rational c = v[k];
        if (first) {
          if (c < 0) {
            out << "-";
            c = -c;
          }
        } else {
          out << (c < 0 ? " - " : " + ");
          if (c < 0) c = -c;
        }
        if (c != 1) out << to_fraction_string(c) << " ";
        out << "e" << (k + 1);
        first = false;
      }
      out << "\n";
    }
  }
  return out.str();
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '\t') {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

std::vector<Vec> parse_vector_list(std::string_view spec, Index ambient_dim) {
  std::vector<Vec> out;
  if (spec.empty()) return out;
  for (const std::string& vec_text : split(spec, ';')) {
    const std::vector<std::string> coords = split(vec_text, ',');
    if (static_cast<Index>(coords.size()) != ambient_dim)
      throw std::invalid_argument("vector has " + std::to_string(coords.size()) +
                                  " coordinates, expected " +
                                  std::to_string(ambient_dim));
    Vec v(ambient_dim);
    for (Index k = 0; k < ambient_dim; ++k)
      v[k] = rational_from_string(coords[static_cast<size_t>(k)]);
    out.push_back(std::move(v));
  }
  return out;
}

Mat parse_matrix_spec(std::string_view spec, Index n) {
  const std::vector<Vec> rows = parse_vector_list(spec, n);
  if (static_cast<Index>(rows.size()) != n)
    throw std::invalid_argument("matrix needs " + std::to_string(n) + " rows");
  Mat m(n, n);
  for (Index i = 0; i < n; ++i) m.row(i) = rows[static_cast<size_t>(i)].transpose();
  return m;
}

}  // namespace leibniz
