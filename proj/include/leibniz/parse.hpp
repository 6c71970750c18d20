#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Positional parse failure; line and column are 1-based.
struct ParseError {
  enum class Kind { Syntax, DuplicateEntry, IndexOutOfRange };
  Kind kind = Kind::Syntax;
  std::string message;
  int line = 0;
  int column = 0;

  std::string to_string() const;
};

struct ParseOutcome {
  std::optional<LeibnizAlgebra> algebra;
  std::optional<ParseError> error;

  bool ok() const { return algebra.has_value(); }
};

/// Line-oriented presentation format:
///
///   algebra NAME
///   dim N
///   [e2,e2] = e1
///   [e1,e2] = 1/2 e1 - e3
///   # comment; unlisted products are zero
///
/// Coefficients are integers or fractions p/q; a missing coefficient means 1.
/// Duplicate (i,j) lines and out-of-range basis indices are errors. Accepts
/// LF or CRLF. Never throws on malformed input.
ParseOutcome parse_algebra(std::string_view text);

/// Canonical document for an algebra; parse(emit(g)) is table-identical to g.
std::string emit_algebra(const LeibnizAlgebra& g);

/// Command-line subspace spec: semicolon-separated vectors of comma-separated
/// rationals, e.g. "1,0,0;0,1/2,0". Throws std::invalid_argument on errors.
std::vector<Vec> parse_vector_list(std::string_view spec, Index ambient_dim);

/// Command-line matrix spec: semicolon-separated rows.
Mat parse_matrix_spec(std::string_view spec, Index n);

}  // namespace leibniz
