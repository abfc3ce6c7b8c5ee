#pragma once

#include "ncspace/expr/ast.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncspace::expr {

/// Malformed input. `offset` is the 1-based byte position of the offending
/// character (text.size() + 1 for unexpected end of input).
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Syntactically valid index outside 0..dimension-1.
class IndexRangeError : public std::out_of_range {
public:
  IndexRangeError(std::size_t offset, int index, int dimension);
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// Grammar (whitespace between tokens is ignored):
///
///   expr    := term (('+' | '-') term)*
///   term    := factor ('*' factor)*
///   factor  := scalar | param | gen | derived
///            | 'comm(' expr ',' expr ')' | 'nf(' expr ')' | '(' expr ')'
///   scalar  := int ['/' int] ['i']
///   param   := 'a[' int ']' | 'th[' int ',' int ']'
///   gen     := 'P[' int ']' | 'J[' int ',' int ']'
///   derived := 'X[' int ']' | 'XT[' int ']' | ('M2' | 'Minv2') ['^' int]
///
/// Indices are checked against `dimension`; exponents run from 0 to 8.
NodePtr parse(std::string_view text, int dimension = 4);

}  // namespace ncspace::expr
