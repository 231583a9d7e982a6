#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncreal/point.hpp"
#include "ncreal/poly.hpp"
#include "ncreal/polymatrix.hpp"
#include "ncreal/unipoly.hpp"

namespace ncreal {

struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct ParseDiagnostic {
  SourceSpan span;
  std::string message;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseDiagnostic d, const std::string& what)
      : std::runtime_error(what), diag_(std::move(d)) {}
  const ParseDiagnostic& diagnostic() const { return diag_; }

 private:
  ParseDiagnostic diag_;
};

// Renders "line L, column C: message" with a caret excerpt of the source.
std::string format_diagnostic(const std::string& source, const ParseDiagnostic& d);

// --- free *-algebra polynomials -------------------------------------------
//
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coef ['*'] factor*  |  factor+
//   factor := var | '(' poly ')' ['*']
//   var    := 'x' digits ['*']
//   coef   := integer ['/' integer]
//
// A '*' binds as the involution only when it immediately follows a variable
// or ')' with no intervening whitespace; surrounded by whitespace it is a
// multiplication separator.  '#' starts a comment running to end of line.
NcPoly parse_poly(const std::string& text);

// One polynomial per non-empty line.
std::vector<NcPoly> parse_poly_file(const std::string& text);

// Canonical printing: terms descending in the canonical monomial order,
// letters space-separated ("x1* x1"), rational coefficients as "num/den".
std::string print_poly(const NcPoly& p);

// --- univariate polynomials and matrices over Q[x] ------------------------
//
//   entry  := ['+'|'-'] uterm (('+'|'-') uterm)*
//   uterm  := coef ['*'] ufactor*  |  ufactor+
//   ufactor:= 'x' ['^' digits] | '(' entry ')' ['^' digits]
//   matrix := '[' row (';' row)* ']'   row := entry (',' entry)*
UniPoly parse_unipoly(const std::string& text);
UniPolyMatrix parse_unipoly_matrix(const std::string& text);
// One matrix per non-empty line.
std::vector<UniPolyMatrix> parse_unipoly_matrix_file(const std::string& text);

std::string print_unipoly(const UniPoly& p);
std::string print_unipoly_matrix(const UniPolyMatrix& m);

// --- matrix points --------------------------------------------------------
//
// Lines "X<i> = [..;..]" (rational entries) and "v = [..]"; indices must
// cover X1..Xg contiguously.
MatrixPoint parse_point_file(const std::string& text);

} // namespace ncreal
