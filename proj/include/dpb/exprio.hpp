#pragma once

// Text form of tensor polynomials and bracket tables.
//
// Expression grammar (whitespace-insensitive, '#' separates tensor slots):
//
//   poly   := '0' | ['-'] term (('+' | '-') term)*
//   term   := [scalar '*']? factor ('#' factor)*      (arity factors)
//   factor := '1' | mono
//   mono   := var ('^' nat)? ('*' var ('^' nat)?)*
//   var    := 't' nat
//   scalar := int | int '/' nat | int 'm' nat
//
// "3m4" is the residue 3 in Z/4 and is only accepted when the declared ring
// is Zmod:4; fractions are only accepted over Q.
//
// Bracket table files:
//
//   // comment until end of line
//   ring = Q          // or Z, or Zmod:<m>
//   d = 2
//   n = 2
//   bb(1,2) = t1#1 - 1#t1 ; bb(2,1) = 1#t1 - t1#1
//
// Statements are separated by newlines or ';'.  The three header lines must
// all appear before the first entry; unassigned entries are zero; assigning
// the same tuple twice is an error.

#include "dpb/bracket.hpp"
#include "dpb/tpoly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace dpb {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int col)
        : std::runtime_error(message + " at line " + std::to_string(line) + ", column " +
                             std::to_string(col)),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_, col_;
};

// Parses a tensor polynomial of the given arity over the given algebra.
TensorPoly parse_tpoly(std::string_view text, const AlgebraSig& sig, int arity);

// Canonical form: terms in descending order, coefficient 1 elided, signs as
// separators over Z and Q, residue literals ("3m4") over Z/m.  print and
// parse are mutually inverse on canonical text.
std::string print_tpoly(const TensorPoly& p);

GenTable parse_bracket_text(std::string_view text);
std::string print_bracket_text(const GenTable& table);

GenTable load_bracket_file(const std::string& path);
void save_bracket_file(const GenTable& table, const std::string& path);

}  // namespace dpb
