#pragma once

// Operator-expression language.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' ['-'] integer)?
//   primary := number | 'i' | 'sqrt2' | mu<k> | name
//            | comm '(' expr ',' expr ')' | acomm '(' expr ',' expr ')'
//            | adjoint '(' expr ')' | '(' expr ')'
//
// Numbers are integers or p/q.  Names are the operator registry identifiers
// (x1, d1, R1, J+, K0, Q_susy, ...).  Negative powers are accepted only for
// elements with an exact inverse: a single x/R monomial with a constant
// coefficient.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dunklcas/builders.hpp"
#include "dunklcas/opalg.hpp"

namespace dunklcas {

class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string &message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

struct Expr {
  enum class Kind { number, parameter, name, neg, add, sub, mul, pow, comm, acomm, adjoint };

  Kind kind = Kind::number;
  BaseNumber number;           // number
  std::size_t parameter = 0;   // parameter, 1-based
  OperatorName name{OperatorKind::Coordinate, 1};
  int exponent = 0;            // pow
  std::vector<Expr> args;

  static Expr constant(BaseNumber value);
  static Expr mu(std::size_t index);
  static Expr op(OperatorName name);
  static Expr unary(Kind kind, Expr a);
  static Expr binary(Kind kind, Expr a, Expr b);
  static Expr pow(Expr base, int exponent);

  /// Smallest dimension in which every name and parameter is defined.
  std::size_t required_dims() const;
};

/// Throws ParseError on syntax errors, unknown identifiers and indices that
/// exceed dims.
Expr parse(std::string_view text, std::size_t dims);

/// Value in the dims-variable algebra with dims parameters.  Throws
/// std::domain_error for a negative power of a non-invertible element.
OperatorElement evaluate(const Expr &expr, std::size_t dims);

/// Text that parses back to an equal tree.
std::string render(const Expr &expr);

} // namespace dunklcas
