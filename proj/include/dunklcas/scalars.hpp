#pragma once

// Exact coefficient arithmetic.
//
// BaseNumber is an element of the field Q(i, sqrt2), stored as four GMP
// rationals over the basis {1, i, sqrt2, i*sqrt2}.  Scalar is a sparse
// polynomial in the deformation parameters mu_1..mu_n with BaseNumber
// coefficients.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace dunklcas {

using Rational = mpq_class;

/// Upper bound on the number of variables (and hence parameters) of any
/// algebra element.  Exponent vectors are stored inline.
inline constexpr std::size_t kMaxVariables = 8;

class DivisionByZero : public std::domain_error {
public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class ArityMismatch : public std::invalid_argument {
public:
  ArityMismatch(std::size_t lhs, std::size_t rhs);
};

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational &q);

class BaseNumber {
public:
  enum Component : std::size_t { kOne = 0, kI = 1, kSqrt2 = 2, kISqrt2 = 3 };

  BaseNumber() = default;
  BaseNumber(long value) { c_[kOne] = value; }
  BaseNumber(Rational value) { c_[kOne] = std::move(value); }
  BaseNumber(Rational one, Rational i, Rational sqrt2, Rational i_sqrt2);

  static BaseNumber imaginary_unit() { return {0, 1, 0, 0}; }
  static BaseNumber sqrt2() { return {0, 0, 1, 0}; }
  /// 1/sqrt2 = sqrt2/2.
  static BaseNumber inv_sqrt2() { return {0, 0, Rational(1, 2), 0}; }

  const Rational &operator[](Component k) const { return c_[k]; }

  bool is_zero() const;
  bool is_one() const;
  /// True when only the rational component is nonzero (or the value is 0).
  bool is_rational() const;
  /// Number of nonzero components.
  int support() const;

  BaseNumber operator-() const;
  BaseNumber &operator+=(const BaseNumber &o);
  BaseNumber &operator-=(const BaseNumber &o);
  BaseNumber &operator*=(const BaseNumber &o);
  BaseNumber &operator/=(const BaseNumber &o);

  friend BaseNumber operator+(BaseNumber a, const BaseNumber &b) { return a += b; }
  friend BaseNumber operator-(BaseNumber a, const BaseNumber &b) { return a -= b; }
  friend BaseNumber operator*(const BaseNumber &a, const BaseNumber &b);
  friend BaseNumber operator/(BaseNumber a, const BaseNumber &b) { return a /= b; }
  friend bool operator==(const BaseNumber &a, const BaseNumber &b) { return a.c_ == b.c_; }

  /// Throws DivisionByZero for 0.
  BaseNumber inverse() const;
  /// Complex conjugation i -> -i; sqrt2 is fixed.
  BaseNumber conj() const;

  /// Sign of a real value a + b*sqrt2.  Throws std::domain_error if an
  /// imaginary component is present.
  int real_sign() const;

  std::string str() const;

private:
  std::array<Rational, 4> c_;
};

enum class FieldOp { add, sub, mul, div };
BaseNumber field_arithmetic(const BaseNumber &a, const BaseNumber &b, FieldOp kind);

/// Exponents of mu_1..mu_n; unused trailing entries are zero.
using ParamExponents = std::array<std::uint16_t, kMaxVariables>;

class Scalar {
public:
  using Term = std::pair<ParamExponents, BaseNumber>;

  explicit Scalar(std::size_t params = 0);
  Scalar(std::size_t params, BaseNumber constant);
  /// The parameter mu_{index+1} (zero-based index).
  static Scalar parameter(std::size_t params, std::size_t index);

  std::size_t params() const { return params_; }
  const std::vector<Term> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Constant (mu-free) value, if this scalar is constant.
  std::optional<BaseNumber> constant_value() const;
  std::size_t degree() const;

  Scalar operator-() const;
  Scalar &operator+=(const Scalar &o);
  Scalar &operator-=(const Scalar &o);
  Scalar &operator*=(const Scalar &o);
  Scalar &operator*=(const BaseNumber &c);

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(const Scalar &a, const Scalar &b);
  friend Scalar operator*(Scalar a, const BaseNumber &c) { return a *= c; }
  friend Scalar operator*(const BaseNumber &c, Scalar a) { return a *= c; }
  friend bool operator==(const Scalar &a, const Scalar &b) {
    return a.params_ == b.params_ && a.terms_ == b.terms_;
  }

  Scalar conj() const;
  /// Substitutes every parameter; values.size() must equal params().
  BaseNumber evaluate(std::span<const Rational> values) const;
  /// Substitutes mu_{k+1} = values[k] for k < values.size() only; arity is
  /// unchanged.  values.size() may not exceed params().
  Scalar specialize(std::span<const Rational> values) const;
  /// Quotient q with q*divisor == *this, or nullopt when the division is
  /// not exact.  Throws DivisionByZero for a zero divisor.
  std::optional<Scalar> divide_exact(const Scalar &divisor) const;

  /// Rebuilds the canonical form from arbitrary (unsorted, possibly zero or
  /// duplicated) terms.
  static Scalar from_terms(std::size_t params, std::vector<Term> terms);

  /// Canonical text: terms in ascending lexicographic exponent order, e.g.
  /// "3 + 2*mu1 - 1/2*i*mu1^2".
  std::string str() const;
  /// True when str() needs parentheses to be used as a factor.
  bool is_compound() const;

private:
  void check_arity(const Scalar &o) const;

  std::size_t params_;
  std::vector<Term> terms_; // strictly ascending exponents, nonzero coefficients
};

namespace detail {
/// Joins rendered summands, turning a leading '-' into a binary " - ".
std::string join_signed(const std::vector<std::string> &parts);
} // namespace detail

/// kind must be add, sub or mul.
Scalar poly_arithmetic(const Scalar &a, const Scalar &b, FieldOp kind);

} // namespace dunklcas
