#pragma once

// Normal-form arithmetic in the Weyl algebra extended by reflections and by
// negative powers of the coordinates.  Every element is a finite sum of
// monomials, one block x_i^a d_i^b R_i^e per variable, with Scalar
// coefficients.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dunklcas/scalars.hpp"

namespace dunklcas {

/// x^x * d^d * R^r for one variable, in that order.
struct Factor {
  std::int32_t x = 0;
  std::uint16_t d = 0;
  std::uint8_t r = 0;

  friend bool operator==(const Factor &, const Factor &) = default;
  // Term order compares (r, d, x).
  friend std::strong_ordering operator<=>(const Factor &a, const Factor &b) {
    if (auto c = a.r <=> b.r; c != 0)
      return c;
    if (auto c = a.d <=> b.d; c != 0)
      return c;
    return a.x <=> b.x;
  }
};

class Monomial {
public:
  Monomial() = default;

  const Factor &operator[](std::size_t var) const { return f_[var]; }
  Factor &operator[](std::size_t var) { return f_[var]; }
  bool is_identity() const { return *this == Monomial{}; }

  friend bool operator==(const Monomial &, const Monomial &) = default;
  friend auto operator<=>(const Monomial &, const Monomial &) = default;

  std::string str(std::size_t vars) const;

private:
  std::array<Factor, kMaxVariables> f_{};
};

class OperatorElement {
public:
  using TermMap = std::map<Monomial, Scalar>;

  OperatorElement(std::size_t vars, std::size_t params);
  OperatorElement(std::size_t vars, Scalar constant);

  /// Single-term element c * m.
  static OperatorElement monomial(std::size_t vars, const Monomial &m, Scalar c);
  /// Generators; `var` is zero-based.
  static OperatorElement coordinate(std::size_t vars, std::size_t params, std::size_t var,
                                    int power = 1);
  static OperatorElement derivative(std::size_t vars, std::size_t params, std::size_t var,
                                    unsigned power = 1);
  static OperatorElement reflection(std::size_t vars, std::size_t params, std::size_t var);

  std::size_t vars() const { return vars_; }
  std::size_t params() const { return params_; }
  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Coefficient of m (zero if absent).
  Scalar coefficient(const Monomial &m) const;

  OperatorElement operator-() const;
  OperatorElement &operator+=(const OperatorElement &o);
  OperatorElement &operator-=(const OperatorElement &o);
  OperatorElement &operator*=(const Scalar &c);
  OperatorElement &operator*=(const BaseNumber &c);

  friend OperatorElement operator+(OperatorElement a, const OperatorElement &b) { return a += b; }
  friend OperatorElement operator-(OperatorElement a, const OperatorElement &b) { return a -= b; }
  friend OperatorElement operator*(const OperatorElement &a, const OperatorElement &b);
  friend OperatorElement operator*(OperatorElement a, const Scalar &c) { return a *= c; }
  friend OperatorElement operator*(const Scalar &c, OperatorElement a) { return a *= c; }
  friend OperatorElement operator*(OperatorElement a, const BaseNumber &c) { return a *= c; }
  friend OperatorElement operator*(const BaseNumber &c, OperatorElement a) { return a *= c; }
  friend bool operator==(const OperatorElement &a, const OperatorElement &b) {
    return a.vars_ == b.vars_ && a.params_ == b.params_ && a.terms_ == b.terms_;
  }

  /// Canonical rendering, terms in ascending term order; "0" for zero.
  std::string str() const;

  /// Rebuilds the canonical form from arbitrary terms.
  static OperatorElement from_terms(std::size_t vars, std::size_t params,
                                    std::span<const std::pair<Monomial, Scalar>> terms);

private:
  void check_arity(const OperatorElement &o) const;
  void add_term(const Monomial &m, const Scalar &c);

  std::size_t vars_;
  std::size_t params_;
  TermMap terms_; // no zero coefficients
};

OperatorElement multiply(const OperatorElement &a, const OperatorElement &b);
OperatorElement linear_combine(std::span<const std::pair<Scalar, OperatorElement>> pairs);
OperatorElement commutator(const OperatorElement &a, const OperatorElement &b);
OperatorElement anticommutator(const OperatorElement &a, const OperatorElement &b);
/// Anti-automorphism: x -> x, d -> -d, R -> R, coefficients conjugated.
OperatorElement adjoint(const OperatorElement &a);
/// a^k for k >= 0.
OperatorElement power(const OperatorElement &a, unsigned k);
/// Substitutes all parameters (values.size() == params()).
OperatorElement substitute_params(const OperatorElement &a, std::span<const Rational> values);
/// Substitutes the leading values.size() parameters; arity is unchanged.
OperatorElement specialize_params(const OperatorElement &a, std::span<const Rational> values);

using Exponents = std::array<std::int32_t, kMaxVariables>;

/// Laurent polynomial in x_1..x_n with Scalar coefficients.
class LaurentPolynomial {
public:
  using TermMap = std::map<Exponents, Scalar>;

  LaurentPolynomial(std::size_t vars, std::size_t params);
  static LaurentPolynomial monomial(std::size_t vars, const Exponents &e, Scalar c);
  static LaurentPolynomial constant(std::size_t vars, Scalar c);

  std::size_t vars() const { return vars_; }
  std::size_t params() const { return params_; }
  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_negative_exponent() const;
  Scalar coefficient(const Exponents &e) const;

  /// Adds c * x^e.
  void add_term(const Exponents &e, const Scalar &c);

  LaurentPolynomial operator-() const;
  LaurentPolynomial &operator+=(const LaurentPolynomial &o);
  LaurentPolynomial &operator-=(const LaurentPolynomial &o);
  LaurentPolynomial &operator*=(const Scalar &c);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial &b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial &b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Scalar &c) { return a *= c; }
  friend LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b);
  friend bool operator==(const LaurentPolynomial &a, const LaurentPolynomial &b) {
    return a.vars_ == b.vars_ && a.params_ == b.params_ && a.terms_ == b.terms_;
  }

  /// Exact substitution of parameters (values.size() == params()).
  LaurentPolynomial substitute_params(std::span<const Rational> values) const;

  std::string str() const;

private:
  void check_arity(const LaurentPolynomial &o) const;

  std::size_t vars_;
  std::size_t params_;
  TermMap terms_;
};

/// Exact action on functions: d differentiates, x multiplies, R_i flips the
/// sign of terms odd in x_i.
LaurentPolynomial act(const OperatorElement &a, const LaurentPolynomial &f);

/// Falling factorial a (a-1) ... (a-k+1), valid for negative a.
std::int64_t falling_factorial(std::int64_t a, unsigned k);
std::int64_t binomial(unsigned n, unsigned k);

} // namespace dunklcas
