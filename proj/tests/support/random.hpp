#pragma once

// Seeded generators for property tests.  Sizes stay small so that exact
// products remain cheap.

#include <random>

#include "dunklcas/opalg.hpp"

namespace dunklcas::testing {

using Rng = std::mt19937;

inline int uniform(Rng &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational small_rational(Rng &rng, int max_num = 5, int max_den = 4) {
  Rational q(uniform(rng, -max_num, max_num), uniform(rng, 1, max_den));
  q.canonicalize();
  return q;
}

/// About half of the components are zero.
inline BaseNumber base_number(Rng &rng) {
  Rational c[4];
  for (auto &x : c)
    x = uniform(rng, 0, 1) ? small_rational(rng) : Rational(0);
  return BaseNumber(c[0], c[1], c[2], c[3]);
}

inline BaseNumber nonzero_base_number(Rng &rng) {
  for (;;) {
    BaseNumber b = base_number(rng);
    if (!b.is_zero())
      return b;
  }
}

inline Scalar scalar(Rng &rng, std::size_t params, int max_terms = 3, int max_degree = 2) {
  std::vector<Scalar::Term> terms;
  int n = uniform(rng, 0, max_terms);
  for (int t = 0; t < n; ++t) {
    ParamExponents e{};
    for (std::size_t k = 0; k < params; ++k)
      e[k] = static_cast<std::uint16_t>(uniform(rng, 0, max_degree));
    terms.emplace_back(e, base_number(rng));
  }
  return Scalar::from_terms(params, std::move(terms));
}

/// Coefficients are constants or degree-1 in mu so that deep products stay
/// small.
inline Scalar coefficient(Rng &rng, std::size_t params) {
  Scalar c(params, small_rational(rng));
  if (params > 0 && uniform(rng, 0, 2) == 0)
    c += Scalar::parameter(params, uniform(rng, 0, static_cast<int>(params) - 1)) *
         BaseNumber(small_rational(rng));
  return c;
}

/// At most max_terms monomials with |x exponent| <= 2, d exponent <= 2.
inline OperatorElement operator_element(Rng &rng, std::size_t vars, std::size_t params,
                                        int max_terms = 3) {
  std::vector<std::pair<Monomial, Scalar>> terms;
  int n = uniform(rng, 1, max_terms);
  for (int t = 0; t < n; ++t) {
    Monomial m;
    for (std::size_t v = 0; v < vars; ++v) {
      m[v].x = uniform(rng, -2, 2);
      m[v].d = static_cast<std::uint16_t>(uniform(rng, 0, 2));
      m[v].r = static_cast<std::uint8_t>(uniform(rng, 0, 1));
    }
    terms.emplace_back(m, coefficient(rng, params));
  }
  return OperatorElement::from_terms(vars, params, terms);
}

inline LaurentPolynomial laurent(Rng &rng, std::size_t vars, std::size_t params,
                                 int max_terms = 3, int lo = -2, int hi = 3) {
  LaurentPolynomial p(vars, params);
  int n = uniform(rng, 1, max_terms);
  for (int t = 0; t < n; ++t) {
    Exponents e{};
    for (std::size_t v = 0; v < vars; ++v)
      e[v] = uniform(rng, lo, hi);
    p.add_term(e, coefficient(rng, params));
  }
  return p;
}

} // namespace dunklcas::testing
