#include <algorithm>

#include <doctest.h>

#include "dunklcas/builders.hpp"
#include "dunklcas/opalg.hpp"
#include "support/random.hpp"

using namespace dunklcas;
using dunklcas::testing::Rng;

namespace {

OperatorElement x(std::size_t vars = 1, int power = 1, std::size_t var = 0) {
  return OperatorElement::coordinate(vars, 0, var, power);
}
OperatorElement d(std::size_t vars = 1, unsigned power = 1, std::size_t var = 0) {
  return OperatorElement::derivative(vars, 0, var, power);
}
OperatorElement refl(std::size_t vars = 1, std::size_t var = 0) {
  return OperatorElement::reflection(vars, 0, var);
}
OperatorElement one(std::size_t vars = 1) { return OperatorElement(vars, Scalar(0, 1)); }

LaurentPolynomial xk(int k) {
  return LaurentPolynomial::monomial(1, Exponents{k}, Scalar(0, 1));
}

OperatorElement at(const OperatorElement &a, std::initializer_list<Rational> mu) {
  std::vector<Rational> v(mu);
  return substitute_params(a, v);
}

} // namespace

TEST_CASE("normal ordering rules") {
  CHECK(d() * x() == x() * d() + one());
  CHECK(refl() * power(x(), 3) == -(power(x(), 3) * refl()));
  CHECK(refl() * refl() == one());
  CHECK(refl() * d() == -(d() * refl()));
  CHECK(x(2, 1, 0) * d(2, 1, 1) == d(2, 1, 1) * x(2, 1, 0));
  CHECK(refl(2, 0) * x(2, 1, 1) == x(2, 1, 1) * refl(2, 0));
}

TEST_CASE("second-order product against the action oracle") {
  OperatorElement lhs = d(1, 2) * x(1, 2);
  OperatorElement expected = x(1, 2) * d(1, 2) + x() * d() * BaseNumber(4) + one() * BaseNumber(2);
  CHECK(lhs == expected);
  // act both sides on x^k
  for (int k = 0; k <= 6; ++k)
    CHECK(act(lhs, xk(k)) == act(expected, xk(k)));
  // d^2 x^2 x^k = (k+2)(k+1) x^k
  for (int k = 0; k <= 6; ++k)
    CHECK(act(lhs, xk(k)) == xk(k) * Scalar(0, Rational((k + 2) * (k + 1))));
}

TEST_CASE("derivative through a negative power") {
  OperatorElement lhs = d() * x(1, -1);
  CHECK(lhs == x(1, -1) * d() - x(1, -2));
  // d (x^-1 x^3) = 2x
  CHECK(act(lhs, xk(3)) == xk(1) * Scalar(0, 2));
  CHECK(lhs.str() == "-x1^-2 + x1^-1*d1");
}

TEST_CASE("linear combinations") {
  OperatorElement a = x() * d() + refl();
  std::vector<std::pair<Scalar, OperatorElement>> cancel = {{Scalar(0, 1), a}, {Scalar(0, -1), a}};
  CHECK(linear_combine(cancel).is_zero());
  std::vector<std::pair<Scalar, OperatorElement>> merge = {{Scalar(0, 2), x() * d()},
                                                           {Scalar(0, 3), x() * d()}};
  OperatorElement merged = linear_combine(merge);
  CHECK(merged == x() * d() * BaseNumber(5));
  CHECK(merged.term_count() == 1);
  CHECK_THROWS_AS(linear_combine(std::span<const std::pair<Scalar, OperatorElement>>{}),
                  std::invalid_argument);

  OperatorElement ap = build({OperatorKind::APlus, 1}, 1);
  OperatorElement am = build({OperatorKind::AMinus, 1}, 1);
  std::vector<std::pair<Scalar, OperatorElement>> half = {{Scalar(1, Rational(1, 2)), ap * am},
                                                          {Scalar(1, Rational(1, 2)), am * ap}};
  CHECK(linear_combine(half) == build({OperatorKind::AZero, 1}, 1));
}

TEST_CASE("commutators") {
  CHECK(commutator(d(), x()) == one());
  CHECK(anticommutator(refl(), x()).is_zero());
  OperatorElement a0 = build({OperatorKind::AZero, 1}, 1);
  OperatorElement ap = build({OperatorKind::APlus, 1}, 1);
  CHECK(commutator(a0, ap) == ap);
  CHECK_THROWS_AS(commutator(x(1), x(2)), ArityMismatch);
}

TEST_CASE("adjoint") {
  OperatorElement ix = x() * BaseNumber::imaginary_unit();
  CHECK(adjoint(ix) == -ix);
  OperatorElement dr = d() * refl();
  CHECK(adjoint(dr) == dr);
  CHECK(adjoint(adjoint(dr)) == dr);
  CHECK(adjoint(x(1, -1)) == x(1, -1));
  CHECK(adjoint(build({OperatorKind::SusyCharge1D, 1}, 1)) ==
        build({OperatorKind::SusyCharge1D, 1}, 1));
}

TEST_CASE("action on Laurent polynomials") {
  OperatorElement dunkl = build({OperatorKind::DunklDerivative, 1}, 1);
  Scalar mu = Scalar::parameter(1, 0);
  auto lp = [](int k, Scalar c) { return LaurentPolynomial::monomial(1, Exponents{k}, c); };
  // d x = 1 and (mu/x)(x - (-x)) = 2 mu
  CHECK(act(dunkl, lp(1, Scalar(1, 1))) == lp(0, Scalar(1, 1) + mu * BaseNumber(2)));
  CHECK(act(dunkl, lp(2, Scalar(1, 1))) == lp(1, Scalar(1, 2)));
  LaurentPolynomial f = xk(3) + xk(2);
  CHECK(act(refl(), f) == xk(2) - xk(3));
  CHECK(act(OperatorElement(1, 0), f).is_zero());
}

TEST_CASE("parameter substitution") {
  OperatorElement dunkl = build({OperatorKind::DunklDerivative, 1}, 1);
  CHECK(at(dunkl, {0}) == OperatorElement::derivative(1, 1, 0));

  // J0 at mu = 0 is the difference of two ordinary oscillators
  OperatorElement j0 = at(build({OperatorKind::JZero}, 2), {0, 0});
  auto h0 = [](std::size_t var) {
    return (OperatorElement::derivative(2, 2, var, 2) * BaseNumber(-1) +
            OperatorElement::coordinate(2, 2, var, 2)) *
           BaseNumber(Rational(1, 2));
  };
  CHECK(j0 == h0(0) - h0(1));

  // 3 - H^2 - 2mu1^2 - 2mu2^2 at (1/3, 1/2): constant 3 - 2/9 - 1/2 = 41/18
  OperatorElement h = build({OperatorKind::Hamiltonian2D}, 2);
  Scalar m1 = Scalar::parameter(2, 0), m2 = Scalar::parameter(2, 1);
  OperatorElement id(2, Scalar(2, 1));
  OperatorElement gamma1 =
      id * BaseNumber(3) - h * h - id * (m1 * m1 * BaseNumber(2) + m2 * m2 * BaseNumber(2));
  OperatorElement h_at = at(h, {Rational(1, 3), Rational(1, 2)});
  CHECK(at(gamma1, {Rational(1, 3), Rational(1, 2)}) ==
        OperatorElement(2, Scalar(2, Rational(41, 18))) - h_at * h_at);
  CHECK_THROWS_AS(at(gamma1, {1}), ArityMismatch);
  CHECK(specialize_params(gamma1, std::vector<Rational>{0}).params() == 2);
}

TEST_CASE("degenerate inputs give the canonical zero") {
  OperatorElement a = x() * d() + refl();
  OperatorElement zero(1, 0);
  CHECK((a * zero).is_zero());
  CHECK((zero * a).is_zero());
  CHECK((a * Scalar(0)).is_zero());
  CHECK(zero.str() == "0");
  CHECK(power(a, 0) == one());
}

TEST_CASE("rendering follows the term order") {
  Monomial m;
  m[0].x = -2;
  m[0].d = 2;
  m[0].r = 1;
  CHECK(m.str(1) == "x1^-2*d1^2*R1");
  CHECK(Monomial().str(2) == "1");
  // (r, d, x) order: x-only terms come before d terms, which come before R terms
  OperatorElement e = refl() + d() + x(1, 5) + one();
  CHECK(e.str() == "1 + x1^5 + d1 + R1");
}

TEST_CASE("associativity on random triples") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    std::size_t vars = static_cast<std::size_t>(testing::uniform(rng, 1, 2));
    OperatorElement a = testing::operator_element(rng, vars, vars);
    OperatorElement b = testing::operator_element(rng, vars, vars);
    OperatorElement c = testing::operator_element(rng, vars, vars);
    REQUIRE(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    REQUIRE(a + b == b + a);
  }
}

TEST_CASE("action is a homomorphism") {
  Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    std::size_t vars = static_cast<std::size_t>(testing::uniform(rng, 1, 2));
    OperatorElement a = testing::operator_element(rng, vars, vars);
    OperatorElement b = testing::operator_element(rng, vars, vars);
    LaurentPolynomial f = testing::laurent(rng, vars, vars);
    REQUIRE(act(multiply(a, b), f) == act(a, act(b, f)));
  }
}

TEST_CASE("adjoint is an involutive anti-automorphism") {
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    OperatorElement a = testing::operator_element(rng, 2, 2);
    OperatorElement b = testing::operator_element(rng, 2, 2);
    a *= testing::base_number(rng) + BaseNumber::imaginary_unit();
    REQUIRE(adjoint(adjoint(a)) == a);
    REQUIRE(adjoint(multiply(a, b)) == multiply(adjoint(b), adjoint(a)));
  }
}

TEST_CASE("conjugation by a reflection flips odd terms") {
  Rng rng(14);
  for (int t = 0; t < 200; ++t) {
    OperatorElement a = testing::operator_element(rng, 2, 2, 4);
    for (std::size_t var = 0; var < 2; ++var) {
      OperatorElement r = OperatorElement::reflection(2, 2, var);
      std::vector<std::pair<Monomial, Scalar>> flipped;
      for (const auto &[m, c] : a.terms())
        flipped.emplace_back(m, ((m[var].x + m[var].d) % 2 != 0) ? -c : c);
      REQUIRE(multiply(r, multiply(a, r)) == OperatorElement::from_terms(2, 2, flipped));
    }
  }
}

TEST_CASE("normal form is idempotent") {
  Rng rng(15);
  for (int t = 0; t < 200; ++t) {
    OperatorElement a = testing::operator_element(rng, 2, 2, 5);
    std::vector<std::pair<Monomial, Scalar>> terms(a.terms().begin(), a.terms().end());
    REQUIRE(OperatorElement::from_terms(2, 2, terms) == a);
    std::vector<std::pair<Monomial, Scalar>> split;
    for (const auto &[m, c] : terms) {
      split.emplace_back(m, c * BaseNumber(3));
      split.emplace_back(m, c * BaseNumber(-2));
    }
    std::shuffle(split.begin(), split.end(), rng);
    REQUIRE(OperatorElement::from_terms(2, 2, split) == a);
    for (const auto &[m, c] : a.terms())
      REQUIRE_FALSE(c.is_zero());
  }
}

TEST_CASE("integer helpers") {
  CHECK(falling_factorial(-1, 3) == -6);
  CHECK(falling_factorial(5, 0) == 1);
  CHECK(falling_factorial(2, 3) == 0);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 5) == 0);
}
