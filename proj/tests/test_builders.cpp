#include <doctest.h>

#include "dunklcas/builders.hpp"

using namespace dunklcas;
using K = OperatorKind;

namespace {

OperatorElement b(K kind, std::size_t dims, std::size_t index = 0) {
  return build(OperatorName{kind, index}, dims);
}

LaurentPolynomial lp(std::initializer_list<std::pair<int, Scalar>> terms) {
  LaurentPolynomial p(1, 1);
  for (const auto &[e, c] : terms)
    p.add_term(Exponents{e}, c);
  return p;
}

OperatorElement conj_by_r(const OperatorElement &a, std::size_t var) {
  OperatorElement r = OperatorElement::reflection(a.vars(), a.params(), var);
  return r * a * r;
}

// Adjoint for the weight prod |x_i|^(2 mu_i): conjugating the flat adjoint by
// the weight sends d_i to d_i + 2 mu_i / x_i and fixes x_i and R_i.
OperatorElement weighted_adjoint(const OperatorElement &a) {
  const std::size_t n = a.vars(), p = a.params();
  OperatorElement out(n, p), flat = adjoint(a);
  for (const auto &[m, c] : flat.terms()) {
    OperatorElement term(n, c);
    for (std::size_t v = 0; v < n; ++v) {
      OperatorElement shifted = OperatorElement::derivative(n, p, v) +
                                OperatorElement::coordinate(n, p, v, -1) *
                                    (Scalar::parameter(p, v) * BaseNumber(2));
      term = term * OperatorElement::coordinate(n, p, v, m[v].x) * power(shifted, m[v].d);
      if (m[v].r)
        term = term * OperatorElement::reflection(n, p, v);
    }
    out += term;
  }
  return out;
}

} // namespace

TEST_CASE("definitions by composition") {
  CHECK(b(K::JZero, 2) == b(K::Hamiltonian1D, 2, 1) - b(K::Hamiltonian1D, 2, 2));
  for (std::size_t i = 1; i <= 2; ++i) {
    OperatorElement ap = b(K::APlus, 2, i);
    CHECK(b(K::BPlus, 2, i) == ap * ap * BaseNumber(Rational(1, 2)));
  }
  OperatorElement jp = b(K::JPlus, 2), jm = b(K::JMinus, 2), j0 = b(K::JZero, 2);
  CHECK(b(K::KPlus, 2) == jp * jp);
  CHECK(b(K::KMinus, 2) == jm * jm);
  CHECK(b(K::E0, 2) == j0 * BaseNumber(Rational(1, 8)));
  CHECK(b(K::E1, 2) == (jp * jp + jm * jm + j0 * j0 * BaseNumber(Rational(1, 2))) *
                           BaseNumber(Rational(1, 8)));
  CHECK(b(K::PParity, 2) == b(K::Reflection, 2, 1) * b(K::Reflection, 2, 2));
  CHECK(b(K::Hamiltonian2D, 2) == b(K::Hamiltonian1D, 2, 1) + b(K::Hamiltonian1D, 2, 2));
}

TEST_CASE("undeformed Dunkl derivative") {
  OperatorElement dunkl = b(K::DunklDerivative, 1, 1);
  const Rational zero[] = {Rational(0)};
  CHECK(substitute_params(dunkl, zero) == OperatorElement::derivative(1, 1, 0));
  CHECK(dunkl.str() == "mu1*x1^-1 + d1 - mu1*x1^-1*R1");
}

TEST_CASE("gauge-rotated Hamiltonian splits into conformal parts") {
  for (std::size_t i = 1; i <= 2; ++i)
    CHECK(b(K::GaugedH, 2, i) == b(K::ConformalH, 2, i) + b(K::ConformalK, 2, i));
  CHECK(b(K::GaugedH2D, 2) == b(K::GaugedH, 2, 1) + b(K::GaugedH, 2, 2));
}

TEST_CASE("supersymmetric offset and hermiticity") {
  for (std::size_t dims = 1; dims <= 3; ++dims) {
    for (std::size_t i = 1; i <= dims; ++i) {
      OperatorElement offset =
          b(K::Reflection, dims, i) * BaseNumber(Rational(1, 2)) +
          OperatorElement(dims, Scalar::parameter(dims, i - 1));
      CHECK(b(K::SusyH1D, dims, i) == b(K::GaugedH, dims, i) - offset);
      CHECK(adjoint(b(K::SusyCharge1D, dims, i)) == b(K::SusyCharge1D, dims, i));
      CHECK(adjoint(b(K::GaugedH, dims, i)) == b(K::GaugedH, dims, i));

      // The Dunkl Hamiltonian is hermitian for the weighted measure only.
      OperatorElement h = b(K::Hamiltonian1D, dims, i);
      OperatorElement x = OperatorElement::coordinate(dims, dims, i - 1, -1);
      OperatorElement d = OperatorElement::derivative(dims, dims, i - 1);
      Scalar mu = Scalar::parameter(dims, i - 1);
      CHECK(adjoint(h) - h == (x * d * BaseNumber(2) - x * x) * mu);
      CHECK(weighted_adjoint(h) == h);
      CHECK(weighted_adjoint(b(K::DunklDerivative, dims, i)) == -b(K::DunklDerivative, dims, i));
    }
  }
}

TEST_CASE("grading of the superalgebra generators") {
  for (std::size_t var = 0; var < 2; ++var) {
    for (K even : {K::E0, K::E1, K::E2})
      CHECK(conj_by_r(b(even, 2), var) == b(even, 2));
    for (K odd : {K::FPlus, K::FMinus})
      CHECK(conj_by_r(b(odd, 2), var) == -b(odd, 2));
  }
}

TEST_CASE("generic supercharge") {
  Scalar one(1, 1), mu = Scalar::parameter(1, 0);
  const BaseNumber r2 = BaseNumber::inv_sqrt2();

  SUBCASE("the oscillator superpotential gives the 1D charge") {
    SuperpotentialPair vw(lp({}), lp({{1, one}, {-1, -mu}}));
    CHECK(build_generic_supercharge(vw) == b(K::SusyCharge1D, 1, 1));
  }
  SUBCASE("free case") {
    SuperpotentialPair vw(lp({}), lp({}));
    OperatorElement q = build_generic_supercharge(vw);
    OperatorElement d = OperatorElement::derivative(1, 1, 0);
    CHECK(q == d * OperatorElement::reflection(1, 1, 0) * r2);
    CHECK(q * q == d * d * BaseNumber(Rational(-1, 2)));
  }
  SUBCASE("V = x^2, W = x against the hand-assembled square") {
    SuperpotentialPair vw(lp({{2, one}}), lp({{1, one}}));
    OperatorElement q = build_generic_supercharge(vw);
    // (-d^2 + x^4 + x^2 + 2x - R)/2
    OperatorElement x = OperatorElement::coordinate(1, 1, 0);
    OperatorElement d = OperatorElement::derivative(1, 1, 0);
    OperatorElement hand = (-(d * d) + power(x, 4) + x * x + x * BaseNumber(2) -
                            OperatorElement::reflection(1, 1, 0)) *
                           BaseNumber(Rational(1, 2));
    CHECK(q * q == hand);
    CHECK(generic_susy_hamiltonian(vw) == hand);
  }
  SUBCASE("parity is enforced") {
    CHECK_THROWS_AS(SuperpotentialPair(lp({{1, one}}), lp({})), ParityViolation);
    CHECK_THROWS_AS(SuperpotentialPair(lp({}), lp({{2, one}})), ParityViolation);
    CHECK_THROWS_AS(SuperpotentialPair(LaurentPolynomial(2, 1), lp({})), std::invalid_argument);
  }
}

TEST_CASE("n-dimensional supercharge") {
  SusyPair one_d = build_susy_nd(1);
  CHECK(one_d.charge == b(K::SusyCharge1D, 1, 1));
  CHECK(one_d.hamiltonian == b(K::SusyH1D, 1, 1));

  SusyPair two_d = build_susy_nd(2);
  CHECK(two_d.charge == b(K::SusyCharge1D, 2, 1) * b(K::Reflection, 2, 2) +
                            b(K::SusyCharge1D, 2, 2));
  CHECK(two_d.charge == b(K::SusyChargeND, 2));

  SusyPair three_d = build_susy_nd(3);
  OperatorElement squares(3, 3);
  for (std::size_t i = 1; i <= 3; ++i)
    squares += b(K::SusyCharge1D, 3, i) * b(K::SusyCharge1D, 3, i);
  CHECK((three_d.charge * three_d.charge - squares).is_zero());
  CHECK(three_d.hamiltonian == squares);
  CHECK_THROWS_AS(build_susy_nd(0), std::invalid_argument);
}

TEST_CASE("names and errors") {
  CHECK_THROWS_AS(b(K::APlus, 1, 2), std::out_of_range);
  CHECK_THROWS_AS(b(K::APlus, 1, 0), std::out_of_range);
  CHECK_THROWS_AS(b(K::JPlus, 1), std::out_of_range);
  CHECK(b(K::JPlus, 3).vars() == 3);

  for (const OperatorName &name : registry_names()) {
    std::string ident = display_name(name);
    auto back = parse_operator_name(ident);
    REQUIRE(back.has_value());
    CHECK(*back == name);
  }
  CHECK(display_name({K::APlus, 2}) == "A2+");
  CHECK(display_name({K::SusyChargeND}) == "Q_susy");
  CHECK(parse_operator_name("A10") == OperatorName{K::AZero, 1});
  CHECK_FALSE(parse_operator_name("J").has_value());
  CHECK_FALSE(parse_operator_name("mu1").has_value());
}

TEST_CASE("building is deterministic") {
  for (const OperatorName &name : registry_names())
    CHECK(build(name, 2) == build(name, 2));
}
