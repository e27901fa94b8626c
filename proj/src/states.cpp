#include "dunklcas/states.hpp"

#include <set>

#include "dunklcas/builders.hpp"

namespace dunklcas {

namespace {

void reflect(LaurentPolynomial &p, std::size_t v) {
  LaurentPolynomial out(p.vars(), p.params());
  for (const auto &[e, c] : p.terms())
    out.add_term(e, (e[v] & 1) ? -c : c);
  p = std::move(out);
}

// p -> d_v p - x_v p, the derivative seen through the Gaussian envelope.
void envelope_derivative(LaurentPolynomial &p, std::size_t v) {
  LaurentPolynomial out(p.vars(), p.params());
  for (const auto &[e, c] : p.terms()) {
    if (e[v] != 0) {
      Exponents lower = e;
      lower[v] -= 1;
      out.add_term(lower, c * BaseNumber(Rational(e[v])));
    }
    Exponents higher = e;
    higher[v] += 1;
    out.add_term(higher, -c);
  }
  p = std::move(out);
}

void shift(LaurentPolynomial &p, std::size_t v, std::int32_t by) {
  if (by == 0)
    return;
  LaurentPolynomial out(p.vars(), p.params());
  for (const auto &[e, c] : p.terms()) {
    Exponents moved = e;
    moved[v] += by;
    out.add_term(moved, c);
  }
  p = std::move(out);
}

} // namespace

GaussState GaussState::ground(std::size_t dims) {
  return GaussState(LaurentPolynomial::constant(dims, Scalar(dims, 1)));
}

GaussState apply(const OperatorElement &a, const GaussState &s, PolePolicy policy) {
  if (a.vars() != s.vars())
    throw ArityMismatch(a.vars(), s.vars());
  if (a.params() != s.params())
    throw ArityMismatch(a.params(), s.params());
  LaurentPolynomial result(s.vars(), s.params());
  for (const auto &[m, c] : a.terms()) {
    LaurentPolynomial p = s.polynomial();
    for (std::size_t v = 0; v < s.vars(); ++v) {
      const Factor &f = m[v];
      if (f.r)
        reflect(p, v);
      for (unsigned k = 0; k < f.d; ++k)
        envelope_derivative(p, v);
      shift(p, v, f.x);
    }
    result += p * c;
  }
  if (policy == PolePolicy::reject && result.has_negative_exponent())
    throw PoleError("operator leaves a pole in the state: " + result.str());
  return GaussState(std::move(result));
}

GaussState fock(std::span<const unsigned> occupations) {
  const std::size_t dims = occupations.size();
  GaussState s = GaussState::ground(dims);
  for (std::size_t v = 0; v < dims; ++v) {
    OperatorElement raise = build(OperatorName{OperatorKind::APlus, v + 1}, dims);
    for (unsigned k = 0; k < occupations[v]; ++k)
      s = apply(raise, s);
  }
  return s;
}

GaussState fock(std::initializer_list<unsigned> occupations) {
  return fock(std::span<const unsigned>(occupations.begin(), occupations.size()));
}

std::optional<Scalar> proportionality(const GaussState &s, const GaussState &t) {
  if (t.is_zero())
    throw std::invalid_argument("proportionality to the zero state");
  if (s.vars() != t.vars())
    throw ArityMismatch(s.vars(), t.vars());
  if (s.is_zero())
    return Scalar(t.params());
  const auto &[lead, lead_c] = *t.polynomial().terms().rbegin();
  std::optional<Scalar> lambda = s.polynomial().coefficient(lead).divide_exact(lead_c);
  if (!lambda || !(t * *lambda == s))
    return std::nullopt;
  return lambda;
}

std::optional<Scalar> eigencheck(const OperatorElement &a, const GaussState &s,
                                 PolePolicy policy) {
  if (s.is_zero())
    throw std::invalid_argument("eigencheck on the zero state");
  return proportionality(apply(a, s, policy), s);
}

namespace {

Rational as_rational(const BaseNumber &b) {
  if (!b.is_rational())
    throw std::logic_error("expected a rational value, got " + b.str());
  return b[BaseNumber::kOne];
}

} // namespace

std::vector<SpectrumRow> spectrum_table(std::size_t dims, std::span<const Rational> mu,
                                        unsigned max_level) {
  if (dims != 1 && dims != 2)
    throw std::invalid_argument("spectrum tables are defined for dims 1 and 2");
  if (mu.size() != dims)
    throw ArityMismatch(dims, mu.size());
  OperatorElement hamiltonian =
      dims == 1 ? build(OperatorName{OperatorKind::Hamiltonian1D, 1}, 1)
                : build(OperatorName{OperatorKind::Hamiltonian2D, 0}, 2);
  hamiltonian = substitute_params(hamiltonian, mu);

  std::vector<SpectrumRow> rows;
  for (unsigned level = 0; level <= max_level; ++level) {
    std::optional<Rational> energy;
    std::set<Exponents> leading;
    for (unsigned n1 = 0; n1 <= level; ++n1) {
      if (dims == 1 && n1 != level)
        continue;
      std::vector<unsigned> occ = dims == 1 ? std::vector<unsigned>{level}
                                            : std::vector<unsigned>{n1, level - n1};
      GaussState s = fock(occ);
      s = GaussState(s.polynomial().substitute_params(mu));
      std::optional<Scalar> lambda = eigencheck(hamiltonian, s);
      if (!lambda)
        throw std::logic_error("Fock state is not an energy eigenstate");
      Rational e = as_rational(lambda->evaluate(mu));
      if (energy && *energy != e)
        throw std::logic_error("Fock states of one level have different energies");
      energy = e;
      leading.insert(s.polynomial().terms().rbegin()->first);
    }
    rows.push_back({level, *energy, static_cast<unsigned>(leading.size())});
  }
  return rows;
}

std::vector<Scalar> ladder_norm_coefficients(unsigned max_n) {
  OperatorElement raise = build(OperatorName{OperatorKind::APlus, 1}, 1);
  OperatorElement lower = build(OperatorName{OperatorKind::AMinus, 1}, 1);
  std::vector<Scalar> out;
  GaussState previous = GaussState::ground(1);
  for (unsigned k = 1; k <= max_n; ++k) {
    GaussState current = apply(raise, previous);
    std::optional<Scalar> c = proportionality(apply(lower, current), previous);
    if (!c)
      throw std::logic_error("A_- does not map fock(k) onto fock(k-1)");
    out.push_back(*c);
    previous = std::move(current);
  }
  return out;
}

std::vector<Rational> ladder_norm_coefficients(unsigned max_n, const Rational &mu) {
  std::vector<Rational> out;
  const Rational values[] = {mu};
  for (const Scalar &c : ladder_norm_coefficients(max_n))
    out.push_back(as_rational(c.evaluate(values)));
  return out;
}

bool admissible(unsigned max_n, const Rational &mu) {
  for (const Rational &c : ladder_norm_coefficients(max_n, mu))
    if (sgn(c) <= 0)
      return false;
  return true;
}

} // namespace dunklcas
