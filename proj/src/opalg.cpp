#include "dunklcas/opalg.hpp"

#include <stdexcept>

namespace dunklcas {

namespace {

void check_vars(std::size_t vars) {
  if (vars == 0 || vars > kMaxVariables)
    throw std::invalid_argument("variable count must be in 1.." + std::to_string(kMaxVariables));
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer coefficient overflow in normal ordering");
  return r;
}

} // namespace

std::int64_t falling_factorial(std::int64_t a, unsigned k) {
  std::int64_t r = 1;
  for (unsigned j = 0; j < k; ++j)
    r = checked_mul(r, a - static_cast<std::int64_t>(j));
  return r;
}

std::int64_t binomial(unsigned n, unsigned k) {
  if (k > n)
    return 0;
  std::int64_t r = 1;
  for (unsigned j = 1; j <= k; ++j)
    r = checked_mul(r, n - k + j) / j;
  return r;
}

std::string Monomial::str(std::size_t vars) const {
  std::string out;
  auto append = [&out](const std::string &s) {
    if (!out.empty())
      out += "*";
    out += s;
  };
  for (std::size_t v = 0; v < vars; ++v) {
    const Factor &f = f_[v];
    std::string idx = std::to_string(v + 1);
    if (f.x == 1)
      append("x" + idx);
    else if (f.x != 0)
      append("x" + idx + "^" + std::to_string(f.x));
    if (f.d == 1)
      append("d" + idx);
    else if (f.d != 0)
      append("d" + idx + "^" + std::to_string(f.d));
    if (f.r)
      append("R" + idx);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// OperatorElement

OperatorElement::OperatorElement(std::size_t vars, std::size_t params)
    : vars_(vars), params_(params) {
  check_vars(vars);
}

OperatorElement::OperatorElement(std::size_t vars, Scalar constant)
    : OperatorElement(vars, constant.params()) {
  if (!constant.is_zero())
    terms_.emplace(Monomial{}, std::move(constant));
}

OperatorElement OperatorElement::monomial(std::size_t vars, const Monomial &m, Scalar c) {
  OperatorElement e(vars, c.params());
  for (std::size_t v = vars; v < kMaxVariables; ++v)
    if (!(m[v] == Factor{}))
      throw std::out_of_range("monomial uses a variable beyond the arity");
  if (!c.is_zero())
    e.terms_.emplace(m, std::move(c));
  return e;
}

OperatorElement OperatorElement::coordinate(std::size_t vars, std::size_t params,
                                            std::size_t var, int power) {
  if (var >= vars)
    throw std::out_of_range("variable index out of range");
  Monomial m;
  m[var].x = power;
  return monomial(vars, m, Scalar(params, 1));
}

OperatorElement OperatorElement::derivative(std::size_t vars, std::size_t params,
                                            std::size_t var, unsigned power) {
  if (var >= vars)
    throw std::out_of_range("variable index out of range");
  Monomial m;
  m[var].d = static_cast<std::uint16_t>(power);
  return monomial(vars, m, Scalar(params, 1));
}

OperatorElement OperatorElement::reflection(std::size_t vars, std::size_t params,
                                            std::size_t var) {
  if (var >= vars)
    throw std::out_of_range("variable index out of range");
  Monomial m;
  m[var].r = 1;
  return monomial(vars, m, Scalar(params, 1));
}

void OperatorElement::check_arity(const OperatorElement &o) const {
  if (vars_ != o.vars_)
    throw ArityMismatch(vars_, o.vars_);
  if (params_ != o.params_)
    throw ArityMismatch(params_, o.params_);
}

Scalar OperatorElement::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(params_) : it->second;
}

void OperatorElement::add_term(const Monomial &m, const Scalar &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

OperatorElement OperatorElement::operator-() const {
  OperatorElement r = *this;
  for (auto &[m, c] : r.terms_)
    c = -c;
  return r;
}

OperatorElement &OperatorElement::operator+=(const OperatorElement &o) {
  check_arity(o);
  for (const auto &[m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

OperatorElement &OperatorElement::operator-=(const OperatorElement &o) {
  check_arity(o);
  for (const auto &[m, c] : o.terms_)
    add_term(m, -c);
  return *this;
}

OperatorElement &OperatorElement::operator*=(const Scalar &c) {
  if (c.params() != params_)
    throw ArityMismatch(params_, c.params());
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

OperatorElement &OperatorElement::operator*=(const BaseNumber &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, s] : terms_)
    s *= c;
  return *this;
}

namespace {

struct FactorTerm {
  std::int64_t coef;
  Factor factor;
};

// (x^a1 d^b1 R^e1)(x^a2 d^b2 R^e2) for one variable.  Moving R^e1 right picks
// up (-1)^{e1 (a2 + b2)}; d^b x^a = sum_k C(b,k) a(a-1)..(a-k+1) x^{a-k} d^{b-k}.
void multiply_factor(const Factor &f, const Factor &g, std::vector<FactorTerm> &out) {
  out.clear();
  std::int64_t sign = (f.r && ((g.x + g.d) & 1)) ? -1 : 1;
  std::uint8_t r = f.r ^ g.r;
  for (unsigned k = 0; k <= f.d; ++k) {
    std::int64_t ff = falling_factorial(g.x, k);
    if (ff == 0)
      break; // a >= 0 and k > a: every later term vanishes as well
    std::int64_t c = checked_mul(checked_mul(sign, binomial(f.d, k)), ff);
    Factor h;
    h.x = f.x + g.x - static_cast<std::int32_t>(k);
    h.d = static_cast<std::uint16_t>(f.d + g.d - k);
    h.r = r;
    out.push_back({c, h});
  }
}

} // namespace

OperatorElement operator*(const OperatorElement &a, const OperatorElement &b) {
  a.check_arity(b);
  OperatorElement result(a.vars_, a.params_);
  if (a.is_zero() || b.is_zero())
    return result;

  const std::size_t n = a.vars_;
  std::vector<std::vector<FactorTerm>> per_var(n);
  // Expanded (integer coefficient, monomial) list for one pair of monomials.
  std::vector<std::pair<std::int64_t, Monomial>> expansion, next;

  for (const auto &[ma, ca] : a.terms_) {
    for (const auto &[mb, cb] : b.terms_) {
      for (std::size_t v = 0; v < n; ++v)
        multiply_factor(ma[v], mb[v], per_var[v]);
      expansion.assign(1, {1, Monomial{}});
      for (std::size_t v = 0; v < n; ++v) {
        next.clear();
        for (const auto &[c, m] : expansion)
          for (const auto &ft : per_var[v]) {
            Monomial mm = m;
            mm[v] = ft.factor;
            next.emplace_back(checked_mul(c, ft.coef), mm);
          }
        std::swap(expansion, next);
      }
      Scalar cab = ca * cb;
      for (const auto &[c, m] : expansion) {
        if (c == 1)
          result.add_term(m, cab);
        else
          result.add_term(m, cab * BaseNumber(Rational(c)));
      }
    }
  }
  return result;
}

std::string OperatorElement::str() const {
  if (terms_.empty())
    return "0";
  std::vector<std::string> parts;
  bool several = terms_.size() > 1;
  for (const auto &[m, c] : terms_) {
    std::string coef = c.str();
    if (m.is_identity()) {
      parts.push_back(several && c.is_compound() ? "(" + coef + ")" : coef);
      continue;
    }
    std::string mono = m.str(vars_);
    if (coef == "1")
      parts.push_back(mono);
    else if (coef == "-1")
      parts.push_back("-" + mono);
    else if (c.is_compound())
      parts.push_back("(" + coef + ")*" + mono);
    else
      parts.push_back(coef + "*" + mono);
  }
  return detail::join_signed(parts);
}

OperatorElement OperatorElement::from_terms(std::size_t vars, std::size_t params,
                                            std::span<const std::pair<Monomial, Scalar>> terms) {
  OperatorElement e(vars, params);
  for (const auto &[m, c] : terms) {
    if (c.params() != params)
      throw ArityMismatch(params, c.params());
    e.add_term(m, c);
  }
  return e;
}

OperatorElement multiply(const OperatorElement &a, const OperatorElement &b) { return a * b; }

OperatorElement linear_combine(std::span<const std::pair<Scalar, OperatorElement>> pairs) {
  if (pairs.empty())
    throw std::invalid_argument("linear_combine needs at least one pair to fix the arity");
  OperatorElement sum(pairs.front().second.vars(), pairs.front().second.params());
  for (const auto &[c, e] : pairs)
    sum += e * c;
  return sum;
}

OperatorElement commutator(const OperatorElement &a, const OperatorElement &b) {
  return a * b - b * a;
}

OperatorElement anticommutator(const OperatorElement &a, const OperatorElement &b) {
  return a * b + b * a;
}

OperatorElement adjoint(const OperatorElement &a) {
  const std::size_t n = a.vars();
  const std::size_t p = a.params();
  OperatorElement result(n, p);
  for (const auto &[m, c] : a.terms()) {
    // (x^a d^b R^e)^dagger = R^e (-d)^b x^a, one variable block at a time.
    OperatorElement term(n, c.conj());
    for (std::size_t v = 0; v < n; ++v) {
      const Factor &f = m[v];
      Monomial r_part, d_part, x_part;
      r_part[v].r = f.r;
      d_part[v].d = f.d;
      x_part[v].x = f.x;
      BaseNumber sign = (f.d & 1) ? BaseNumber(-1) : BaseNumber(1);
      OperatorElement block = OperatorElement::monomial(n, r_part, Scalar(p, 1)) *
                              OperatorElement::monomial(n, d_part, Scalar(p, sign)) *
                              OperatorElement::monomial(n, x_part, Scalar(p, 1));
      term = term * block;
    }
    result += term;
  }
  return result;
}

OperatorElement power(const OperatorElement &a, unsigned k) {
  OperatorElement r(a.vars(), Scalar(a.params(), 1));
  for (unsigned j = 0; j < k; ++j)
    r = r * a;
  return r;
}

OperatorElement substitute_params(const OperatorElement &a, std::span<const Rational> values) {
  if (values.size() != a.params())
    throw ArityMismatch(a.params(), values.size());
  return specialize_params(a, values);
}

OperatorElement specialize_params(const OperatorElement &a, std::span<const Rational> values) {
  std::vector<std::pair<Monomial, Scalar>> terms;
  terms.reserve(a.term_count());
  for (const auto &[m, c] : a.terms())
    terms.emplace_back(m, c.specialize(values));
  return OperatorElement::from_terms(a.vars(), a.params(), terms);
}

// ---------------------------------------------------------------------------
// LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(std::size_t vars, std::size_t params)
    : vars_(vars), params_(params) {
  check_vars(vars);
}

LaurentPolynomial LaurentPolynomial::monomial(std::size_t vars, const Exponents &e, Scalar c) {
  LaurentPolynomial p(vars, c.params());
  p.add_term(e, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t vars, Scalar c) {
  return monomial(vars, Exponents{}, std::move(c));
}

void LaurentPolynomial::check_arity(const LaurentPolynomial &o) const {
  if (vars_ != o.vars_)
    throw ArityMismatch(vars_, o.vars_);
  if (params_ != o.params_)
    throw ArityMismatch(params_, o.params_);
}

bool LaurentPolynomial::has_negative_exponent() const {
  for (const auto &[e, c] : terms_)
    for (std::size_t v = 0; v < vars_; ++v)
      if (e[v] < 0)
        return true;
  return false;
}

Scalar LaurentPolynomial::coefficient(const Exponents &e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(params_) : it->second;
}

void LaurentPolynomial::add_term(const Exponents &e, const Scalar &c) {
  if (c.params() != params_)
    throw ArityMismatch(params_, c.params());
  for (std::size_t v = vars_; v < kMaxVariables; ++v)
    if (e[v] != 0)
      throw std::out_of_range("exponent beyond the variable count");
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto &[e, c] : r.terms_)
    c = -c;
  return r;
}

LaurentPolynomial &LaurentPolynomial::operator+=(const LaurentPolynomial &o) {
  check_arity(o);
  for (const auto &[e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

LaurentPolynomial &LaurentPolynomial::operator-=(const LaurentPolynomial &o) {
  check_arity(o);
  for (const auto &[e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

LaurentPolynomial &LaurentPolynomial::operator*=(const Scalar &c) {
  if (c.params() != params_)
    throw ArityMismatch(params_, c.params());
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[e, s] : terms_)
    s *= c;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b) {
  a.check_arity(b);
  LaurentPolynomial r(a.vars_, a.params_);
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_) {
      Exponents e{};
      for (std::size_t v = 0; v < a.vars_; ++v)
        e[v] = ea[v] + eb[v];
      r.add_term(e, ca * cb);
    }
  return r;
}

LaurentPolynomial LaurentPolynomial::substitute_params(std::span<const Rational> values) const {
  if (values.size() != params_)
    throw ArityMismatch(params_, values.size());
  LaurentPolynomial r(vars_, params_);
  for (const auto &[e, c] : terms_)
    r.add_term(e, c.specialize(values));
  return r;
}

std::string LaurentPolynomial::str() const {
  if (terms_.empty())
    return "0";
  std::vector<std::string> parts;
  bool several = terms_.size() > 1;
  for (const auto &[e, c] : terms_) {
    Monomial m;
    for (std::size_t v = 0; v < vars_; ++v)
      m[v].x = e[v];
    std::string coef = c.str();
    if (m.is_identity()) {
      parts.push_back(several && c.is_compound() ? "(" + coef + ")" : coef);
      continue;
    }
    std::string mono = m.str(vars_);
    if (coef == "1")
      parts.push_back(mono);
    else if (coef == "-1")
      parts.push_back("-" + mono);
    else if (c.is_compound())
      parts.push_back("(" + coef + ")*" + mono);
    else
      parts.push_back(coef + "*" + mono);
  }
  return detail::join_signed(parts);
}

LaurentPolynomial act(const OperatorElement &a, const LaurentPolynomial &f) {
  if (a.vars() != f.vars())
    throw ArityMismatch(a.vars(), f.vars());
  if (a.params() != f.params())
    throw ArityMismatch(a.params(), f.params());
  LaurentPolynomial result(f.vars(), f.params());
  for (const auto &[m, c] : a.terms()) {
    for (const auto &[e, fc] : f.terms()) {
      // Each variable block acts as R first, then d^b, then x^a.
      std::int64_t coef = 1;
      Exponents out = e;
      for (std::size_t v = 0; v < f.vars() && coef != 0; ++v) {
        const Factor &fac = m[v];
        if (fac.r && (out[v] & 1))
          coef = -coef;
        coef = checked_mul(coef, falling_factorial(out[v], fac.d));
        out[v] = out[v] - fac.d + fac.x;
      }
      if (coef == 0)
        continue;
      result.add_term(out, c * fc * BaseNumber(Rational(coef)));
    }
  }
  return result;
}

} // namespace dunklcas
