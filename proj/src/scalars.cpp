#include "dunklcas/scalars.hpp"

#include <algorithm>
#include <sstream>

namespace dunklcas {

ArityMismatch::ArityMismatch(std::size_t lhs, std::size_t rhs)
    : std::invalid_argument("arity mismatch: " + std::to_string(lhs) + " vs " +
                            std::to_string(rhs)) {}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid = [](std::string_view part, bool allow_sign) {
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+'))
      part.remove_prefix(1);
    return !part.empty() &&
           std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid(s, true))
      throw std::invalid_argument("malformed rational: '" + s + "'");
    if (s[0] == '+')
      s.erase(0, 1);
    return Rational(mpz_class(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false))
    throw std::invalid_argument("malformed rational: '" + s + "'");
  if (num[0] == '+')
    num.erase(0, 1);
  mpz_class d(den);
  if (d == 0)
    throw DivisionByZero();
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational &q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// BaseNumber

BaseNumber::BaseNumber(Rational one, Rational i, Rational sqrt2, Rational i_sqrt2)
    : c_{std::move(one), std::move(i), std::move(sqrt2), std::move(i_sqrt2)} {}

bool BaseNumber::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational &q) { return sgn(q) == 0; });
}

bool BaseNumber::is_one() const {
  return c_[kOne] == 1 && sgn(c_[kI]) == 0 && sgn(c_[kSqrt2]) == 0 && sgn(c_[kISqrt2]) == 0;
}

bool BaseNumber::is_rational() const {
  return sgn(c_[kI]) == 0 && sgn(c_[kSqrt2]) == 0 && sgn(c_[kISqrt2]) == 0;
}

int BaseNumber::support() const {
  return static_cast<int>(
      std::count_if(c_.begin(), c_.end(), [](const Rational &q) { return sgn(q) != 0; }));
}

BaseNumber BaseNumber::operator-() const {
  BaseNumber r;
  for (std::size_t k = 0; k < 4; ++k)
    r.c_[k] = -c_[k];
  return r;
}

BaseNumber &BaseNumber::operator+=(const BaseNumber &o) {
  for (std::size_t k = 0; k < 4; ++k)
    if (sgn(o.c_[k]) != 0)
      c_[k] += o.c_[k];
  return *this;
}

BaseNumber &BaseNumber::operator-=(const BaseNumber &o) {
  for (std::size_t k = 0; k < 4; ++k)
    if (sgn(o.c_[k]) != 0)
      c_[k] -= o.c_[k];
  return *this;
}

BaseNumber operator*(const BaseNumber &a, const BaseNumber &b) {
  // Fast path: most coefficients in practice are plain rationals.
  if (a.is_rational()) {
    BaseNumber r;
    if (sgn(a.c_[0]) == 0)
      return r;
    for (std::size_t k = 0; k < 4; ++k)
      if (sgn(b.c_[k]) != 0)
        r.c_[k] = a.c_[0] * b.c_[k];
    return r;
  }
  if (b.is_rational())
    return b * a;

  // basis {1, i, s, is} with i^2 = -1, s^2 = 2
  const auto &[a0, a1, a2, a3] = a.c_;
  const auto &[b0, b1, b2, b3] = b.c_;
  BaseNumber r;
  r.c_[0] = a0 * b0 - a1 * b1 + 2 * a2 * b2 - 2 * a3 * b3;
  r.c_[1] = a0 * b1 + a1 * b0 + 2 * a2 * b3 + 2 * a3 * b2;
  r.c_[2] = a0 * b2 + a2 * b0 - a1 * b3 - a3 * b1;
  r.c_[3] = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
  return r;
}

BaseNumber &BaseNumber::operator*=(const BaseNumber &o) { return *this = *this * o; }

BaseNumber &BaseNumber::operator/=(const BaseNumber &o) { return *this = *this * o.inverse(); }

BaseNumber BaseNumber::inverse() const {
  if (is_zero())
    throw DivisionByZero();
  // Write x = u + v*sqrt2 with u, v in Q(i).  Then x*(u - v*sqrt2) = u^2 - 2v^2
  // lies in Q(i), and w^{-1} = conj(w)/|w|^2 there.
  BaseNumber bar{c_[kOne], c_[kI], -c_[kSqrt2], -c_[kISqrt2]};
  BaseNumber w = *this * bar;
  Rational norm = w.c_[kOne] * w.c_[kOne] + w.c_[kI] * w.c_[kI];
  BaseNumber w_inv{w.c_[kOne] / norm, -w.c_[kI] / norm, 0, 0};
  return bar * w_inv;
}

BaseNumber BaseNumber::conj() const { return {c_[kOne], -c_[kI], c_[kSqrt2], -c_[kISqrt2]}; }

int BaseNumber::real_sign() const {
  if (sgn(c_[kI]) != 0 || sgn(c_[kISqrt2]) != 0)
    throw std::domain_error("sign of a non-real number");
  int a = sgn(c_[kOne]);
  int b = sgn(c_[kSqrt2]);
  if (a == 0)
    return b;
  if (b == 0 || a == b)
    return a;
  // a and b*sqrt2 have opposite signs: compare a^2 against 2*b^2.
  Rational lhs = c_[kOne] * c_[kOne];
  Rational rhs = 2 * c_[kSqrt2] * c_[kSqrt2];
  int c = cmp(lhs, rhs);
  return c == 0 ? 0 : (c > 0 ? a : b);
}

namespace {

// Renders coefficient q times a basis symbol; `symbol` empty for the unit.
std::string render_component(const Rational &q, const char *symbol) {
  std::string sym = symbol;
  if (sym.empty())
    return q.get_str();
  if (q == 1)
    return sym;
  if (q == -1)
    return "-" + sym;
  return q.get_str() + "*" + sym;
}

} // namespace

std::string detail::join_signed(const std::vector<std::string> &parts) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const std::string &p = parts[k];
    if (k == 0)
      out += p;
    else if (!p.empty() && p[0] == '-')
      out += " - " + p.substr(1);
    else
      out += " + " + p;
  }
  return out;
}

using detail::join_signed;

std::string BaseNumber::str() const {
  static constexpr const char *kSymbols[4] = {"", "i", "sqrt2", "i*sqrt2"};
  std::vector<std::string> parts;
  for (std::size_t k = 0; k < 4; ++k)
    if (sgn(c_[k]) != 0)
      parts.push_back(render_component(c_[k], kSymbols[k]));
  if (parts.empty())
    return "0";
  return join_signed(parts);
}

BaseNumber field_arithmetic(const BaseNumber &a, const BaseNumber &b, FieldOp kind) {
  switch (kind) {
  case FieldOp::add:
    return a + b;
  case FieldOp::sub:
    return a - b;
  case FieldOp::mul:
    return a * b;
  case FieldOp::div:
    return a / b;
  }
  throw std::invalid_argument("unknown field operation");
}

// ---------------------------------------------------------------------------
// Scalar

namespace {

bool exps_less(const ParamExponents &a, const ParamExponents &b) { return a < b; }

} // namespace

Scalar::Scalar(std::size_t params) : params_(params) {
  if (params > kMaxVariables)
    throw std::invalid_argument("too many parameters");
}

Scalar::Scalar(std::size_t params, BaseNumber constant) : Scalar(params) {
  if (!constant.is_zero())
    terms_.emplace_back(ParamExponents{}, std::move(constant));
}

Scalar Scalar::parameter(std::size_t params, std::size_t index) {
  if (index >= params)
    throw std::out_of_range("parameter index out of range");
  Scalar s(params);
  ParamExponents e{};
  e[index] = 1;
  s.terms_.emplace_back(e, BaseNumber(1));
  return s;
}

void Scalar::check_arity(const Scalar &o) const {
  if (params_ != o.params_)
    throw ArityMismatch(params_, o.params_);
}

std::optional<BaseNumber> Scalar::constant_value() const {
  if (terms_.empty())
    return BaseNumber();
  if (terms_.size() == 1 && terms_[0].first == ParamExponents{})
    return terms_[0].second;
  return std::nullopt;
}

std::size_t Scalar::degree() const {
  std::size_t d = 0;
  for (const auto &[e, c] : terms_) {
    std::size_t t = 0;
    for (auto k : e)
      t += k;
    d = std::max(d, t);
  }
  return d;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto &[e, c] : r.terms_)
    c = -c;
  return r;
}

Scalar &Scalar::operator+=(const Scalar &o) {
  check_arity(o);
  if (o.terms_.empty())
    return *this;
  if (terms_.empty())
    return *this = o;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && exps_less(i->first, j->first))) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || exps_less(j->first, i->first)) {
      merged.push_back(*j++);
    } else {
      BaseNumber c = std::move(i->second);
      c += j->second;
      if (!c.is_zero())
        merged.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) { return *this += -o; }

Scalar operator*(const Scalar &a, const Scalar &b) {
  a.check_arity(b);
  if (a.terms_.empty() || b.terms_.empty())
    return Scalar(a.params_);
  if (auto c = b.constant_value())
    return a * *c;
  if (auto c = a.constant_value())
    return b * *c;
  std::vector<Scalar::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_) {
      ParamExponents e;
      for (std::size_t k = 0; k < kMaxVariables; ++k)
        e[k] = static_cast<std::uint16_t>(ea[k] + eb[k]);
      prod.emplace_back(e, ca * cb);
    }
  return Scalar::from_terms(a.params_, std::move(prod));
}

Scalar &Scalar::operator*=(const Scalar &o) { return *this = *this * o; }

Scalar &Scalar::operator*=(const BaseNumber &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one())
    return *this;
  for (auto &[e, t] : terms_)
    t = t * c;
  // Q(i, sqrt2) is a field, so no product with nonzero c vanishes.
  return *this;
}

Scalar Scalar::from_terms(std::size_t params, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term &x, const Term &y) { return exps_less(x.first, y.first); });
  Scalar s(params);
  for (auto &t : terms) {
    for (std::size_t k = params; k < kMaxVariables; ++k)
      if (t.first[k] != 0)
        throw std::out_of_range("parameter exponent beyond arity");
    if (!s.terms_.empty() && s.terms_.back().first == t.first) {
      s.terms_.back().second += t.second;
      if (s.terms_.back().second.is_zero())
        s.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      s.terms_.push_back(std::move(t));
    }
  }
  return s;
}

Scalar Scalar::conj() const {
  Scalar r = *this;
  for (auto &[e, c] : r.terms_)
    c = c.conj();
  return r;
}

namespace {

Rational rational_power(const Rational &base, unsigned exp) {
  Rational r = 1;
  for (unsigned k = 0; k < exp; ++k)
    r *= base;
  return r;
}

} // namespace

BaseNumber Scalar::evaluate(std::span<const Rational> values) const {
  if (values.size() != params_)
    throw ArityMismatch(params_, values.size());
  BaseNumber sum;
  for (const auto &[e, c] : terms_) {
    Rational factor = 1;
    for (std::size_t k = 0; k < params_; ++k)
      if (e[k] != 0)
        factor *= rational_power(values[k], e[k]);
    sum += BaseNumber(factor) * c;
  }
  return sum;
}

Scalar Scalar::specialize(std::span<const Rational> values) const {
  if (values.size() > params_)
    throw ArityMismatch(params_, values.size());
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto &[e, c] : terms_) {
    Rational factor = 1;
    ParamExponents rest = e;
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (e[k] != 0)
        factor *= rational_power(values[k], e[k]);
      rest[k] = 0;
    }
    out.emplace_back(rest, BaseNumber(factor) * c);
  }
  return from_terms(params_, std::move(out));
}

std::optional<Scalar> Scalar::divide_exact(const Scalar &divisor) const {
  check_arity(divisor);
  if (divisor.is_zero())
    throw DivisionByZero();
  if (auto c = divisor.constant_value())
    return *this * c->inverse();
  // Multivariate division by a single polynomial under lex order; the
  // leading term is the last (largest) one.
  const auto &[lead_e, lead_c] = divisor.terms_.back();
  BaseNumber lead_inv = lead_c.inverse();
  Scalar remainder = *this;
  Scalar quotient(params_);
  while (!remainder.is_zero()) {
    const auto &[re, rc] = remainder.terms_.back();
    ParamExponents q_e{};
    for (std::size_t k = 0; k < kMaxVariables; ++k) {
      if (re[k] < lead_e[k])
        return std::nullopt;
      q_e[k] = static_cast<std::uint16_t>(re[k] - lead_e[k]);
    }
    Scalar step = from_terms(params_, {Term{q_e, rc * lead_inv}});
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

std::string Scalar::str() const {
  if (terms_.empty())
    return "0";
  std::vector<std::string> parts;
  for (const auto &[e, c] : terms_) {
    std::string mono;
    for (std::size_t k = 0; k < params_; ++k) {
      if (e[k] == 0)
        continue;
      if (!mono.empty())
        mono += "*";
      mono += "mu" + std::to_string(k + 1);
      if (e[k] != 1)
        mono += "^" + std::to_string(e[k]);
    }
    std::string coef = c.str();
    if (mono.empty())
      parts.push_back(c.support() > 1 ? "(" + coef + ")" : coef);
    else if (c.is_one())
      parts.push_back(mono);
    else if ((-c).is_one())
      parts.push_back("-" + mono);
    else if (c.support() > 1)
      parts.push_back("(" + coef + ")*" + mono);
    else
      parts.push_back(coef + "*" + mono);
  }
  // A lone constant with several components does not need its own parens.
  if (terms_.size() == 1 && terms_[0].first == ParamExponents{})
    return terms_[0].second.str();
  return join_signed(parts);
}

bool Scalar::is_compound() const {
  if (terms_.size() > 1)
    return true;
  return terms_.size() == 1 && terms_[0].first == ParamExponents{} &&
         terms_[0].second.support() > 1;
}

Scalar poly_arithmetic(const Scalar &a, const Scalar &b, FieldOp kind) {
  switch (kind) {
  case FieldOp::add:
    return a + b;
  case FieldOp::sub:
    return a - b;
  case FieldOp::mul:
    return a * b;
  case FieldOp::div:
    break;
  }
  throw std::invalid_argument("polynomial division is not a ring operation");
}

} // namespace dunklcas
