#include "dunklcas/builders.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace dunklcas {

namespace {

struct NameEntry {
  OperatorKind kind;
  const char *prefix;
  const char *suffix; // indexed kinds: prefix <digits> suffix; else exact prefix
  bool indexed;
};

// Order matters only for display; parsing tries every entry.
constexpr NameEntry kNames[] = {
    {OperatorKind::Coordinate, "x", "", true},
    {OperatorKind::Derivative, "d", "", true},
    {OperatorKind::Reflection, "R", "", true},
    {OperatorKind::DunklDerivative, "D", "", true},
    {OperatorKind::Hamiltonian1D, "H", "", true},
    {OperatorKind::APlus, "A", "+", true},
    {OperatorKind::AMinus, "A", "-", true},
    {OperatorKind::AZero, "A", "0", true},
    {OperatorKind::BPlus, "B", "+", true},
    {OperatorKind::BMinus, "B", "-", true},
    {OperatorKind::GaugedH, "Ht", "", true},
    {OperatorKind::GaugedAPlus, "At", "+", true},
    {OperatorKind::GaugedAMinus, "At", "-", true},
    {OperatorKind::ConformalQ, "Qc", "", true},
    {OperatorKind::ConformalS, "Sc", "", true},
    {OperatorKind::ConformalH, "Hc", "", true},
    {OperatorKind::ConformalK, "Kc", "", true},
    {OperatorKind::ConformalD, "Dc", "", true},
    {OperatorKind::SusyCharge1D, "Q", "", true},
    {OperatorKind::SusyH1D, "Hs", "", true},
    {OperatorKind::Hamiltonian2D, "H", "", false},
    {OperatorKind::JPlus, "J+", "", false},
    {OperatorKind::JMinus, "J-", "", false},
    {OperatorKind::JZero, "J0", "", false},
    {OperatorKind::CasimirSD, "C", "", false},
    {OperatorKind::PParity, "P", "", false},
    {OperatorKind::GaugedH2D, "Htilde", "", false},
    {OperatorKind::KPlus, "K+", "", false},
    {OperatorKind::KMinus, "K-", "", false},
    {OperatorKind::K0, "K0", "", false},
    {OperatorKind::K1, "K1", "", false},
    {OperatorKind::K2, "K2", "", false},
    {OperatorKind::E0, "E0", "", false},
    {OperatorKind::E1, "E1", "", false},
    {OperatorKind::E2, "E2", "", false},
    {OperatorKind::FPlus, "F+", "", false},
    {OperatorKind::FMinus, "F-", "", false},
    {OperatorKind::GaugedJPlus, "Jt+", "", false},
    {OperatorKind::GaugedJMinus, "Jt-", "", false},
    {OperatorKind::GaugedJZero, "Jt0", "", false},
    {OperatorKind::GaugedKPlus, "Kt+", "", false},
    {OperatorKind::GaugedKMinus, "Kt-", "", false},
    {OperatorKind::SusyChargeND, "Q_susy", "", false},
    {OperatorKind::SusyHND, "H_susy", "", false},
};

const NameEntry &entry_for(OperatorKind kind) {
  for (const auto &e : kNames)
    if (e.kind == kind)
      return e;
  throw std::invalid_argument("unregistered operator kind");
}

// Shorthands for one dims-variable algebra with parameters mu_1..mu_dims.
class Algebra {
public:
  explicit Algebra(std::size_t dims) : n_(dims) {}

  OperatorElement c(BaseNumber value) const { return OperatorElement(n_, Scalar(n_, value)); }
  OperatorElement c(Scalar value) const { return OperatorElement(n_, std::move(value)); }
  Scalar mu(std::size_t v) const { return Scalar::parameter(n_, v); }
  OperatorElement x(std::size_t v, int k = 1) const {
    return OperatorElement::coordinate(n_, n_, v, k);
  }
  OperatorElement d(std::size_t v, unsigned k = 1) const {
    return OperatorElement::derivative(n_, n_, v, k);
  }
  OperatorElement r(std::size_t v) const { return OperatorElement::reflection(n_, n_, v); }

  static BaseNumber half() { return BaseNumber(Rational(1, 2)); }

private:
  std::size_t n_;
};

OperatorElement build_uncached(const OperatorName &name, std::size_t n);

OperatorElement cached(const OperatorName &name, std::size_t n) {
  // build() is referentially transparent, so memoizing is unobservable.
  static std::mutex mutex;
  static std::map<std::tuple<int, std::size_t, std::size_t>, OperatorElement> cache;
  auto key = std::make_tuple(static_cast<int>(name.kind), name.index, n);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end())
      return it->second;
  }
  OperatorElement value = build_uncached(name, n);
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(value)).first->second;
}

OperatorElement get(OperatorKind kind, std::size_t n, std::size_t index = 0) {
  return cached(OperatorName{kind, index}, n);
}

OperatorElement build_uncached(const OperatorName &name, std::size_t n) {
  Algebra alg(n);
  const std::size_t v = name.index == 0 ? 0 : name.index - 1;
  const std::size_t i = name.index;
  const BaseNumber half = Algebra::half();
  const BaseNumber inv_sqrt2 = BaseNumber::inv_sqrt2();

  switch (name.kind) {
  case OperatorKind::Coordinate:
    return alg.x(v);
  case OperatorKind::Derivative:
    return alg.d(v);
  case OperatorKind::Reflection:
    return alg.r(v);

  case OperatorKind::DunklDerivative: {
    // d + (mu/x)(1 - R)
    OperatorElement mu_over_x = alg.x(v, -1) * alg.mu(v);
    return alg.d(v) + mu_over_x - mu_over_x * alg.r(v);
  }
  case OperatorKind::Hamiltonian1D: {
    OperatorElement dunkl = get(OperatorKind::DunklDerivative, n, i);
    return (dunkl * dunkl) * -half + alg.x(v, 2) * half;
  }
  case OperatorKind::APlus:
    return (alg.x(v) - get(OperatorKind::DunklDerivative, n, i)) * inv_sqrt2;
  case OperatorKind::AMinus:
    return (alg.x(v) + get(OperatorKind::DunklDerivative, n, i)) * inv_sqrt2;
  case OperatorKind::AZero:
    return get(OperatorKind::Hamiltonian1D, n, i);
  case OperatorKind::BPlus: {
    OperatorElement a = get(OperatorKind::APlus, n, i);
    return (a * a) * half;
  }
  case OperatorKind::BMinus: {
    OperatorElement a = get(OperatorKind::AMinus, n, i);
    return (a * a) * half;
  }

  case OperatorKind::GaugedH: {
    // (-d^2 + x^2 + mu^2/x^2 - (mu/x^2) R) / 2
    Scalar mu = alg.mu(v);
    OperatorElement x_m2 = alg.x(v, -2);
    return (-alg.d(v, 2) + alg.x(v, 2) + x_m2 * (mu * mu) - x_m2 * alg.r(v) * mu) * half;
  }
  case OperatorKind::GaugedAPlus:
    return (alg.x(v) - alg.d(v) + alg.x(v, -1) * alg.r(v) * alg.mu(v)) * inv_sqrt2;
  case OperatorKind::GaugedAMinus:
    return (alg.x(v) + alg.d(v) - alg.x(v, -1) * alg.r(v) * alg.mu(v)) * inv_sqrt2;

  case OperatorKind::ConformalQ:
    return (alg.d(v) * alg.r(v) - alg.x(v, -1) * alg.mu(v)) * inv_sqrt2;
  case OperatorKind::ConformalS:
    return alg.x(v) * alg.r(v) * (BaseNumber::imaginary_unit() * inv_sqrt2);
  case OperatorKind::ConformalH: {
    Scalar mu = alg.mu(v);
    OperatorElement x_m2 = alg.x(v, -2);
    return (-alg.d(v, 2) + x_m2 * (mu * mu) - x_m2 * alg.r(v) * mu) * half;
  }
  case OperatorKind::ConformalK:
    return alg.x(v, 2) * half;
  case OperatorKind::ConformalD:
    // (i/2)(x d + 1/2)
    return (alg.x(v) * alg.d(v) + alg.c(half)) * (BaseNumber::imaginary_unit() * half);

  case OperatorKind::SusyCharge1D: {
    LaurentPolynomial zero(1, n);
    LaurentPolynomial w(1, n);
    w.add_term(Exponents{1}, Scalar(n, 1));
    w.add_term(Exponents{-1}, -alg.mu(v));
    return build_generic_supercharge(SuperpotentialPair(zero, w), n, v);
  }
  case OperatorKind::SusyH1D: {
    // gauge-form Hamiltonian written out, minus R/2 and mu
    Scalar mu = alg.mu(v);
    OperatorElement x_m2 = alg.x(v, -2);
    OperatorElement kinetic =
        (-alg.d(v, 2) + alg.x(v, 2) + x_m2 * (mu * mu) - x_m2 * alg.r(v) * mu) * half;
    return kinetic - alg.r(v) * half - alg.c(mu);
  }

  case OperatorKind::Hamiltonian2D:
    return get(OperatorKind::Hamiltonian1D, n, 1) + get(OperatorKind::Hamiltonian1D, n, 2);
  case OperatorKind::JPlus:
    return get(OperatorKind::APlus, n, 1) * get(OperatorKind::AMinus, n, 2);
  case OperatorKind::JMinus:
    return get(OperatorKind::AMinus, n, 1) * get(OperatorKind::APlus, n, 2);
  case OperatorKind::JZero:
    return get(OperatorKind::Hamiltonian1D, n, 1) - get(OperatorKind::Hamiltonian1D, n, 2);
  case OperatorKind::CasimirSD: {
    OperatorElement j0 = get(OperatorKind::JZero, n);
    OperatorElement reflections =
        alg.r(0) * alg.mu(0) + alg.r(1) * alg.mu(1); // mu1 R1 + mu2 R2
    return j0 * j0 +
           anticommutator(get(OperatorKind::JPlus, n), get(OperatorKind::JMinus, n)) *
               BaseNumber(2) +
           reflections * BaseNumber(2) + alg.r(0) * alg.r(1) * (alg.mu(0) * alg.mu(1)) * BaseNumber(4);
  }
  case OperatorKind::PParity:
    return alg.r(0) * alg.r(1);
  case OperatorKind::GaugedH2D: {
    OperatorElement h = (alg.d(0, 2) + alg.d(1, 2)) * -half;
    Scalar mu1 = alg.mu(0), mu2 = alg.mu(1);
    h += (alg.x(0, 2) + alg.x(1, 2) + alg.x(0, -2) * (mu1 * mu1) + alg.x(1, -2) * (mu2 * mu2)) *
         half;
    h -= alg.x(0, -2) * alg.r(0) * (mu1 * half);
    h -= alg.x(1, -2) * alg.r(1) * (mu2 * half);
    return h;
  }

  case OperatorKind::KPlus: {
    OperatorElement j = get(OperatorKind::JPlus, n);
    return j * j;
  }
  case OperatorKind::KMinus: {
    OperatorElement j = get(OperatorKind::JMinus, n);
    return j * j;
  }
  case OperatorKind::K0:
  case OperatorKind::E0:
    return get(OperatorKind::JZero, n) * BaseNumber(Rational(1, 8));
  case OperatorKind::K1: {
    OperatorElement j0 = get(OperatorKind::JZero, n);
    return (get(OperatorKind::KPlus, n) + get(OperatorKind::KMinus, n) + (j0 * j0) * half) *
           BaseNumber(Rational(1, 8));
  }
  case OperatorKind::K2:
    return commutator(get(OperatorKind::K0, n), get(OperatorKind::K1, n));
  case OperatorKind::E1: {
    OperatorElement jp = get(OperatorKind::JPlus, n);
    OperatorElement jm = get(OperatorKind::JMinus, n);
    OperatorElement j0 = get(OperatorKind::JZero, n);
    return (jp * jp + jm * jm + (j0 * j0) * half) * BaseNumber(Rational(1, 8));
  }
  case OperatorKind::E2: {
    OperatorElement jp = get(OperatorKind::JPlus, n);
    OperatorElement jm = get(OperatorKind::JMinus, n);
    return (jp * jp - jm * jm) * BaseNumber(Rational(1, 16));
  }
  case OperatorKind::FPlus:
    return get(OperatorKind::JPlus, n);
  case OperatorKind::FMinus:
    return get(OperatorKind::JMinus, n);

  case OperatorKind::GaugedJPlus:
    return get(OperatorKind::GaugedAPlus, n, 1) * get(OperatorKind::GaugedAMinus, n, 2);
  case OperatorKind::GaugedJMinus:
    return get(OperatorKind::GaugedAMinus, n, 1) * get(OperatorKind::GaugedAPlus, n, 2);
  case OperatorKind::GaugedJZero:
    return get(OperatorKind::GaugedH, n, 1) - get(OperatorKind::GaugedH, n, 2);
  case OperatorKind::GaugedKPlus: {
    OperatorElement j = get(OperatorKind::GaugedJPlus, n);
    return j * j;
  }
  case OperatorKind::GaugedKMinus: {
    OperatorElement j = get(OperatorKind::GaugedJMinus, n);
    return j * j;
  }

  case OperatorKind::SusyChargeND:
    return build_susy_nd(n).charge;
  case OperatorKind::SusyHND:
    return build_susy_nd(n).hamiltonian;
  }
  throw std::invalid_argument("unknown operator kind");
}

} // namespace

bool is_indexed(OperatorKind kind) { return entry_for(kind).indexed; }

std::size_t required_dims(const OperatorName &name) {
  if (is_indexed(name.kind))
    return name.index;
  switch (name.kind) {
  case OperatorKind::SusyChargeND:
  case OperatorKind::SusyHND:
    return 1;
  default:
    return 2;
  }
}

OperatorElement build(const OperatorName &name, std::size_t dims) {
  if (dims == 0 || dims > kMaxVariables)
    throw std::out_of_range("dimension must be in 1.." + std::to_string(kMaxVariables));
  if (is_indexed(name.kind) && name.index == 0)
    throw std::out_of_range(display_name(name) + ": variable index must be at least 1");
  if (required_dims(name) > dims)
    throw std::out_of_range(display_name(name) + " needs at least " +
                            std::to_string(required_dims(name)) + " dimensions, have " +
                            std::to_string(dims));
  OperatorName key = name;
  if (!is_indexed(key.kind))
    key.index = 0;
  return cached(key, dims);
}

std::string display_name(const OperatorName &name) {
  const NameEntry &e = entry_for(name.kind);
  if (!e.indexed)
    return e.prefix;
  return std::string(e.prefix) + std::to_string(name.index) + e.suffix;
}

std::optional<OperatorName> parse_operator_name(std::string_view ident) {
  for (const auto &e : kNames) {
    std::string_view prefix = e.prefix;
    std::string_view suffix = e.suffix;
    if (!e.indexed) {
      if (ident == prefix)
        return OperatorName{e.kind, 0};
      continue;
    }
    if (ident.size() <= prefix.size() + suffix.size() || !ident.starts_with(prefix) ||
        !ident.ends_with(suffix))
      continue;
    std::string_view digits =
        ident.substr(prefix.size(), ident.size() - prefix.size() - suffix.size());
    if (!std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      continue;
    if (digits.size() > 3)
      continue;
    return OperatorName{e.kind, static_cast<std::size_t>(std::stoul(std::string(digits)))};
  }
  return std::nullopt;
}

std::vector<OperatorName> registry_names() {
  std::vector<OperatorName> out;
  for (const auto &e : kNames)
    out.push_back(OperatorName{e.kind, e.indexed ? std::size_t{1} : std::size_t{0}});
  return out;
}

// ---------------------------------------------------------------------------
// Supersymmetric charges

namespace {

void require_parity(const LaurentPolynomial &p, int parity, const char *what) {
  if (p.vars() != 1)
    throw ParityViolation(std::string(what) + " must be a one-variable Laurent polynomial");
  for (const auto &[e, c] : p.terms())
    if (((e[0] % 2) + 2) % 2 != parity)
      throw ParityViolation(std::string(what) + (parity ? " must be odd" : " must be even"));
}

// Embeds a one-variable Laurent polynomial as a multiplication operator on
// variable `var` of a dims-variable algebra.
OperatorElement multiplication_operator(const LaurentPolynomial &p, std::size_t dims,
                                        std::size_t var) {
  if (p.params() != dims)
    throw ArityMismatch(dims, p.params());
  OperatorElement out(dims, dims);
  for (const auto &[e, c] : p.terms())
    out += OperatorElement::coordinate(dims, dims, var, e[0]) * c;
  return out;
}

LaurentPolynomial derivative_of(const LaurentPolynomial &p) {
  return act(OperatorElement::derivative(1, p.params(), 0), p);
}

} // namespace

SuperpotentialPair::SuperpotentialPair(LaurentPolynomial v, LaurentPolynomial w)
    : v_(std::move(v)), w_(std::move(w)) {
  require_parity(v_, 0, "V");
  require_parity(w_, 1, "W");
  if (v_.params() != w_.params())
    throw ArityMismatch(v_.params(), w_.params());
}

OperatorElement build_generic_supercharge(const SuperpotentialPair &vw, std::size_t dims,
                                          std::size_t var) {
  if (var >= dims)
    throw std::out_of_range("variable index out of range");
  OperatorElement d = OperatorElement::derivative(dims, dims, var);
  OperatorElement r = OperatorElement::reflection(dims, dims, var);
  OperatorElement v = multiplication_operator(vw.v(), dims, var);
  OperatorElement w = multiplication_operator(vw.w(), dims, var);
  return ((d + v) * r + w) * BaseNumber::inv_sqrt2();
}

OperatorElement generic_susy_hamiltonian(const SuperpotentialPair &vw, std::size_t dims,
                                         std::size_t var) {
  if (var >= dims)
    throw std::out_of_range("variable index out of range");
  const LaurentPolynomial &v = vw.v();
  const LaurentPolynomial &w = vw.w();
  OperatorElement sum = -OperatorElement::derivative(dims, dims, var, 2);
  sum += multiplication_operator(v * v, dims, var);
  sum += multiplication_operator(w * w, dims, var);
  sum += multiplication_operator(derivative_of(v), dims, var);
  sum -= multiplication_operator(derivative_of(w), dims, var) *
         OperatorElement::reflection(dims, dims, var);
  return sum * BaseNumber(Rational(1, 2));
}

SusyPair build_susy_nd(std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("supersymmetric model needs n >= 1");
  if (n > kMaxVariables)
    throw std::out_of_range("dimension exceeds the supported maximum");
  SusyPair out{OperatorElement(n, n), OperatorElement(n, n)};
  for (std::size_t i = 1; i <= n; ++i) {
    OperatorElement q = build(OperatorName{OperatorKind::SusyCharge1D, i}, n);
    OperatorElement tail = q;
    for (std::size_t j = i; j < n; ++j)
      tail = tail * OperatorElement::reflection(n, n, j);
    out.charge += tail;
    out.hamiltonian += q * q;
  }
  return out;
}

} // namespace dunklcas
