#pragma once

// Gaussian-envelope states p(x) exp(-|x|^2/2) with Laurent polynomial p.
// The ungauged Dunkl operators act on them without leaving the space, which
// gives exact spectra, degeneracies and ladder coefficients.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dunklcas/opalg.hpp"

namespace dunklcas {

class PoleError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class GaussState {
public:
  explicit GaussState(LaurentPolynomial p) : p_(std::move(p)) {}
  /// p = 1 in the dims-variable space with dims parameters.
  static GaussState ground(std::size_t dims);

  const LaurentPolynomial &polynomial() const { return p_; }
  std::size_t vars() const { return p_.vars(); }
  std::size_t params() const { return p_.params(); }
  bool is_zero() const { return p_.is_zero(); }

  friend GaussState operator+(const GaussState &a, const GaussState &b) {
    return GaussState(a.p_ + b.p_);
  }
  friend GaussState operator*(const GaussState &a, const Scalar &c) { return GaussState(a.p_ * c); }
  friend bool operator==(const GaussState &, const GaussState &) = default;

  std::string str() const { return p_.str(); }

private:
  LaurentPolynomial p_;
};

enum class PolePolicy {
  /// Throw PoleError if the result has a negative exponent.
  reject,
  /// Keep Laurent results (used when the state itself is Laurent).
  allow,
};

/// Exact action: d_i (p e) = (d_i p - x_i p) e, while x_i and R_i act on p.
GaussState apply(const OperatorElement &a, const GaussState &s,
                 PolePolicy policy = PolePolicy::reject);

/// prod_i (A_+^{(i)})^{n_i} applied to the ground state, unnormalized.  The
/// number of occupations fixes the dimension.
GaussState fock(std::span<const unsigned> occupations);
GaussState fock(std::initializer_list<unsigned> occupations);

/// lambda with a s = lambda s, or nullopt if s is not an eigenstate.
/// Throws std::invalid_argument for the zero state.
std::optional<Scalar> eigencheck(const OperatorElement &a, const GaussState &s,
                                 PolePolicy policy = PolePolicy::reject);

/// lambda with s = lambda t, or nullopt; t must be nonzero.
std::optional<Scalar> proportionality(const GaussState &s, const GaussState &t);

struct SpectrumRow {
  unsigned level;
  Rational energy;
  unsigned degeneracy;
};

/// Energies and degeneracies of the dims-dimensional Dunkl oscillator at the
/// given mu for levels 0..max_level.  dims must be 1 or 2.  Throws
/// std::logic_error if the Fock states of a level do not share one energy.
std::vector<SpectrumRow> spectrum_table(std::size_t dims, std::span<const Rational> mu,
                                        unsigned max_level);

/// c_k with A_- fock(k) = c_k fock(k-1), k = 1..max_n, in one dimension and
/// parametric in mu.
std::vector<Scalar> ladder_norm_coefficients(unsigned max_n);
/// The same coefficients evaluated at a rational mu.
std::vector<Rational> ladder_norm_coefficients(unsigned max_n, const Rational &mu);
/// True iff every c_k, k <= max_n, is strictly positive at mu.
bool admissible(unsigned max_n, const Rational &mu);

} // namespace dunklcas
