#pragma once

// Registry of the named operators of the Dunkl oscillator model: Dunkl
// derivatives, ladder operators, Schwinger-Dunkl symmetries, the Hahn
// superalgebra generators, gauge-rotated and conformal realizations, and the
// supersymmetric charges.  Every operator is built exactly, parametric in
// mu_1..mu_n, inside the n-variable algebra (n = dims).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dunklcas/opalg.hpp"

namespace dunklcas {

enum class OperatorKind {
  // raw generators
  Coordinate,
  Derivative,
  Reflection,
  // one variable
  DunklDerivative,
  Hamiltonian1D,
  APlus,
  AMinus,
  AZero,
  BPlus,
  BMinus,
  GaugedH,
  GaugedAPlus,
  GaugedAMinus,
  ConformalQ,
  ConformalS,
  ConformalH,
  ConformalK,
  ConformalD,
  SusyCharge1D,
  SusyH1D,
  // the plane (variables 1 and 2)
  Hamiltonian2D,
  JPlus,
  JMinus,
  JZero,
  CasimirSD,
  PParity,
  GaugedH2D,
  KPlus,
  KMinus,
  K0,
  K1,
  K2,
  E0,
  E1,
  E2,
  FPlus,
  FMinus,
  GaugedJPlus,
  GaugedJMinus,
  GaugedJZero,
  GaugedKPlus,
  GaugedKMinus,
  // all dims variables
  SusyChargeND,
  SusyHND,
};

/// Identifies one registry operator.  `index` is the 1-based variable for
/// one-variable kinds and is ignored otherwise.
struct OperatorName {
  OperatorKind kind;
  std::size_t index = 0;

  friend bool operator==(const OperatorName &, const OperatorName &) = default;
};

bool is_indexed(OperatorKind kind);
/// Minimum dimension needed to build the operator.
std::size_t required_dims(const OperatorName &name);

/// Builds the operator in the dims-variable algebra with parameters
/// mu_1..mu_dims.  Throws std::out_of_range if the index or the plane does
/// not fit in dims.
OperatorElement build(const OperatorName &name, std::size_t dims);

/// DSL identifier, e.g. "J+", "A1-", "Qc2", "Q_susy".
std::string display_name(const OperatorName &name);
/// Inverse of display_name; nullopt for unknown identifiers.  The index is
/// not checked against any dimension here.
std::optional<OperatorName> parse_operator_name(std::string_view ident);
/// Every kind with a representative index of 1, in registry order.
std::vector<OperatorName> registry_names();

class ParityViolation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Potentials V (even) and W (odd) of a one-variable supercharge.  Both are
/// single-variable Laurent polynomials; parity is checked on construction.
class SuperpotentialPair {
public:
  SuperpotentialPair(LaurentPolynomial v, LaurentPolynomial w);

  const LaurentPolynomial &v() const { return v_; }
  const LaurentPolynomial &w() const { return w_; }
  std::size_t params() const { return v_.params(); }

private:
  LaurentPolynomial v_;
  LaurentPolynomial w_;
};

/// Q = (d + V) R / sqrt2 + W / sqrt2 acting on variable `var` (0-based) of a
/// dims-variable algebra.  The pair's parameter count must equal dims.
OperatorElement build_generic_supercharge(const SuperpotentialPair &vw, std::size_t dims = 1,
                                          std::size_t var = 0);
/// (-d^2 + V^2 + W^2 + V' - W' R) / 2, assembled term by term.
OperatorElement generic_susy_hamiltonian(const SuperpotentialPair &vw, std::size_t dims = 1,
                                         std::size_t var = 0);

struct SusyPair {
  OperatorElement charge;
  OperatorElement hamiltonian;
};

/// charge = sum_i Q_i R_{i+1} ... R_n, hamiltonian = sum_i Q_i^2.
SusyPair build_susy_nd(std::size_t n);

} // namespace dunklcas
