#pragma once

// Registry of relation families.  Each identity is checked by building both
// sides in the Dunkl realization and testing that the normal-form residual
// lhs - rhs is exactly zero, either for all mu (parametric) or at given
// rational mu (numeric).

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dunklcas/opalg.hpp"

namespace dunklcas {

enum class MuMode { parametric, numeric };

struct CheckOptions {
  MuMode mode = MuMode::parametric;
  /// Values for mu_1, mu_2, ...; non-empty iff mode is numeric.  A family in
  /// more dimensions than values keeps the remaining parameters symbolic.
  std::vector<Rational> mu;
  /// Use the deliberately broken variant of families that have one.
  bool perturb = false;
};

struct IdentityResult {
  std::string label;
  OperatorElement residual;
  bool passed;
  std::size_t residual_terms;
};

struct RelationReport {
  std::string family;
  MuMode mode;
  std::vector<IdentityResult> identities;
  double seconds = 0;

  bool passed() const;
};

class UnknownFamily : public std::invalid_argument {
public:
  explicit UnknownFamily(const std::string &id)
      : std::invalid_argument("unknown relation family '" + id + "'") {}
};

struct FamilyInfo {
  std::string id;
  std::string summary;
  bool has_perturbation;
};

/// Stable, ordered list.  Families that consume H inside structure
/// constants come after the ones establishing its centrality.
const std::vector<FamilyInfo> &families();
std::vector<std::string> list_families();

RelationReport check(std::string_view id, const CheckOptions &options = {});
std::vector<RelationReport> check_all(const CheckOptions &options = {}, bool parallel = true);

} // namespace dunklcas
