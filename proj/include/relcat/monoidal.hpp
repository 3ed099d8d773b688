#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "relcat/morphism.hpp"
#include "relcat/report.hpp"

namespace relcat {

enum class ConstraintKind { Alpha, Beta, Gamma, Sigma };

/// Built-in strict components under the fixed row-major index convention:
/// alpha/beta/gamma are identities, sigma is the pair swap (FinSet and
/// FinVectTensor) or the block swap (FinVectSum).
Mor builtin_sigma(const Obj& x, const Obj& y);

/// A symmetric monoidal structure on one of the concrete ambients.
/// Componentwise override tables (keyed by object sizes) take precedence
/// over the strict built-ins; a non-empty table for a kind makes that kind
/// resolve through the table only.
struct MonoidalStructure {
  Ambient ambient = Ambient::FinSet;
  std::map<std::array<std::size_t, 3>, Mor> alpha_override;
  std::map<std::array<std::size_t, 2>, Mor> beta_override;
  std::map<std::array<std::size_t, 2>, Mor> gamma_override;
  std::map<std::array<std::size_t, 2>, Mor> sigma_override;

  Obj unit() const { return unit_object(ambient); }
  Obj tensor(const Obj& x, const Obj& y) const { return tensor_object(x, y); }

  std::optional<Mor> try_alpha(const Obj& x, const Obj& y, const Obj& z) const;
  std::optional<Mor> try_beta(const Obj& x, const Obj& y) const;
  std::optional<Mor> try_gamma(const Obj& x, const Obj& y) const;
  std::optional<Mor> try_sigma(const Obj& x, const Obj& y) const;

  // Throwing accessors (MissingComponentError).
  Mor alpha(const Obj& x, const Obj& y, const Obj& z) const;
  Mor beta(const Obj& x, const Obj& y) const;
  Mor gamma(const Obj& x, const Obj& y) const;
  Mor sigma(const Obj& x, const Obj& y) const;
};

MonoidalStructure builtin_structure(Ambient a);

/// constraint(kind, objs): tuple arity is 3 for alpha, 2 otherwise.
Mor constraint(const MonoidalStructure& s, ConstraintKind kind,
               const std::vector<Obj>& objs);

/// Verifies pentagon, triangle, the e-tensor-e unit equation, Yang-Baxter,
/// the sigma involution, and naturality of every constraint against the
/// given generating morphisms. `symmetric=false` drops the sigma laws
/// (plain monoidal check). Throws UniverseNotClosedError when the universe
/// is not tensor-closed within its own size bound or lacks the unit.
Report check_symmetric_monoidal(const MonoidalStructure& s,
                                const std::vector<Obj>& universe,
                                const std::vector<Mor>& generators,
                                bool symmetric = true);

}  // namespace relcat
