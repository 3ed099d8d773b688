#pragma once

#include <optional>

#include "relcat/products.hpp"

namespace relcat {

/// A monoid object in the category of relations on rel.base: an
/// associative composition mu on composable pairs and an identity-arrow
/// map unit, both morphisms of relations.
struct RelMonoid {
  Relation rel;
  Mor mu;    // carrier of rel (.) rel -> rel.dom
  Mor unit;  // rel.base -> rel.dom
};

/// mu/unit are relation morphisms, mu is associative through the induced
/// associativity constraint, and unit is a two-sided unit through l and r.
Report check_rel_monoid(const CCategory& cc, const RelMonoid& m);

/// Inclusion relation of a reflexive transitive edge set with
/// mu((x,y),(y,z)) = (x,z) and unit(x) = (x,x). Edges are stored sorted.
/// Throws NotReflexiveError / NotTransitiveError with a witness.
RelMonoid monoid_from_preorder(
    const CCategory& cc, std::size_t n,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges);

/// Searches for a monoid isomorphism onto the arrow-reversed monoid:
/// a bijection with f.phi = g, g.phi = f, phi.unit = unit and
/// phi(mu(x,y)) = mu(phi(y), phi(x)). Returns the witness or nullopt
/// after exhausting all bijections. FinSet only; BoundsExceededError when
/// the arrow set exceeds the search bound.
std::optional<Mor> check_commutative(const CCategory& cc, const RelMonoid& m,
                                     std::size_t search_bound = 8);

struct GeneratedStages {
  std::vector<Relation> stages;  // r, r(.)r, (r(.)r)(.)r, ...
  /// pairs[k] (k >= 1): carrier element of stage k -> (stage k-1 element,
  /// generator element).
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs;
  /// Identity-arrow embeddings per stage when a unit map was supplied.
  std::vector<Mor> embeddings;
};

/// Left-nested odot powers of a relation; the stage-k carrier is the set
/// of length-k composable arrow strings. A supplied unit map is validated
/// (InvalidUnitMapError) and threaded through every stage.
GeneratedStages generate_category(const CCategory& cc, const Relation& r,
                                  const std::optional<Mor>& unit_map,
                                  std::size_t depth);

}  // namespace relcat
