#pragma once

#include <utility>

#include "relcat/ccategory.hpp"

namespace relcat {

/// A relation on `base`: an arrow dom -> base(x)base of the structured
/// category. The base is stored explicitly because a codomain size alone
/// does not determine the decomposition.
struct Relation {
  Obj base;
  Obj dom;
  Mor arrow;
};

/// Validates shapes and (in the linear ambients) compatibility with the
/// per-object structure; throws InvalidRelationError.
Relation make_relation(const CCategory& cc, const Obj& base, const Mor& arrow);

/// Directed-graph sugar: vertices {0..n-1}, arrows = the edge list in the
/// given order, relation = source/target map.
Relation graph_relation(const CCategory& cc, std::size_t vertices,
                        const std::vector<std::pair<std::size_t, std::size_t>>& edges);

/// FinSet helpers: source f and target g of each arrow (r(b) = (f(b), g(b))).
std::vector<std::size_t> rel_sources(const Relation& r);
std::vector<std::size_t> rel_targets(const Relation& r);

/// The identity relation delta_A on its base.
Relation identity_relation(const CCategory& cc, const Obj& base);

/// A pair of coactions on `carrier`: delta_l: B -> A(x)B, delta_r: B -> B(x)A.
struct Bicomodule {
  Obj base;
  Obj carrier;
  Mor delta_l;
  Mor delta_r;
};

/// The unit bicomodule a = {delta_A, delta_A}.
Bicomodule unit_bicomodule(const CCategory& cc, const Obj& base);

/// Relation -> bicomodule:
///   delta_l = (gamma(x)1) . ((1(x)eps)(x)1) . (r(x)1) . delta_B
///   delta_r = (1(x)beta) . (1(x)(eps(x)1)) . (1(x)r) . delta_B
Bicomodule phi(const CCategory& cc, const Relation& r);

/// Bicomodule -> relation:
///   r = (1(x)beta) . (1(x)(eps_B(x)1)) . (1(x)delta_r) . delta_l
Relation psi(const CCategory& cc, const Bicomodule& b);

/// The five coaction laws: left/right coassociativity, left/right counit,
/// and the compatibility square.
Report check_bicomodule(const CCategory& cc, const Bicomodule& b);

struct RelMorphism {
  Relation from;
  Relation to;
  Mor map;
};

/// Commuting triangle to.arrow . map == from.arrow.
bool check_rel_morphism(const CCategory& cc, const RelMorphism& m);

/// The two coaction squares (1(x)f).delta_l == gamma_l.f etc.
bool check_bicomodule_morphism(const CCategory& cc, const Bicomodule& from,
                               const Bicomodule& to, const Mor& f);

/// Star involution: (b*)_l = sigma_{B,A} . delta_r, (b*)_r = sigma_{A,B} . delta_l.
Bicomodule star(const CCategory& cc, const Bicomodule& b);
/// r* = sigma_{A,A} . r (arrow reversal for graphs).
Relation star_relation(const CCategory& cc, const Relation& r);

}  // namespace relcat
