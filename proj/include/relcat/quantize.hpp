#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>

#include "relcat/comonoid.hpp"
#include "relcat/monoidal.hpp"

namespace relcat {

/// Involutive generator of the two-element group acting on the object
/// universe. Objects are (ambient, size) pairs, so a non-identity action
/// must be size-preserving; morphisms transport by body reuse.
struct ObjAction {
  std::map<std::size_t, std::size_t> object_map;  // empty entries = fixed

  bool trivial() const { return object_map.empty(); }
  Obj map_obj(const Obj& x) const;
  Mor map_mor(const Mor& f) const;
};

/// A deformation triple (lambda, mu, eta): component tables over a finite
/// object universe, with naturality checked against declared generators.
/// mu must also cover the pairwise tensor closure of the universe (its
/// components enter the twisted symmetry at product objects).
struct QuantTriple {
  Ambient ambient = Ambient::FinVectTensor;
  std::vector<Obj> universe;
  std::map<std::array<std::size_t, 2>, Mor> lambda;  // (X,Y) -> endo of X(x)Y
  std::map<std::size_t, Mor> mu;                     // X -> T(X)
  Mor eta;                                           // unit -> unit
  ObjAction action;
  std::vector<Mor> generators;

  std::optional<Mor> try_lambda(const Obj& x, const Obj& y) const;
  Mor lambda_at(const Obj& x, const Obj& y) const;
  std::optional<Mor> try_mu(const Obj& x) const;
  Mor mu_at(const Obj& x) const;
};

/// Identity element of the deformation group on the given universe.
QuantTriple identity_triple(Ambient a, const std::vector<Obj>& universe,
                            const std::vector<Mor>& generators);

/// Componentwise product; `first` acts first, then `second`, so that
/// hat(hat(s, first), second) == hat(s, triple_product(second, first)).
QuantTriple triple_product(const QuantTriple& second, const QuantTriple& first);

/// Naturality of all three components plus the four subgroup relations:
/// mu is t-involutive, compatible with both unit embeddings, and fixes eta.
Report check_h_membership(const QuantTriple& t);

/// The deformation action on a symmetric monoidal structure:
///   alpha^ = (l^-1 (x) 1) . l^-1 . alpha . l . (1 (x) l)
///   beta^  = beta . l_{e,Y} . (eta (x) 1)
///   gamma^ = gamma . l_{X,e} . (1 (x) eta)
///   sigma^ = T(mu^-1 (x) mu^-1) . T(l^-1) . mu . sigma . l
/// emitted as an override-table structure over t.universe. With
/// verify=true the output is run through the full checker and a failure
/// raises TheoremViolation.
MonoidalStructure hat_transform(const MonoidalStructure& s, const QuantTriple& t,
                                bool verify = true);

/// A functor between (subcategories of) the concrete ambients, given by an
/// object map on the universe and a morphism transport, together with its
/// deformation triple.
struct FunctorData {
  std::map<std::size_t, Obj> object_map;  // keyed by source object size
  std::function<Mor(const Mor&)> morphism_map;  // identity when empty
  QuantTriple triple;

  Obj map_obj(const Obj& x) const;
  Mor map_mor(const Mor& f) const;
};

FunctorData identity_functor(const QuantTriple& t);

/// The five object equations relating source and target structures
/// through (F, lambda, mu, eta), plus functor sanity on generators.
Report check_quantized_functor(const FunctorData& fd, const MonoidalStructure& s1,
                               const MonoidalStructure& s2);

/// Composite functor data: lambda_{GF} = G(lambda_F) . lambda_G,
/// mu_{GF} = mu_G . G(mu_F), eta_{GF} = G(eta_F) . eta_G.
FunctorData compose_quantized(const FunctorData& g, const FunctorData& f);

/// A monoid object in a monoidal structure.
struct MonoidObject {
  Obj carrier;
  Mor product;  // X(x)X -> X
  Mor unit;     // e -> X
};

/// Associativity and unit laws against the given structure's components.
Report check_monoid_object(const MonoidalStructure& s, const MonoidObject& m);

/// Commutativity through the structure's symmetry: the witness is an iso
/// phi with (product . sigma) . (phi (x) phi) == phi . product and
/// phi . unit == unit.
bool check_commutative_monoid_object(const MonoidalStructure& s,
                                     const MonoidObject& m, const Mor& witness);

struct QuantizedMonoid {
  MonoidObject monoid;
  std::optional<Mor> witness;  // transported commutativity witness
  Report report;
};

/// Transport of a monoid along a quantized functor: product^ = F(product)
/// . lambda_{X,X}, unit^ = F(unit) . eta, witness^ = F(phi) . T(mu_X).
/// Throws SourceNotMonoidError when the input fails the source laws.
QuantizedMonoid quantize_monoid(const MonoidObject& mon, const FunctorData& fd,
                                const MonoidalStructure& source,
                                const MonoidalStructure& target,
                                const std::optional<Mor>& commut_witness);

/// Dual transport of a comonoid: delta^ = lambda^-1 . F(delta),
/// epsilon^ = eta^-1 . F(epsilon).
ComonoidData quantize_comonoid(const ComonoidData& c, const FunctorData& fd);

/// Comonoid laws measured against an arbitrary structure's components.
Report check_comonoid_in(const MonoidalStructure& s, const ComonoidData& c);

/// One generator of the graded twist group acting on plain monoidal
/// structures: a natural family X(x)Y -> X(x)Y (grade 1) or
/// X(x)Y -> Y(x)X (grade t).
struct MonoidalTwist {
  bool t_graded = false;
  Ambient ambient = Ambient::FinVectTensor;
  std::map<std::array<std::size_t, 2>, Mor> comp;

  std::optional<Mor> try_at(const Obj& x, const Obj& y) const;
  Mor at(const Obj& x, const Obj& y) const;
};

/// Twisted monoidal structure (alpha, beta, gamma only; sigma untouched):
/// grade-1 conjugation or the grade-t transform built from the inverse
/// associativity at reversed objects.
MonoidalStructure apply_twist(const MonoidalStructure& s, const MonoidalTwist& tw,
                              const std::vector<Obj>& universe);

/// Graded product; `first` acts first. Grades multiply (XOR), and the
/// first factor's component is evaluated at the transposed pair when the
/// second factor is t-graded.
MonoidalTwist twist_product(const MonoidalTwist& second, const MonoidalTwist& first);

}  // namespace relcat
