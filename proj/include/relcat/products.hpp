#pragma once

#include "relcat/relation.hpp"

namespace relcat {

/// Unconstrained product on B(x)E:
///   (b1 [x] b2)_l = (delta_l (x) 1_E), (b1 [x] b2)_r = (1_B (x) gamma_r).
Bicomodule box_product(const CCategory& cc, const Bicomodule& b1,
                       const Bicomodule& b2);

/// Relation-side form of the box product:
///   r [.] s = (gamma(x)beta) . ((1(x)eps)(x)(eps(x)1)) . (r(x)s).
Relation boxdot(const CCategory& cc, const Relation& r, const Relation& s);

/// Tensor product of bicomodules: the equalizer of (1_B (x) gamma_l) and
/// (delta_r (x) 1_E) inside B(x)E, carrying the induced coactions.
struct TensorResult {
  Bicomodule product;
  Mor pi;  // mono inclusion X -> B(x)E
  /// FinSet only: X element -> (left factor, right factor) indices.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

TensorResult tensor_relations(const CCategory& cc, const Bicomodule& b1,
                              const Bicomodule& b2);

/// Relation-side tensor: composable pairs with endpoint map
///   (r (.) s) = (gamma(x)beta) . (1(x)eps(x)eps(x)1) . (r(x)s) . pi.
Relation odot(const CCategory& cc, const Relation& r, const Relation& s);

/// f (x)^A g: the unique factorization of (f(x)g) . pi_src through pi_dst.
/// Throws FactorizationFailure when no factorization exists.
Mor tensor_bicom_mor(const CCategory& cc, const TensorResult& src,
                     const TensorResult& dst, const Mor& f, const Mor& g);

/// Induced left/right unit constraints l = beta.(eps(x)1).pi_{a,d} and
/// r = gamma.(1(x)eps).pi_{d,a}.
Mor induced_l(const CCategory& cc, const Bicomodule& d);
Mor induced_r(const CCategory& cc, const Bicomodule& d);

/// The associativity constraint between the two nested tensors, i.e. the
/// restriction of the ambient alpha. Throws InducedConstraintFailure when
/// the restriction does not land in the target equalizer.
Mor induced_m(const CCategory& cc, const Bicomodule& b1, const Bicomodule& b2,
              const Bicomodule& b3);

struct InducedConstraints {
  Mor m;  // b1 (x) (b2 (x) b3) -> (b1 (x) b2) (x) b3
  Mor l;  // a (x) b1 -> b1
  Mor r;  // b1 (x) a -> b1
  Report report;
};

/// m, l, r plus the coherence report: iso checks, the three defining
/// squares, the triangle for (b1, a, b2), and l_a == r_a.
InducedConstraints induced_constraints(const CCategory& cc, const Bicomodule& b1,
                                       const Bicomodule& b2, const Bicomodule& b3);

/// MacLane pentagon for the induced associativity on four bicomodules.
bool pentagon_m(const CCategory& cc, const Bicomodule& b1, const Bicomodule& b2,
                const Bicomodule& b3, const Bicomodule& b4);

/// Induced symmetry s: b1 (x) b2 -> (b2* (x) b1*)*, the factorization of
/// sigma_{B,E} . pi through the starred inclusion.
Mor induced_symmetry(const CCategory& cc, const Bicomodule& b1,
                     const Bicomodule& b2);

/// The symmetry identities: involution, both unit identities (for b1 and
/// b2), a* == a, and the hexagon-analogue on (b1, b2, b3).
Report symmetry_report(const CCategory& cc, const Bicomodule& b1,
                       const Bicomodule& b2, const Bicomodule& b3);

}  // namespace relcat
