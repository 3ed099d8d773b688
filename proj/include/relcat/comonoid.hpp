#pragma once

#include <cstdint>
#include <vector>

#include "relcat/monoidal.hpp"

namespace relcat {

/// A coproduct/counit pair on one object of a concrete ambient.
struct ComonoidData {
  Obj carrier;
  Mor delta;    // carrier -> carrier (x) carrier
  Mor epsilon;  // carrier -> unit
};

/// Coassociativity plus both counit laws (counit laws skipped in
/// cosemigroup mode). Shape violations throw ShapeError.
Report check_comonoid(const ComonoidData& c, bool cosemigroup_only = false);

/// sigma_{A,A} . delta == delta.
bool check_sigma_commutative(const ComonoidData& c);

/// delta injective / full column rank. True for every comonoid.
bool check_coproduct_mono(const ComonoidData& c);

/// The unique FinSet comonoid: diagonal coproduct, constant counit.
ComonoidData finset_diagonal(std::size_t n);
/// The unique FinVectSum comonoid: a |-> (a, a), zero counit.
ComonoidData vec_sum_diagonal(std::size_t n);
/// Basis-diagonal coproduct on FinVectTensor: delta(e_i) = e_i (x) e_i,
/// epsilon(e_i) = 1.
ComonoidData grouplike(std::size_t n);
/// FinSet cosemigroup delta(x) = (x0, x); fails the counit laws for n > 1.
ComonoidData pointed_cosemigroup(std::size_t n, std::size_t basepoint);

/// One-parameter dimension-2 comonoid family over the rationals:
/// delta(a1) = a1(x)a1, delta(a2) = -x a1(x)a1 + a1(x)a2 + a2(x)a1,
/// eps = (1, x).
ComonoidData dim2_comonoid_family(const Rat& x);

/// Convolution coalgebra of functions on a finite group given by its
/// multiplication table. Validates the table (NotAGroupError).
ComonoidData function_coalgebra(const std::vector<std::vector<std::size_t>>& mul);

/// Cosemigroup delta(a) = (f(a), g(a)) on FinVectSum from a commuting pair
/// of projectors. Throws NotProjectorsError / NotCommutingError.
ComonoidData projector_cosemigroup(const Mor& f, const Mor& g);

/// delta/epsilon coefficients over the prime field F_p:
/// delta(a_i) = sum r[i][j][k] a_j(x)a_k, eps(a_i) = q[i].
struct FieldComonoid {
  unsigned p = 2;
  std::size_t dim = 0;
  std::vector<std::vector<std::vector<unsigned>>> r;
  std::vector<unsigned> q;

  /// Integer-lift matrices (entries 0..p-1) as a FinVectTensor pair.
  ComonoidData lift() const;
};

/// Exhaustive solution of the comonoid equations over F_p. Brute-force
/// bound: dim <= 2 and p <= 5 (BoundsExceededError above). Deterministic
/// lexicographic output order.
std::vector<FieldComonoid> solve_comonoid_equations(std::size_t dim, unsigned p);

/// Comonoid laws with all comparisons taken mod p (entries must be
/// integers). Used to cross-check the solver's output.
bool check_comonoid_mod(const ComonoidData& c, unsigned p);

}  // namespace relcat
