#pragma once

#include <map>

#include "relcat/comonoid.hpp"

namespace relcat {

/// An ambient category together with the fixed sigma-commutative comonoid
/// carried by every object. FinSet and FinVectSum have their canonical
/// (and unique) structure; FinVectTensor takes an explicit dimension ->
/// comonoid assignment, since one object can carry several structures.
class CCategory {
 public:
  static CCategory finsets();
  static CCategory vec_sums();
  static CCategory vec_tensors(std::map<std::size_t, ComonoidData> assignments);

  Ambient ambient() const { return structure_.ambient; }
  const MonoidalStructure& structure() const { return structure_; }
  Obj unit() const { return structure_.unit(); }
  Obj tensor(const Obj& x, const Obj& y) const { return structure_.tensor(x, y); }

  /// Coproduct / counit of an object. FinVectTensor objects outside the
  /// assignment throw MissingComponentError.
  Mor delta_of(const Obj& x) const;
  Mor epsilon_of(const Obj& x) const;
  bool has_assignment(const Obj& x) const;

  /// Is f compatible with the per-object structure, i.e. an arrow of the
  /// structured category: delta . f == (f(x)f) . delta and eps . f == eps.
  bool is_structured_arrow(const Mor& f) const;

 private:
  explicit CCategory(Ambient a) : structure_(builtin_structure(a)) {}
  MonoidalStructure structure_;
  std::map<std::size_t, ComonoidData> assignments_;
};

/// Per object: comonoid laws + sigma-commutativity. Per pair: the product
/// decomposition laws delta_{AB} = (1(x)sigma(x)1).(delta_A(x)delta_B) and
/// eps_{AB} = eps_A(x)eps_B. Per generator: naturality of delta and eps.
Report check_c_category(const CCategory& cc, const std::vector<Obj>& universe,
                        const std::vector<Mor>& generators);

/// The induced comonoid on A(x)B given by the product decomposition laws.
ComonoidData product_comonoid(const CCategory& cc, const Obj& a, const Obj& b);

}  // namespace relcat
