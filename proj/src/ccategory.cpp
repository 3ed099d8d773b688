#include "relcat/ccategory.hpp"

#include <algorithm>

#include "relcat/errors.hpp"

namespace relcat {

namespace {
std::string tuple_pair(const Obj& a, const Obj& b) {
  return "(" + std::to_string(a.size) + "," + std::to_string(b.size) + ")";
}
}  // namespace

CCategory CCategory::finsets() { return CCategory(Ambient::FinSet); }

CCategory CCategory::vec_sums() { return CCategory(Ambient::FinVectSum); }

CCategory CCategory::vec_tensors(std::map<std::size_t, ComonoidData> assignments) {
  CCategory cc(Ambient::FinVectTensor);
  for (const auto& [dim, c] : assignments) {
    if (c.carrier.ambient != Ambient::FinVectTensor || c.carrier.size != dim)
      throw ShapeError("assignment carrier mismatch at dim " + std::to_string(dim));
    if (!check_comonoid(c).all_passed())
      throw ShapeError("assigned structure at dim " + std::to_string(dim) +
                       " is not a comonoid");
    if (!check_sigma_commutative(c))
      throw ShapeError("assigned structure at dim " + std::to_string(dim) +
                       " is not sigma-commutative");
  }
  cc.assignments_ = std::move(assignments);
  return cc;
}

bool CCategory::has_assignment(const Obj& x) const {
  if (x.ambient != ambient()) return false;
  if (ambient() != Ambient::FinVectTensor) return true;
  return assignments_.count(x.size) > 0;
}

Mor CCategory::delta_of(const Obj& x) const {
  if (x.ambient != ambient()) throw AmbientError("delta_of: wrong ambient");
  switch (ambient()) {
    case Ambient::FinSet: return finset_diagonal(x.size).delta;
    case Ambient::FinVectSum: return vec_sum_diagonal(x.size).delta;
    case Ambient::FinVectTensor: {
      auto it = assignments_.find(x.size);
      if (it == assignments_.end())
        throw MissingComponentError("no comonoid assigned to " + obj_name(x));
      return it->second.delta;
    }
  }
  throw AmbientError("delta_of: unknown ambient");
}

Mor CCategory::epsilon_of(const Obj& x) const {
  if (x.ambient != ambient()) throw AmbientError("epsilon_of: wrong ambient");
  switch (ambient()) {
    case Ambient::FinSet:
      return mor_from_table(x, unit(), std::vector<std::size_t>(x.size, 0));
    case Ambient::FinVectSum: return zero_mor(x, unit());
    case Ambient::FinVectTensor: {
      auto it = assignments_.find(x.size);
      if (it == assignments_.end())
        throw MissingComponentError("no comonoid assigned to " + obj_name(x));
      return it->second.epsilon;
    }
  }
  throw AmbientError("epsilon_of: unknown ambient");
}

bool CCategory::is_structured_arrow(const Mor& f) const {
  Mor lhs = compose(delta_of(f.cod), f);
  Mor rhs = compose(tensor_mor(f, f), delta_of(f.dom));
  if (!(lhs == rhs)) return false;
  return compose(epsilon_of(f.cod), f) == epsilon_of(f.dom);
}

ComonoidData product_comonoid(const CCategory& cc, const Obj& a, const Obj& b) {
  Obj ab = cc.tensor(a, b);
  Mor mid = tensor_mor(
      tensor_mor(identity(a), cc.structure().sigma(a, b)), identity(b));
  Mor delta = compose(mid, tensor_mor(cc.delta_of(a), cc.delta_of(b)));
  Mor eps_raw = tensor_mor(cc.epsilon_of(a), cc.epsilon_of(b));
  // e(x)e is the unit itself under the strict conventions.
  Mor eps{ab, cc.unit(), eps_raw.table, eps_raw.matrix};
  Mor d{ab, cc.tensor(ab, ab), delta.table, delta.matrix};
  return {ab, d, eps};
}

Report check_c_category(const CCategory& cc, const std::vector<Obj>& universe,
                        const std::vector<Mor>& generators) {
  Report rep;
  std::size_t bound = 0;
  for (const Obj& o : universe) bound = std::max(bound, o.size);

  {
    CheckResult& row = rep.add("per-object comonoid");
    for (const Obj& x : universe) {
      ComonoidData c{x, cc.delta_of(x), cc.epsilon_of(x)};
      ++row.checked;
      if (!check_comonoid(c).all_passed() || !check_sigma_commutative(c)) {
        row.passed = false;
        row.witness = obj_name(x);
        break;
      }
    }
  }

  {
    CheckResult& drow = rep.add("product-coproduct law");
    CheckResult& erow = rep.add("product-counit law");
    for (const Obj& a : universe)
      for (const Obj& b : universe) {
        Obj ab = cc.tensor(a, b);
        if (ab.size > bound ||
            std::find(universe.begin(), universe.end(), ab) == universe.end()) {
          ++drow.skipped;
          ++erow.skipped;
          continue;
        }
        ComonoidData prod = product_comonoid(cc, a, b);
        ++drow.checked;
        if (!(cc.delta_of(ab) == prod.delta) && drow.passed) {
          drow.passed = false;
          drow.witness = tuple_pair(a, b);
        }
        ++erow.checked;
        if (!(cc.epsilon_of(ab) == prod.epsilon) && erow.passed) {
          erow.passed = false;
          erow.witness = tuple_pair(a, b);
        }
      }
  }

  {
    CheckResult& row = rep.add("delta/epsilon naturality");
    for (std::size_t i = 0; i < generators.size(); ++i) {
      const Mor& f = generators[i];
      ++row.checked;
      bool ok = cc.is_structured_arrow(f);
      if (!ok && row.passed) {
        row.passed = false;
        row.witness = "generator #" + std::to_string(i);
      }
    }
  }

  return rep;
}

}  // namespace relcat
