#include "relcat/relation.hpp"

#include "relcat/errors.hpp"

namespace relcat {

Relation make_relation(const CCategory& cc, const Obj& base, const Mor& arrow) {
  if (base.ambient != cc.ambient() || arrow.dom.ambient != cc.ambient())
    throw AmbientError("make_relation: ambient mismatch");
  if (!(arrow.cod == cc.tensor(base, base)))
    throw InvalidRelationError("relation codomain must be base(x)base");
  if (!cc.is_structured_arrow(arrow))
    throw InvalidRelationError("arrow is not compatible with the fixed comonoids");
  return Relation{base, arrow.dom, arrow};
}

Relation graph_relation(const CCategory& cc, std::size_t vertices,
                        const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (cc.ambient() != Ambient::FinSet)
    throw AmbientError("graph sugar is FinSet-only");
  Obj base = finset(vertices);
  Obj dom = finset(edges.size());
  std::vector<std::size_t> t(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].first >= vertices || edges[i].second >= vertices)
      throw ShapeError("edge endpoint out of range");
    t[i] = pair_index(edges[i].first, edges[i].second, vertices);
  }
  return Relation{base, dom, mor_from_table(dom, cc.tensor(base, base), std::move(t))};
}

std::vector<std::size_t> rel_sources(const Relation& r) {
  if (r.arrow.dom.ambient != Ambient::FinSet)
    throw AmbientError("rel_sources: FinSet only");
  std::vector<std::size_t> f(r.dom.size);
  for (std::size_t b = 0; b < r.dom.size; ++b) f[b] = r.arrow.table[b] / r.base.size;
  return f;
}

std::vector<std::size_t> rel_targets(const Relation& r) {
  if (r.arrow.dom.ambient != Ambient::FinSet)
    throw AmbientError("rel_targets: FinSet only");
  std::vector<std::size_t> g(r.dom.size);
  for (std::size_t b = 0; b < r.dom.size; ++b) g[b] = r.arrow.table[b] % r.base.size;
  return g;
}

Relation identity_relation(const CCategory& cc, const Obj& base) {
  return Relation{base, base, cc.delta_of(base)};
}

Bicomodule unit_bicomodule(const CCategory& cc, const Obj& base) {
  Mor d = cc.delta_of(base);
  return Bicomodule{base, base, d, d};
}

Bicomodule phi(const CCategory& cc, const Relation& r) {
  const Obj& a = r.base;
  const Obj& b = r.dom;
  Mor id_a = identity(a);
  Mor id_b = identity(b);
  Mor eps_a = cc.epsilon_of(a);
  Mor delta_b = cc.delta_of(b);
  const MonoidalStructure& s = cc.structure();

  Mor dl = compose_chain({tensor_mor(s.gamma(a, a), id_b),
                          tensor_mor(tensor_mor(id_a, eps_a), id_b),
                          tensor_mor(r.arrow, id_b), delta_b});
  Mor dr = compose_chain({tensor_mor(id_b, s.beta(a, a)),
                          tensor_mor(id_b, tensor_mor(eps_a, id_a)),
                          tensor_mor(id_b, r.arrow), delta_b});
  return Bicomodule{a, b, dl, dr};
}

Relation psi(const CCategory& cc, const Bicomodule& b) {
  const Obj& a = b.base;
  Mor id_a = identity(a);
  Mor eps_b = cc.epsilon_of(b.carrier);
  const MonoidalStructure& s = cc.structure();

  Mor arrow = compose_chain({tensor_mor(id_a, s.beta(a, a)),
                             tensor_mor(id_a, tensor_mor(eps_b, id_a)),
                             tensor_mor(id_a, b.delta_r), b.delta_l});
  return Relation{a, b.carrier, arrow};
}

Report check_bicomodule(const CCategory& cc, const Bicomodule& b) {
  const Obj& a = b.base;
  const Obj& carrier = b.carrier;
  if (!(b.delta_l.dom == carrier) || !(b.delta_l.cod == cc.tensor(a, carrier)))
    throw ShapeError("bicomodule: bad left coaction shape");
  if (!(b.delta_r.dom == carrier) || !(b.delta_r.cod == cc.tensor(carrier, a)))
    throw ShapeError("bicomodule: bad right coaction shape");

  Mor id_a = identity(a);
  Mor id_b = identity(carrier);
  Mor delta_a = cc.delta_of(a);
  Mor eps_a = cc.epsilon_of(a);
  Report rep;

  auto expect = [&](const char* law, const Mor& lhs, const Mor& rhs) {
    CheckResult& row = rep.add(law);
    row.checked = 1;
    if (!(lhs == rhs)) {
      row.passed = false;
      row.witness = "on carrier " + obj_name(carrier);
    }
  };

  expect("left-coassociativity", compose(tensor_mor(delta_a, id_b), b.delta_l),
         compose(tensor_mor(id_a, b.delta_l), b.delta_l));
  expect("left-counit", compose(tensor_mor(eps_a, id_b), b.delta_l), id_b);
  expect("right-coassociativity", compose(tensor_mor(id_b, delta_a), b.delta_r),
         compose(tensor_mor(b.delta_r, id_a), b.delta_r));
  expect("right-counit", compose(tensor_mor(id_b, eps_a), b.delta_r), id_b);
  expect("compatibility", compose(tensor_mor(b.delta_l, id_a), b.delta_r),
         compose(tensor_mor(id_a, b.delta_r), b.delta_l));
  return rep;
}

bool check_rel_morphism(const CCategory& cc, const RelMorphism& m) {
  if (!(m.from.base == m.to.base)) throw BaseMismatchError("relation bases differ");
  if (!cc.is_structured_arrow(m.map)) return false;
  return compose(m.to.arrow, m.map) == m.from.arrow;
}

bool check_bicomodule_morphism(const CCategory& cc, const Bicomodule& from,
                               const Bicomodule& to, const Mor& f) {
  if (!(from.base == to.base)) throw BaseMismatchError("bicomodule bases differ");
  if (!cc.is_structured_arrow(f)) return false;
  Mor left_lhs = compose(tensor_mor(identity(from.base), f), from.delta_l);
  Mor left_rhs = compose(to.delta_l, f);
  Mor right_lhs = compose(tensor_mor(f, identity(from.base)), from.delta_r);
  Mor right_rhs = compose(to.delta_r, f);
  return left_lhs == left_rhs && right_lhs == right_rhs;
}

Bicomodule star(const CCategory& cc, const Bicomodule& b) {
  const MonoidalStructure& s = cc.structure();
  Mor dl = compose(s.sigma(b.carrier, b.base), b.delta_r);
  Mor dr = compose(s.sigma(b.base, b.carrier), b.delta_l);
  return Bicomodule{b.base, b.carrier, dl, dr};
}

Relation star_relation(const CCategory& cc, const Relation& r) {
  Mor arrow = compose(cc.structure().sigma(r.base, r.base), r.arrow);
  return Relation{r.base, r.dom, arrow};
}

}  // namespace relcat
