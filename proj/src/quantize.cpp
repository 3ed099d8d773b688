#include "relcat/quantize.hpp"

#include <algorithm>

#include "relcat/errors.hpp"

namespace relcat {

Obj ObjAction::map_obj(const Obj& x) const {
  auto it = object_map.find(x.size);
  if (it == object_map.end()) return x;
  return Obj{x.ambient, it->second};
}

Mor ObjAction::map_mor(const Mor& f) const {
  Obj d = map_obj(f.dom);
  Obj c = map_obj(f.cod);
  if (d.size != f.dom.size || c.size != f.cod.size)
    throw ShapeError("object action must be size-preserving to transport morphisms");
  return Mor{d, c, f.table, f.matrix};
}

std::optional<Mor> QuantTriple::try_lambda(const Obj& x, const Obj& y) const {
  auto it = lambda.find({x.size, y.size});
  if (it == lambda.end()) return std::nullopt;
  return it->second;
}

Mor QuantTriple::lambda_at(const Obj& x, const Obj& y) const {
  auto m = try_lambda(x, y);
  if (!m)
    throw MissingComponentError("lambda has no component at (" +
                                std::to_string(x.size) + "," +
                                std::to_string(y.size) + ")");
  return *m;
}

std::optional<Mor> QuantTriple::try_mu(const Obj& x) const {
  auto it = mu.find(x.size);
  if (it == mu.end()) return std::nullopt;
  return it->second;
}

Mor QuantTriple::mu_at(const Obj& x) const {
  auto m = try_mu(x);
  if (!m)
    throw MissingComponentError("mu has no component at " + obj_name(x));
  return *m;
}

QuantTriple identity_triple(Ambient a, const std::vector<Obj>& universe,
                            const std::vector<Mor>& generators) {
  QuantTriple t;
  t.ambient = a;
  t.universe = universe;
  t.generators = generators;
  t.eta = identity(unit_object(a));
  for (const Obj& x : universe) {
    t.mu.emplace(x.size, identity(x));
    for (const Obj& y : universe) {
      Obj xy = tensor_object(x, y);
      t.lambda.emplace(std::array<std::size_t, 2>{x.size, y.size}, identity(xy));
      t.mu.emplace(xy.size, identity(xy));
    }
  }
  return t;
}

QuantTriple triple_product(const QuantTriple& second, const QuantTriple& first) {
  if (first.ambient != second.ambient)
    throw UniverseMismatchError("triple_product: ambient mismatch");
  if (first.universe != second.universe)
    throw UniverseMismatchError("triple_product: universes differ");
  QuantTriple out = first;
  for (auto& [key, m] : out.lambda) {
    auto it = second.lambda.find(key);
    if (it == second.lambda.end())
      throw UniverseMismatchError("triple_product: lambda component missing");
    m = compose(m, it->second);
  }
  for (auto& [key, m] : out.mu) {
    auto it = second.mu.find(key);
    if (it == second.mu.end())
      throw UniverseMismatchError("triple_product: mu component missing");
    m = compose(m, it->second);
  }
  out.eta = compose(out.eta, second.eta);
  return out;
}

namespace {

// Generators extended by identities and pairwise tensors: naturality of a
// deformed component at a generator tuple unfolds into naturality of
// lambda/mu at exactly these morphisms.
std::vector<Mor> closed_generators(const QuantTriple& t) {
  std::vector<Mor> gens = t.generators;
  for (const Obj& x : t.universe) gens.push_back(identity(x));
  std::size_t n = gens.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gens.push_back(tensor_mor(gens[i], gens[j]));
  return gens;
}

}  // namespace

Report check_h_membership(const QuantTriple& t) {
  Report rep;
  Obj e = unit_object(t.ambient);

  {
    CheckResult& row = rep.add("component shapes and invertibility");
    for (const Obj& x : t.universe)
      for (const Obj& y : t.universe) {
        auto l = t.try_lambda(x, y);
        ++row.checked;
        Obj xy = tensor_object(x, y);
        if (!l || !(l->dom == xy) || !(l->cod == xy) || !is_iso(*l)) {
          row.passed = false;
          row.witness = "lambda at (" + std::to_string(x.size) + "," +
                        std::to_string(y.size) + ")";
        }
      }
    for (const auto& [size, m] : t.mu) {
      ++row.checked;
      if (!(m.dom == Obj{t.ambient, size}) || !is_iso(m)) {
        row.passed = false;
        row.witness = "mu at " + std::to_string(size);
      }
    }
    ++row.checked;
    if (!(t.eta.dom == e) || !(t.eta.cod == e) || !is_iso(t.eta)) {
      row.passed = false;
      row.witness = "eta";
    }
  }

  {  // mu must also exist on pairwise tensor objects (twisted symmetry).
    CheckResult& row = rep.add("mu covers the tensor closure");
    for (const Obj& x : t.universe)
      for (const Obj& y : t.universe) {
        ++row.checked;
        Obj xy = t.action.map_obj(
            tensor_object(t.action.map_obj(y), t.action.map_obj(x)));
        if (!t.try_mu(xy)) {
          row.passed = false;
          row.witness = "missing mu at " + std::to_string(xy.size);
        }
      }
  }

  std::vector<Mor> gens = closed_generators(t);

  {
    CheckResult& row = rep.add("lambda naturality");
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const Mor &f = gens[i], &g = gens[j];
        auto ld = t.try_lambda(f.dom, g.dom);
        auto lc = t.try_lambda(f.cod, g.cod);
        if (!ld || !lc) {
          ++row.skipped;
          continue;
        }
        ++row.checked;
        if (!(compose(*lc, tensor_mor(f, g)) == compose(tensor_mor(f, g), *ld))) {
          row.passed = false;
          row.witness =
              "generators #" + std::to_string(i) + ",#" + std::to_string(j);
        }
      }
  }

  {
    CheckResult& row = rep.add("mu naturality");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Mor& f = gens[i];
      auto md = t.try_mu(f.dom);
      auto mc = t.try_mu(f.cod);
      if (!md || !mc) {
        ++row.skipped;
        continue;
      }
      ++row.checked;
      if (!(compose(*mc, f) == compose(t.action.map_mor(f), *md))) {
        row.passed = false;
        row.witness = "generator #" + std::to_string(i);
      }
    }
  }

  {
    CheckResult& row = rep.add("mu t-involution");
    for (const auto& [size, m] : t.mu) {
      Obj x{t.ambient, size};
      auto mt = t.try_mu(t.action.map_obj(x));
      if (!mt) {
        ++row.skipped;
        continue;
      }
      ++row.checked;
      if (!(compose(t.action.map_mor(*mt), m) == identity(x))) {
        row.passed = false;
        row.witness = "at " + std::to_string(size);
      }
    }
  }

  {
    CheckResult& row = rep.add("mu unit compatibility");
    for (const Obj& x : t.universe) {
      auto mx = t.try_mu(x);
      auto mxe = t.try_mu(tensor_object(x, e));
      auto mex = t.try_mu(tensor_object(e, x));
      if (!mx || !mxe || !mex) {
        ++row.skipped;
        continue;
      }
      ++row.checked;
      Mor inv = inverse(*mx);
      bool ok = compose(*mxe, tensor_mor(inv, identity(e))) ==
                    identity(tensor_object(x, e)) &&
                compose(*mex, tensor_mor(identity(e), inv)) ==
                    identity(tensor_object(e, x));
      if (!ok) {
        row.passed = false;
        row.witness = "at " + std::to_string(x.size);
      }
    }
  }

  {
    CheckResult& row = rep.add("eta is fixed by mu");
    row.checked = 1;
    auto me = t.try_mu(e);
    if (!me || !(t.eta == compose(*me, t.eta))) {
      row.passed = false;
      row.witness = "eta != mu_e . eta";
    }
  }

  return rep;
}

namespace {

std::optional<Mor> sigma_hat_component(const MonoidalStructure& s,
                                       const QuantTriple& t, const Obj& x,
                                       const Obj& y) {
  auto lam = t.try_lambda(x, y);
  auto base = s.try_sigma(x, y);
  if (!lam || !base) return std::nullopt;
  Obj ty = t.action.map_obj(y);
  Obj tx = t.action.map_obj(x);
  Obj inner = tensor_object(ty, tx);
  auto mu_in = t.try_mu(t.action.map_obj(inner));
  auto lam_t = t.try_lambda(ty, tx);
  auto mu_y = t.try_mu(y);
  auto mu_x = t.try_mu(x);
  if (!mu_in || !lam_t || !mu_y || !mu_x) return std::nullopt;
  Mor twisted_pair = t.action.map_mor(tensor_mor(inverse(*mu_y), inverse(*mu_x)));
  Mor twisted_lam = t.action.map_mor(inverse(*lam_t));
  return compose_chain({twisted_pair, twisted_lam, *mu_in, *base, *lam});
}

}  // namespace

MonoidalStructure hat_transform(const MonoidalStructure& s, const QuantTriple& t,
                                bool verify) {
  if (s.ambient != t.ambient) throw AmbientError("hat_transform: ambient mismatch");
  MonoidalStructure out;
  out.ambient = s.ambient;
  Obj e = unit_object(t.ambient);

  for (const Obj& x : t.universe)
    for (const Obj& y : t.universe)
      for (const Obj& z : t.universe) {
        auto base = s.try_alpha(x, y, z);
        auto l_xy = t.try_lambda(x, y);
        auto l_yz = t.try_lambda(y, z);
        auto l_xy_z = t.try_lambda(tensor_object(x, y), z);
        auto l_x_yz = t.try_lambda(x, tensor_object(y, z));
        if (!base || !l_xy || !l_yz || !l_xy_z || !l_x_yz) continue;
        Mor hat = compose_chain({tensor_mor(inverse(*l_xy), identity(z)),
                                 inverse(*l_xy_z), *base, *l_x_yz,
                                 tensor_mor(identity(x), *l_yz)});
        out.alpha_override.insert({{x.size, y.size, z.size}, hat});
      }

  for (const Obj& x : t.universe)
    for (const Obj& y : t.universe) {
      auto beta = s.try_beta(x, y);
      auto gamma = s.try_gamma(x, y);
      auto l_ey = t.try_lambda(e, y);
      auto l_xe = t.try_lambda(x, e);
      if (beta && l_ey) {
        Mor hat = compose_chain({*beta, *l_ey, tensor_mor(t.eta, identity(y))});
        out.beta_override.insert({{x.size, y.size}, hat});
      }
      if (gamma && l_xe) {
        Mor hat = compose_chain({*gamma, *l_xe, tensor_mor(identity(x), t.eta)});
        out.gamma_override.insert({{x.size, y.size}, hat});
      }
      auto sig = sigma_hat_component(s, t, x, y);
      if (sig) out.sigma_override.insert({{x.size, y.size}, *sig});
    }

  if (verify) {
    Report rep = check_symmetric_monoidal(out, t.universe, t.generators);
    if (!rep.all_passed())
      throw TheoremViolation("deformed structure fails the checker:\n" +
                             rep.to_string());
  }
  return out;
}

Obj FunctorData::map_obj(const Obj& x) const {
  auto it = object_map.find(x.size);
  if (it == object_map.end()) return x;
  return it->second;
}

Mor FunctorData::map_mor(const Mor& f) const {
  if (!morphism_map) return f;
  return morphism_map(f);
}

FunctorData identity_functor(const QuantTriple& t) {
  FunctorData fd;
  fd.triple = t;
  return fd;
}

Report check_quantized_functor(const FunctorData& fd, const MonoidalStructure& s1,
                               const MonoidalStructure& s2) {
  Report rep;
  const QuantTriple& t = fd.triple;
  Obj e1 = unit_object(t.ambient);

  {
    CheckResult& row = rep.add("functor preserves identities/composition");
    for (const Obj& x : t.universe) {
      ++row.checked;
      if (!(fd.map_mor(identity(x)) == identity(fd.map_obj(x)))) {
        row.passed = false;
        row.witness = "identity at " + obj_name(x);
      }
    }
    for (std::size_t i = 0; i < t.generators.size(); ++i)
      for (std::size_t j = 0; j < t.generators.size(); ++j) {
        const Mor &f = t.generators[i], &g = t.generators[j];
        if (!(f.cod == g.dom)) continue;
        ++row.checked;
        if (!(fd.map_mor(compose(g, f)) ==
              compose(fd.map_mor(g), fd.map_mor(f)))) {
          row.passed = false;
          row.witness =
              "generators #" + std::to_string(i) + ",#" + std::to_string(j);
        }
      }
  }

  {
    CheckResult& row = rep.add("alpha equation");
    for (const Obj& x : t.universe)
      for (const Obj& y : t.universe)
        for (const Obj& z : t.universe) {
          auto a1 = s1.try_alpha(x, y, z);
          auto a2 = s2.try_alpha(fd.map_obj(x), fd.map_obj(y), fd.map_obj(z));
          auto l_xy = t.try_lambda(x, y);
          auto l_yz = t.try_lambda(y, z);
          auto l_xy_z = t.try_lambda(tensor_object(x, y), z);
          auto l_x_yz = t.try_lambda(x, tensor_object(y, z));
          if (!a1 || !a2 || !l_xy || !l_yz || !l_xy_z || !l_x_yz) {
            ++row.skipped;
            continue;
          }
          ++row.checked;
          Mor rhs = compose_chain(
              {tensor_mor(inverse(*l_xy), identity(fd.map_obj(z))),
               inverse(*l_xy_z), fd.map_mor(*a1), *l_x_yz,
               tensor_mor(identity(fd.map_obj(x)), *l_yz)});
          if (!(*a2 == rhs)) {
            row.passed = false;
            row.witness = "(" + std::to_string(x.size) + "," +
                          std::to_string(y.size) + "," + std::to_string(z.size) +
                          ")";
          }
        }
  }

  {
    CheckResult& brow = rep.add("beta equation");
    CheckResult& grow = rep.add("gamma equation");
    for (const Obj& x : t.universe)
      for (const Obj& y : t.universe) {
        auto b1 = s1.try_beta(x, y);
        auto b2 = s2.try_beta(fd.map_obj(x), fd.map_obj(y));
        auto l_ey = t.try_lambda(e1, y);
        if (!b1 || !b2 || !l_ey) {
          ++brow.skipped;
        } else {
          ++brow.checked;
          Mor rhs = compose_chain(
              {fd.map_mor(*b1), *l_ey,
               tensor_mor(t.eta, identity(fd.map_obj(y)))});
          if (!(*b2 == rhs)) {
            brow.passed = false;
            brow.witness =
                "(" + std::to_string(x.size) + "," + std::to_string(y.size) + ")";
          }
        }
        auto g1 = s1.try_gamma(x, y);
        auto g2 = s2.try_gamma(fd.map_obj(x), fd.map_obj(y));
        auto l_xe = t.try_lambda(x, e1);
        if (!g1 || !g2 || !l_xe) {
          ++grow.skipped;
        } else {
          ++grow.checked;
          Mor rhs = compose_chain(
              {fd.map_mor(*g1), *l_xe,
               tensor_mor(identity(fd.map_obj(x)), t.eta)});
          if (!(*g2 == rhs)) {
            grow.passed = false;
            grow.witness =
                "(" + std::to_string(x.size) + "," + std::to_string(y.size) + ")";
          }
        }
      }
  }

  {
    CheckResult& row = rep.add("sigma equation");
    for (const Obj& x : t.universe)
      for (const Obj& y : t.universe) {
        auto s2c = s2.try_sigma(fd.map_obj(x), fd.map_obj(y));
        auto rhs = sigma_hat_component(s1, t, x, y);
        if (!s2c || !rhs) {
          ++row.skipped;
          continue;
        }
        ++row.checked;
        if (!(*s2c == *rhs)) {
          row.passed = false;
          row.witness =
              "(" + std::to_string(x.size) + "," + std::to_string(y.size) + ")";
        }
      }
  }

  {
    CheckResult& row = rep.add("mu t-involution");
    for (const Obj& x : t.universe) {
      auto mx = t.try_mu(x);
      auto mt = t.try_mu(t.action.map_obj(x));
      if (!mx || !mt) {
        ++row.skipped;
        continue;
      }
      ++row.checked;
      if (!(compose(t.action.map_mor(*mt), *mx) == identity(mx->dom)))
        row.passed = false;
    }
  }

  return rep;
}

FunctorData compose_quantized(const FunctorData& g, const FunctorData& f) {
  if (f.triple.ambient != g.triple.ambient)
    throw UniverseMismatchError("compose_quantized: ambient mismatch");
  for (const Obj& x : f.triple.universe) {
    Obj fx = f.map_obj(x);
    if (std::find(g.triple.universe.begin(), g.triple.universe.end(), fx) ==
        g.triple.universe.end())
      throw UniverseMismatchError("compose_quantized: image object " +
                                  obj_name(fx) + " outside target universe");
  }

  FunctorData out;
  out.triple.ambient = f.triple.ambient;
  out.triple.universe = f.triple.universe;
  out.triple.generators = f.triple.generators;
  for (const Obj& x : f.triple.universe)
    out.object_map[x.size] = g.map_obj(f.map_obj(x));
  const FunctorData f_copy = f;
  const FunctorData g_copy = g;
  out.morphism_map = [f_copy, g_copy](const Mor& m) {
    return g_copy.map_mor(f_copy.map_mor(m));
  };

  for (const Obj& x : f.triple.universe)
    for (const Obj& y : f.triple.universe) {
      auto lf = f.triple.try_lambda(x, y);
      auto lg = g.triple.try_lambda(f.map_obj(x), f.map_obj(y));
      if (!lf || !lg) continue;
      out.triple.lambda.insert(
          {{x.size, y.size}, compose(g.map_mor(*lf), *lg)});
    }
  for (const auto& [size, mf] : f.triple.mu) {
    Obj x{f.triple.ambient, size};
    auto mg = g.triple.try_mu(f.map_obj(x));
    if (!mg) continue;
    out.triple.mu.insert({size, compose(*mg, g.map_mor(mf))});
  }
  out.triple.eta = compose(g.map_mor(f.triple.eta), g.triple.eta);
  out.triple.action = f.triple.action;
  return out;
}

Report check_monoid_object(const MonoidalStructure& s, const MonoidObject& m) {
  Report rep;
  const Obj& x = m.carrier;
  Obj e = unit_object(x.ambient);
  if (!(m.product.dom == tensor_object(x, x)) || !(m.product.cod == x))
    throw ShapeError("monoid product must map X(x)X to X");
  if (!(m.unit.dom == e) || !(m.unit.cod == x))
    throw ShapeError("monoid unit must map the unit object to X");

  Mor id_x = identity(x);
  {
    CheckResult& row = rep.add("associativity");
    row.checked = 1;
    Mor lhs = compose(m.product, tensor_mor(id_x, m.product));
    Mor rhs = compose(m.product,
                      compose(tensor_mor(m.product, id_x), s.alpha(x, x, x)));
    if (!(lhs == rhs)) row.passed = false;
  }
  {
    CheckResult& row = rep.add("left unit");
    row.checked = 1;
    if (!(compose(m.product, tensor_mor(m.unit, id_x)) == s.beta(x, x)))
      row.passed = false;
  }
  {
    CheckResult& row = rep.add("right unit");
    row.checked = 1;
    if (!(compose(m.product, tensor_mor(id_x, m.unit)) == s.gamma(x, x)))
      row.passed = false;
  }
  return rep;
}

bool check_commutative_monoid_object(const MonoidalStructure& s,
                                     const MonoidObject& m, const Mor& witness) {
  if (!is_iso(witness)) return false;
  Mor opp = compose(m.product, s.sigma(m.carrier, m.carrier));
  if (!(compose(opp, tensor_mor(witness, witness)) == compose(witness, m.product)))
    return false;
  return compose(witness, m.unit) == m.unit;
}

QuantizedMonoid quantize_monoid(const MonoidObject& mon, const FunctorData& fd,
                                const MonoidalStructure& source,
                                const MonoidalStructure& target,
                                const std::optional<Mor>& commut_witness) {
  if (!check_monoid_object(source, mon).all_passed())
    throw SourceNotMonoidError("input fails the source monoid laws");
  if (commut_witness &&
      !check_commutative_monoid_object(source, mon, *commut_witness))
    throw SourceNotMonoidError("supplied witness fails in the source");

  const QuantTriple& t = fd.triple;
  QuantizedMonoid out{MonoidObject{fd.map_obj(mon.carrier),
                                   compose(fd.map_mor(mon.product),
                                           t.lambda_at(mon.carrier, mon.carrier)),
                                   compose(fd.map_mor(mon.unit), t.eta)},
                      std::nullopt,
                      {}};
  out.report = check_monoid_object(target, out.monoid);
  if (commut_witness) {
    Mor transported = compose(fd.map_mor(*commut_witness),
                              t.action.map_mor(t.mu_at(mon.carrier)));
    out.witness = transported;
    CheckResult& row = out.report.add("transported commutativity witness");
    row.checked = 1;
    if (!check_commutative_monoid_object(target, out.monoid, transported))
      row.passed = false;
  }
  return out;
}

ComonoidData quantize_comonoid(const ComonoidData& c, const FunctorData& fd) {
  const QuantTriple& t = fd.triple;
  Mor delta = compose(inverse(t.lambda_at(c.carrier, c.carrier)),
                      fd.map_mor(c.delta));
  Mor eps = compose(inverse(t.eta), fd.map_mor(c.epsilon));
  return ComonoidData{fd.map_obj(c.carrier), delta, eps};
}

Report check_comonoid_in(const MonoidalStructure& s, const ComonoidData& c) {
  Report rep;
  const Obj& x = c.carrier;
  Mor id_x = identity(x);
  {
    CheckResult& row = rep.add("coassociativity");
    row.checked = 1;
    Mor lhs = compose(s.alpha(x, x, x), compose(tensor_mor(id_x, c.delta), c.delta));
    Mor rhs = compose(tensor_mor(c.delta, id_x), c.delta);
    if (!(lhs == rhs)) row.passed = false;
  }
  {
    CheckResult& row = rep.add("left counit");
    row.checked = 1;
    Mor lhs = compose(s.beta(x, x), compose(tensor_mor(c.epsilon, id_x), c.delta));
    if (!(lhs == id_x)) row.passed = false;
  }
  {
    CheckResult& row = rep.add("right counit");
    row.checked = 1;
    Mor lhs = compose(s.gamma(x, x), compose(tensor_mor(id_x, c.epsilon), c.delta));
    if (!(lhs == id_x)) row.passed = false;
  }
  return rep;
}

std::optional<Mor> MonoidalTwist::try_at(const Obj& x, const Obj& y) const {
  auto it = comp.find({x.size, y.size});
  if (it == comp.end()) return std::nullopt;
  return it->second;
}

Mor MonoidalTwist::at(const Obj& x, const Obj& y) const {
  auto m = try_at(x, y);
  if (!m)
    throw MissingComponentError("twist has no component at (" +
                                std::to_string(x.size) + "," +
                                std::to_string(y.size) + ")");
  return *m;
}

MonoidalStructure apply_twist(const MonoidalStructure& s, const MonoidalTwist& tw,
                              const std::vector<Obj>& universe) {
  MonoidalStructure out;
  out.ambient = s.ambient;
  out.sigma_override = s.sigma_override;
  Obj e = unit_object(s.ambient);

  for (const Obj& x : universe)
    for (const Obj& y : universe)
      for (const Obj& z : universe) {
        Obj xy = tensor_object(x, y);
        Obj yz = tensor_object(y, z);
        std::optional<Mor> hat;
        if (!tw.t_graded) {
          auto base = s.try_alpha(x, y, z);
          auto r_xy = tw.try_at(x, y);
          auto r_yz = tw.try_at(y, z);
          auto r_xy_z = tw.try_at(xy, z);
          auto r_x_yz = tw.try_at(x, yz);
          if (base && r_xy && r_yz && r_xy_z && r_x_yz)
            hat = compose_chain({inverse(*r_xy_z),
                                 tensor_mor(inverse(*r_xy), identity(z)), *base,
                                 *r_x_yz, tensor_mor(identity(x), *r_yz)});
        } else {
          Obj zy = tensor_object(z, y);
          auto base = s.try_alpha(z, y, x);
          auto s_xy = tw.try_at(x, y);
          auto s_yz = tw.try_at(y, z);
          auto s_xy_z = tw.try_at(xy, z);
          auto s_x_zy = tw.try_at(x, zy);
          if (base && s_xy && s_yz && s_xy_z && s_x_zy)
            hat = compose_chain({inverse(*s_xy_z),
                                 tensor_mor(identity(z), inverse(*s_xy)),
                                 inverse(*base), *s_x_zy,
                                 tensor_mor(identity(x), *s_yz)});
        }
        if (hat) out.alpha_override.insert({{x.size, y.size, z.size}, *hat});
      }

  for (const Obj& x : universe)
    for (const Obj& y : universe) {
      if (!tw.t_graded) {
        auto b = s.try_beta(x, y);
        auto g = s.try_gamma(x, y);
        auto r_ey = tw.try_at(e, y);
        auto r_xe = tw.try_at(x, e);
        if (b && r_ey)
          out.beta_override.insert({{x.size, y.size}, compose(*b, *r_ey)});
        if (g && r_xe)
          out.gamma_override.insert({{x.size, y.size}, compose(*g, *r_xe)});
      } else {
        auto g_yx = s.try_gamma(y, x);
        auto b_yx = s.try_beta(y, x);
        auto s_ey = tw.try_at(e, y);
        auto s_xe = tw.try_at(x, e);
        if (g_yx && s_ey)
          out.beta_override.insert({{x.size, y.size}, compose(*g_yx, *s_ey)});
        if (b_yx && s_xe)
          out.gamma_override.insert({{x.size, y.size}, compose(*b_yx, *s_xe)});
      }
    }

  return out;
}

MonoidalTwist twist_product(const MonoidalTwist& second, const MonoidalTwist& first) {
  if (first.ambient != second.ambient)
    throw UniverseMismatchError("twist_product: ambient mismatch");
  MonoidalTwist out;
  out.ambient = first.ambient;
  out.t_graded = first.t_graded != second.t_graded;
  for (const auto& [key, sec] : second.comp) {
    std::array<std::size_t, 2> first_key =
        second.t_graded ? std::array<std::size_t, 2>{key[1], key[0]} : key;
    auto it = first.comp.find(first_key);
    if (it == first.comp.end()) continue;
    out.comp.insert({key, compose(it->second, sec)});
  }
  return out;
}

}  // namespace relcat
