#include "relcat/monoidal.hpp"

#include <algorithm>
#include <sstream>

#include "relcat/errors.hpp"

namespace relcat {

std::string Report::to_string() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.passed ? "pass" : "FAIL") << "  " << r.law << "  (checked "
       << r.checked;
    if (r.skipped) os << ", skipped " << r.skipped;
    os << ")";
    if (!r.passed && !r.witness.empty()) os << "  witness: " << r.witness;
    os << "\n";
  }
  return os.str();
}

Mor builtin_sigma(const Obj& x, const Obj& y) {
  Obj dom = tensor_object(x, y);
  Obj cod = tensor_object(y, x);
  switch (x.ambient) {
    case Ambient::FinSet: {
      std::vector<std::size_t> t(dom.size);
      for (std::size_t a = 0; a < x.size; ++a)
        for (std::size_t b = 0; b < y.size; ++b)
          t[pair_index(a, b, y.size)] = pair_index(b, a, x.size);
      return Mor{dom, cod, std::move(t), {}};
    }
    case Ambient::FinVectSum: {
      Matrix m(cod.size, std::vector<Rat>(dom.size, Rat(0)));
      for (std::size_t b = 0; b < y.size; ++b) m[b][x.size + b] = 1;
      for (std::size_t a = 0; a < x.size; ++a) m[y.size + a][a] = 1;
      return Mor{dom, cod, {}, std::move(m)};
    }
    case Ambient::FinVectTensor: {
      Matrix m(cod.size, std::vector<Rat>(dom.size, Rat(0)));
      for (std::size_t a = 0; a < x.size; ++a)
        for (std::size_t b = 0; b < y.size; ++b)
          m[pair_index(b, a, x.size)][pair_index(a, b, y.size)] = 1;
      return Mor{dom, cod, {}, std::move(m)};
    }
  }
  throw AmbientError("builtin_sigma: unknown ambient");
}

std::optional<Mor> MonoidalStructure::try_alpha(const Obj& x, const Obj& y,
                                                const Obj& z) const {
  if (!alpha_override.empty()) {
    auto it = alpha_override.find({x.size, y.size, z.size});
    if (it == alpha_override.end()) return std::nullopt;
    return it->second;
  }
  return identity(tensor(x, tensor(y, z)));
}

std::optional<Mor> MonoidalStructure::try_beta(const Obj& x, const Obj& y) const {
  if (!beta_override.empty()) {
    auto it = beta_override.find({x.size, y.size});
    if (it == beta_override.end()) return std::nullopt;
    return it->second;
  }
  return identity(y);
}

std::optional<Mor> MonoidalStructure::try_gamma(const Obj& x, const Obj& y) const {
  if (!gamma_override.empty()) {
    auto it = gamma_override.find({x.size, y.size});
    if (it == gamma_override.end()) return std::nullopt;
    return it->second;
  }
  return identity(x);
}

std::optional<Mor> MonoidalStructure::try_sigma(const Obj& x, const Obj& y) const {
  if (!sigma_override.empty()) {
    auto it = sigma_override.find({x.size, y.size});
    if (it == sigma_override.end()) return std::nullopt;
    return it->second;
  }
  return builtin_sigma(x, y);
}

namespace {
Mor require(std::optional<Mor> m, const char* what) {
  if (!m) throw MissingComponentError(std::string("missing override for ") + what);
  return *std::move(m);
}
}  // namespace

Mor MonoidalStructure::alpha(const Obj& x, const Obj& y, const Obj& z) const {
  return require(try_alpha(x, y, z), "alpha");
}
Mor MonoidalStructure::beta(const Obj& x, const Obj& y) const {
  return require(try_beta(x, y), "beta");
}
Mor MonoidalStructure::gamma(const Obj& x, const Obj& y) const {
  return require(try_gamma(x, y), "gamma");
}
Mor MonoidalStructure::sigma(const Obj& x, const Obj& y) const {
  return require(try_sigma(x, y), "sigma");
}

MonoidalStructure builtin_structure(Ambient a) {
  MonoidalStructure s;
  s.ambient = a;
  return s;
}

Mor constraint(const MonoidalStructure& s, ConstraintKind kind,
               const std::vector<Obj>& objs) {
  if (kind == ConstraintKind::Alpha) {
    if (objs.size() != 3) throw ShapeError("alpha takes three objects");
    return s.alpha(objs[0], objs[1], objs[2]);
  }
  if (objs.size() != 2) throw ShapeError("binary constraint takes two objects");
  switch (kind) {
    case ConstraintKind::Beta: return s.beta(objs[0], objs[1]);
    case ConstraintKind::Gamma: return s.gamma(objs[0], objs[1]);
    case ConstraintKind::Sigma: return s.sigma(objs[0], objs[1]);
    default: break;
  }
  throw ShapeError("unknown constraint kind");
}

namespace {

std::string tuple_name(const std::vector<Obj>& objs) {
  std::string s = "(";
  for (std::size_t i = 0; i < objs.size(); ++i)
    s += (i ? "," : "") + std::to_string(objs[i].size);
  return s + ")";
}

void closure_precheck(const MonoidalStructure& s, const std::vector<Obj>& universe) {
  if (universe.empty()) throw UniverseNotClosedError("empty universe");
  Obj e = s.unit();
  bool has_unit = false;
  std::size_t bound = 0;
  for (const Obj& o : universe) {
    if (o.ambient != s.ambient) throw AmbientError("universe ambient mismatch");
    has_unit = has_unit || o == e;
    bound = std::max(bound, o.size);
  }
  if (!has_unit) throw UniverseNotClosedError("unit object not in universe");
  for (const Obj& x : universe)
    for (const Obj& y : universe) {
      Obj t = s.tensor(x, y);
      if (t.size > bound) continue;
      if (std::find(universe.begin(), universe.end(), t) == universe.end())
        throw UniverseNotClosedError("universe misses " + obj_name(t));
    }
}

}  // namespace

Report check_symmetric_monoidal(const MonoidalStructure& s,
                                const std::vector<Obj>& universe,
                                const std::vector<Mor>& generators,
                                bool symmetric) {
  closure_precheck(s, universe);
  Obj e = s.unit();
  Report rep;

  auto record = [](CheckResult& row, bool ok, const std::string& witness) {
    ++row.checked;
    if (!ok && row.passed) {
      row.passed = false;
      row.witness = witness;
    }
  };

  {  // component shapes and invertibility
    CheckResult& row = rep.add("components-iso");
    for (const Obj& x : universe)
      for (const Obj& y : universe) {
        auto sg = s.try_sigma(x, y);
        auto b = s.try_beta(x, y);
        auto g = s.try_gamma(x, y);
        if (!sg || !b || !g) {
          ++row.skipped;
          continue;
        }
        bool ok = sg->dom == s.tensor(x, y) && sg->cod == s.tensor(y, x) &&
                  is_iso(*sg) && b->dom == s.tensor(e, y) && b->cod == y &&
                  is_iso(*b) && g->dom == s.tensor(x, e) && g->cod == x &&
                  is_iso(*g);
        record(row, ok, "sigma/beta/gamma at " + tuple_name({x, y}));
      }
    for (const Obj& x : universe)
      for (const Obj& y : universe)
        for (const Obj& z : universe) {
          auto a = s.try_alpha(x, y, z);
          if (!a) {
            ++row.skipped;
            continue;
          }
          bool ok = a->dom == s.tensor(x, s.tensor(y, z)) &&
                    a->cod == s.tensor(s.tensor(x, y), z) && is_iso(*a);
          record(row, ok, "alpha at " + tuple_name({x, y, z}));
        }
  }

  {  // pentagon
    CheckResult& row = rep.add("pentagon");
    for (const Obj& x : universe)
      for (const Obj& y : universe)
        for (const Obj& z : universe)
          for (const Obj& t : universe) {
            auto a1 = s.try_alpha(x, y, s.tensor(z, t));
            auto a2 = s.try_alpha(s.tensor(x, y), z, t);
            auto a3 = s.try_alpha(x, y, z);
            auto a4 = s.try_alpha(x, s.tensor(y, z), t);
            auto a5 = s.try_alpha(y, z, t);
            if (!a1 || !a2 || !a3 || !a4 || !a5) {
              ++row.skipped;
              continue;
            }
            Mor lhs = compose(*a2, *a1);
            Mor rhs = compose(tensor_mor(*a3, identity(t)),
                              compose(*a4, tensor_mor(identity(x), *a5)));
            record(row, lhs == rhs, tuple_name({x, y, z, t}));
          }
  }

  {  // triangle
    CheckResult& row = rep.add("triangle");
    for (const Obj& x : universe)
      for (const Obj& y : universe) {
        auto a = s.try_alpha(x, e, y);
        auto b = s.try_beta(x, y);
        auto g = s.try_gamma(x, y);
        if (!a || !b || !g) {
          ++row.skipped;
          continue;
        }
        Mor lhs = compose(tensor_mor(*g, identity(y)), *a);
        Mor rhs = tensor_mor(identity(x), *b);
        record(row, lhs == rhs, tuple_name({x, y}));
      }
  }

  {  // beta = gamma on the unit
    CheckResult& row = rep.add("unit-equation");
    auto b = s.try_beta(e, e);
    auto g = s.try_gamma(e, e);
    if (!b || !g)
      ++row.skipped;
    else
      record(row, *b == *g, "at unit");
  }

  {  // naturality of alpha
    CheckResult& row = rep.add("alpha-naturality");
    for (std::size_t i = 0; i < generators.size(); ++i)
      for (std::size_t j = 0; j < generators.size(); ++j)
        for (std::size_t k = 0; k < generators.size(); ++k) {
          const Mor &f = generators[i], &g = generators[j], &h = generators[k];
          auto ad = s.try_alpha(f.dom, g.dom, h.dom);
          auto ac = s.try_alpha(f.cod, g.cod, h.cod);
          if (!ad || !ac) {
            ++row.skipped;
            continue;
          }
          Mor lhs = compose(*ac, tensor_mor(f, tensor_mor(g, h)));
          Mor rhs = compose(tensor_mor(tensor_mor(f, g), h), *ad);
          record(row, lhs == rhs,
                 "generators #" + std::to_string(i) + ",#" + std::to_string(j) +
                     ",#" + std::to_string(k));
        }
  }

  {  // naturality of beta and gamma
    CheckResult& brow = rep.add("beta-naturality");
    CheckResult& grow = rep.add("gamma-naturality");
    for (std::size_t i = 0; i < generators.size(); ++i)
      for (std::size_t j = 0; j < generators.size(); ++j) {
        const Mor &f = generators[i], &g = generators[j];
        auto bd = s.try_beta(f.dom, g.dom);
        auto bc = s.try_beta(f.cod, g.cod);
        if (!bd || !bc) {
          ++brow.skipped;
        } else {
          Mor lhs = compose(*bc, tensor_mor(identity(e), g));
          Mor rhs = compose(g, *bd);
          record(brow, lhs == rhs,
                 "generators #" + std::to_string(i) + ",#" + std::to_string(j));
        }
        auto gd = s.try_gamma(f.dom, g.dom);
        auto gc = s.try_gamma(f.cod, g.cod);
        if (!gd || !gc) {
          ++grow.skipped;
        } else {
          Mor lhs = compose(*gc, tensor_mor(f, identity(e)));
          Mor rhs = compose(f, *gd);
          record(grow, lhs == rhs,
                 "generators #" + std::to_string(i) + ",#" + std::to_string(j));
        }
      }
  }

  if (!symmetric) return rep;

  {  // naturality of sigma
    CheckResult& row = rep.add("sigma-naturality");
    for (std::size_t i = 0; i < generators.size(); ++i)
      for (std::size_t j = 0; j < generators.size(); ++j) {
        const Mor &f = generators[i], &g = generators[j];
        auto sd = s.try_sigma(f.dom, g.dom);
        auto sc = s.try_sigma(f.cod, g.cod);
        if (!sd || !sc) {
          ++row.skipped;
          continue;
        }
        Mor lhs = compose(*sc, tensor_mor(f, g));
        Mor rhs = compose(tensor_mor(g, f), *sd);
        record(row, lhs == rhs,
               "generators #" + std::to_string(i) + ",#" + std::to_string(j));
      }
  }

  {  // Yang-Baxter
    CheckResult& row = rep.add("yang-baxter");
    for (const Obj& x : universe)
      for (const Obj& y : universe)
        for (const Obj& z : universe) {
          auto sxy = s.try_sigma(x, y);
          auto sxz = s.try_sigma(x, z);
          auto syz = s.try_sigma(y, z);
          if (!sxy || !sxz || !syz) {
            ++row.skipped;
            continue;
          }
          Mor lhs = compose(
              tensor_mor(identity(z), *sxy),
              compose(tensor_mor(*sxz, identity(y)), tensor_mor(identity(x), *syz)));
          Mor rhs = compose(
              tensor_mor(*syz, identity(x)),
              compose(tensor_mor(identity(y), *sxz), tensor_mor(*sxy, identity(z))));
          record(row, lhs == rhs, tuple_name({x, y, z}));
        }
  }

  {  // sigma involution
    CheckResult& row = rep.add("sigma-involution");
    for (const Obj& x : universe)
      for (const Obj& y : universe) {
        auto sxy = s.try_sigma(x, y);
        auto syx = s.try_sigma(y, x);
        if (!sxy || !syx) {
          ++row.skipped;
          continue;
        }
        record(row, compose(*syx, *sxy) == identity(s.tensor(x, y)),
               tuple_name({x, y}));
      }
  }

  {  // unit symmetry relations: beta = t(gamma) . sigma, gamma = t(beta) . sigma
    CheckResult& row = rep.add("unit-symmetry");
    for (const Obj& x : universe)
      for (const Obj& y : universe) {
        auto b = s.try_beta(x, y);
        auto g = s.try_gamma(y, x);
        auto sg = s.try_sigma(e, y);
        auto b2 = s.try_beta(y, x);
        auto g2 = s.try_gamma(x, y);
        auto sg2 = s.try_sigma(x, e);
        if (!b || !g || !sg || !b2 || !g2 || !sg2) {
          ++row.skipped;
          continue;
        }
        bool ok = *b == compose(*g, *sg) && *g2 == compose(*b2, *sg2);
        record(row, ok, tuple_name({x, y}));
      }
  }

  return rep;
}

}  // namespace relcat
