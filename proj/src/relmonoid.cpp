#include "relcat/relmonoid.hpp"

#include <algorithm>
#include <map>

#include "relcat/errors.hpp"

namespace relcat {

Report check_rel_monoid(const CCategory& cc, const RelMonoid& m) {
  Report rep;
  const Relation& r = m.rel;
  Bicomodule pr = phi(cc, r);
  TensorResult t_rr = tensor_relations(cc, pr, pr);
  Bicomodule a = unit_bicomodule(cc, r.base);

  if (!(m.mu.dom == t_rr.product.carrier) || !(m.mu.cod == r.dom))
    throw ShapeError("mu must map composable pairs to the arrow object");
  if (!(m.unit.dom == r.base) || !(m.unit.cod == r.dom))
    throw ShapeError("unit must map the base to the arrow object");

  {
    CheckResult& row = rep.add("mu is a relation morphism");
    row.checked = 1;
    Relation rr = odot(cc, r, r);
    if (!(compose(r.arrow, m.mu) == rr.arrow)) {
      row.passed = false;
      if (cc.ambient() == Ambient::FinSet) {
        Mor got = compose(r.arrow, m.mu);
        for (std::size_t i = 0; i < got.table.size(); ++i)
          if (got.table[i] != rr.arrow.table[i]) {
            row.witness = "composable pair #" + std::to_string(i);
            break;
          }
      }
    }
  }

  {
    CheckResult& row = rep.add("unit is a relation morphism");
    row.checked = 1;
    if (!(compose(r.arrow, m.unit) == cc.delta_of(r.base))) row.passed = false;
  }

  {
    CheckResult& row = rep.add("associativity");
    row.checked = 1;
    try {
      Mor assoc = induced_m(cc, pr, pr, pr);
      TensorResult t_rr_r = tensor_relations(cc, t_rr.product, pr);
      TensorResult t_r_rr = tensor_relations(cc, pr, t_rr.product);
      Mor mu_x_1 = tensor_bicom_mor(cc, t_rr_r, t_rr, m.mu, identity(r.dom));
      Mor one_x_mu = tensor_bicom_mor(cc, t_r_rr, t_rr, identity(r.dom), m.mu);
      Mor lhs = compose(m.mu, compose(mu_x_1, assoc));
      Mor rhs = compose(m.mu, one_x_mu);
      if (!(lhs == rhs)) row.passed = false;
    } catch (const FactorizationFailure& e) {
      row.passed = false;
      row.witness = e.what();
    }
  }

  {
    CheckResult& row = rep.add("left unit");
    row.checked = 1;
    try {
      TensorResult t_ar = tensor_relations(cc, a, pr);
      Mor u_x_1 = tensor_bicom_mor(cc, t_ar, t_rr, m.unit, identity(r.dom));
      Mor l = compose(tensor_mor(cc.epsilon_of(r.base), identity(r.dom)), t_ar.pi);
      if (!(compose(m.mu, u_x_1) == l)) row.passed = false;
    } catch (const FactorizationFailure& e) {
      row.passed = false;
      row.witness = e.what();
    }
  }

  {
    CheckResult& row = rep.add("right unit");
    row.checked = 1;
    try {
      TensorResult t_ra = tensor_relations(cc, pr, a);
      Mor one_x_u = tensor_bicom_mor(cc, t_ra, t_rr, identity(r.dom), m.unit);
      Mor rr =
          compose(tensor_mor(identity(r.dom), cc.epsilon_of(r.base)), t_ra.pi);
      if (!(compose(m.mu, one_x_u) == rr)) row.passed = false;
    } catch (const FactorizationFailure& e) {
      row.passed = false;
      row.witness = e.what();
    }
  }

  return rep;
}

RelMonoid monoid_from_preorder(
    const CCategory& cc, std::size_t n,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (cc.ambient() != Ambient::FinSet)
    throw AmbientError("monoid_from_preorder: FinSet only");
  std::vector<std::pair<std::size_t, std::size_t>> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  auto has_edge = [&](std::size_t x, std::size_t y) {
    return std::binary_search(sorted.begin(), sorted.end(), std::make_pair(x, y));
  };
  for (std::size_t x = 0; x < n; ++x)
    if (!has_edge(x, x))
      throw NotReflexiveError("missing loop at " + std::to_string(x));
  for (const auto& [x, y] : sorted)
    for (const auto& [y2, z] : sorted) {
      if (y != y2) continue;
      if (!has_edge(x, z))
        throw NotTransitiveError("missing (" + std::to_string(x) + "," +
                                 std::to_string(z) + ")");
    }

  Relation r = graph_relation(cc, n, sorted);
  auto edge_index = [&](std::size_t x, std::size_t y) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), std::make_pair(x, y));
    return static_cast<std::size_t>(it - sorted.begin());
  };

  TensorResult t = tensor_relations(cc, phi(cc, r), phi(cc, r));
  std::vector<std::size_t> mu(t.product.carrier.size);
  for (std::size_t i = 0; i < t.pairs.size(); ++i) {
    auto [b1, b2] = t.pairs[i];
    mu[i] = edge_index(sorted[b1].first, sorted[b2].second);
  }
  std::vector<std::size_t> unit(n);
  for (std::size_t x = 0; x < n; ++x) unit[x] = edge_index(x, x);

  return RelMonoid{r, mor_from_table(t.product.carrier, r.dom, std::move(mu)),
                   mor_from_table(r.base, r.dom, std::move(unit))};
}

std::optional<Mor> check_commutative(const CCategory& cc, const RelMonoid& m,
                                     std::size_t search_bound) {
  if (cc.ambient() != Ambient::FinSet)
    throw AmbientError("check_commutative: FinSet only");
  const Relation& r = m.rel;
  std::size_t nb = r.dom.size;
  if (nb > search_bound)
    throw BoundsExceededError("arrow set larger than the search bound");

  std::vector<std::size_t> f = rel_sources(r);
  std::vector<std::size_t> g = rel_targets(r);
  TensorResult t = tensor_relations(cc, phi(cc, r), phi(cc, r));

  auto is_witness = [&](const std::vector<std::size_t>& phi_tab) {
    for (std::size_t x = 0; x < nb; ++x)
      if (f[phi_tab[x]] != g[x] || g[phi_tab[x]] != f[x]) return false;
    for (std::size_t u : m.unit.table)
      if (phi_tab[u] != u) return false;
    // phi(mu(x,y)) == mu(phi(y), phi(x)); the swapped pair is composable
    // exactly when (x,y) is.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_pos;
    for (std::size_t i = 0; i < t.pairs.size(); ++i) pair_pos[t.pairs[i]] = i;
    for (std::size_t i = 0; i < t.pairs.size(); ++i) {
      auto [x, y] = t.pairs[i];
      auto it = pair_pos.find({phi_tab[y], phi_tab[x]});
      if (it == pair_pos.end()) return false;
      if (phi_tab[m.mu.table[i]] != m.mu.table[it->second]) return false;
    }
    return true;
  };

  // Subset equivalence relations have the canonical edge-reversal witness.
  if (is_mono(r.arrow)) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> rev;
    for (std::size_t b = 0; b < nb; ++b) rev[{f[b], g[b]}] = b;
    std::vector<std::size_t> swap_tab(nb, SIZE_MAX);
    bool symmetric = true;
    for (std::size_t b = 0; b < nb && symmetric; ++b) {
      auto it = rev.find({g[b], f[b]});
      if (it == rev.end())
        symmetric = false;
      else
        swap_tab[b] = it->second;
    }
    if (symmetric && is_witness(swap_tab))
      return mor_from_table(r.dom, r.dom, std::move(swap_tab));
  }

  // Backtracking over bijections constrained by the source/target swap.
  std::vector<std::vector<std::size_t>> candidates(nb);
  for (std::size_t x = 0; x < nb; ++x)
    for (std::size_t y = 0; y < nb; ++y)
      if (f[y] == g[x] && g[y] == f[x]) candidates[x].push_back(y);
  for (std::size_t u : m.unit.table) candidates[u] = {u};

  std::vector<std::size_t> phi_tab(nb, SIZE_MAX);
  std::vector<bool> used(nb, false);
  std::optional<Mor> found;
  auto rec = [&](auto&& self, std::size_t x) -> bool {
    if (x == nb) {
      if (!is_witness(phi_tab)) return false;
      found = mor_from_table(r.dom, r.dom, phi_tab);
      return true;
    }
    for (std::size_t y : candidates[x]) {
      if (used[y]) continue;
      used[y] = true;
      phi_tab[x] = y;
      if (self(self, x + 1)) return true;
      used[y] = false;
      phi_tab[x] = SIZE_MAX;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

GeneratedStages generate_category(const CCategory& cc, const Relation& r,
                                  const std::optional<Mor>& unit_map,
                                  std::size_t depth) {
  if (cc.ambient() != Ambient::FinSet)
    throw AmbientError("generate_category: FinSet only");
  if (depth == 0) throw ShapeError("depth must be at least 1");
  if (unit_map) {
    if (!(compose(r.arrow, *unit_map) == cc.delta_of(r.base)))
      throw InvalidUnitMapError("unit map is not a morphism from the identity relation");
  }

  GeneratedStages out;
  out.stages.push_back(r);
  out.pairs.emplace_back();
  if (unit_map) out.embeddings.push_back(*unit_map);

  Bicomodule gen = phi(cc, r);
  for (std::size_t k = 1; k < depth; ++k) {
    const Relation& prev = out.stages.back();
    TensorResult t = tensor_relations(cc, phi(cc, prev), gen);
    Relation next{r.base, t.product.carrier,
                  compose(boxdot(cc, prev, r).arrow, t.pi)};
    if (unit_map) {
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> pos;
      for (std::size_t i = 0; i < t.pairs.size(); ++i) pos[t.pairs[i]] = i;
      const Mor& prev_emb = out.embeddings.back();
      std::vector<std::size_t> emb(r.base.size);
      for (std::size_t a = 0; a < r.base.size; ++a) {
        auto it = pos.find({prev_emb.table[a], unit_map->table[a]});
        if (it == pos.end())
          throw InvalidUnitMapError("identity arrows stopped composing");
        emb[a] = it->second;
      }
      out.embeddings.push_back(
          mor_from_table(r.base, next.dom, std::move(emb)));
    }
    out.stages.push_back(std::move(next));
    out.pairs.push_back(t.pairs);
  }
  return out;
}

}  // namespace relcat
