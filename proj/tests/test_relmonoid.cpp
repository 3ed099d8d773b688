#include <doctest.h>

#include <functional>
#include <set>

#include "relcat/errors.hpp"
#include "relcat/relmonoid.hpp"
#include "support.hpp"

using namespace relcat;

namespace {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

bool subset_reflexive(std::size_t n, const std::set<std::pair<std::size_t, std::size_t>>& e) {
  for (std::size_t x = 0; x < n; ++x)
    if (!e.count({x, x})) return false;
  return true;
}

bool subset_transitive(const std::set<std::pair<std::size_t, std::size_t>>& e) {
  for (const auto& [x, y] : e)
    for (const auto& [y2, z] : e)
      if (y == y2 && !e.count({x, z})) return false;
  return true;
}

bool subset_symmetric(const std::set<std::pair<std::size_t, std::size_t>>& e) {
  for (const auto& [x, y] : e)
    if (!e.count({y, x})) return false;
  return true;
}

// independent oracle: count length-k composable edge strings by DFS
std::size_t count_paths(const Edges& edges, std::size_t k) {
  std::function<std::size_t(std::size_t, std::size_t)> go =
      [&](std::size_t eidx, std::size_t remaining) -> std::size_t {
    if (remaining == 0) return 1;
    std::size_t total = 0;
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (edges[j].first == edges[eidx].second) total += go(j, remaining - 1);
    return total;
  };
  std::size_t total = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) total += go(i, k - 1);
  return total;
}

}  // namespace

TEST_CASE("the worked preorder is a monoid of relations") {
  CCategory cc = CCategory::finsets();
  RelMonoid m = monoid_from_preorder(cc, 2, {{0, 0}, {1, 1}, {0, 1}});
  Report rep = check_rel_monoid(cc, m);
  CHECK(rep.all_passed());

  // FinSet pointwise characterization agrees with the categorical laws
  TensorResult t = tensor_relations(cc, phi(cc, m.rel), phi(cc, m.rel));
  auto f = rel_sources(m.rel);
  auto g = rel_targets(m.rel);
  for (std::size_t i = 0; i < t.pairs.size(); ++i) {
    auto [x, y] = t.pairs[i];
    std::size_t z = m.mu.table[i];
    CHECK(f[z] == f[x]);
    CHECK(g[z] == g[y]);
  }
  for (std::size_t x = 0; x < m.rel.dom.size; ++x) {
    CHECK(g[m.unit.table[f[x]]] == f[x]);
    CHECK(f[m.unit.table[f[x]]] == f[x]);
  }
}

TEST_CASE("validation errors carry witnesses") {
  CCategory cc = CCategory::finsets();
  CHECK_THROWS_AS(monoid_from_preorder(cc, 2, {{1, 1}, {0, 1}}),
                  NotReflexiveError);
  CHECK_THROWS_AS(
      monoid_from_preorder(cc, 3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}),
      NotTransitiveError);
}

TEST_CASE("no composition rule exists for a non-transitive relation") {
  CCategory cc = CCategory::finsets();
  Relation r = graph_relation(cc, 3, {{0, 1}, {1, 2}});
  TensorResult t = tensor_relations(cc, phi(cc, r), phi(cc, r));
  REQUIRE(t.product.carrier.size == 1);  // the single composable pair
  // exhaustive candidate scan: every mu: X -> B fails the morphism law
  for (std::size_t cand = 0; cand < r.dom.size; ++cand) {
    RelMonoid m{r, mor_from_table(t.product.carrier, r.dom, {cand}),
                mor_from_table(finset(3), r.dom, {0, 0, 0})};
    Report rep = check_rel_monoid(cc, m);
    CHECK(!rep.all_passed());
  }
}

TEST_CASE("the identity relation is a monoid via the unit constraints") {
  CCategory cc = CCategory::finsets();
  Obj a = finset(3);
  Relation d = identity_relation(cc, a);
  Bicomodule pd = phi(cc, d);
  TensorResult t = tensor_relations(cc, pd, pd);
  // composable pairs are the diagonal (x, x); collapse them
  std::vector<std::size_t> mu(t.pairs.size());
  for (std::size_t i = 0; i < t.pairs.size(); ++i) mu[i] = t.pairs[i].first;
  RelMonoid m{d, mor_from_table(t.product.carrier, a, std::move(mu)),
              identity(a)};
  CHECK(check_rel_monoid(cc, m).all_passed());
  auto w = check_commutative(cc, m);
  REQUIRE(w.has_value());
  CHECK(*w == identity(a));
}

TEST_CASE("equivalence relations are commutative monoids, orders are not") {
  CCategory cc = CCategory::finsets();
  // partition {{0,1},{2}}
  RelMonoid eq = monoid_from_preorder(
      cc, 3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}});
  auto w = check_commutative(cc, eq);
  REQUIRE(w.has_value());
  // witness is the edge reversal
  auto f = rel_sources(eq.rel);
  auto g = rel_targets(eq.rel);
  for (std::size_t i = 0; i < eq.rel.dom.size; ++i) {
    CHECK(f[w->table[i]] == g[i]);
    CHECK(g[w->table[i]] == f[i]);
  }

  RelMonoid order = monoid_from_preorder(cc, 2, {{0, 0}, {1, 1}, {0, 1}});
  CHECK(!check_commutative(cc, order).has_value());

  CHECK_THROWS_AS(check_commutative(cc, eq, 2), BoundsExceededError);
}

TEST_CASE("exhaustive scan over subset relations on three points") {
  CCategory cc = CCategory::finsets();
  std::size_t preorders = 0, equivalences = 0, witnesses = 0;
  for (std::size_t mask = 0; mask < 512; ++mask) {
    std::set<std::pair<std::size_t, std::size_t>> e;
    Edges edges;
    for (std::size_t bit = 0; bit < 9; ++bit)
      if (mask & (1u << bit)) {
        e.insert({bit / 3, bit % 3});
        edges.push_back({bit / 3, bit % 3});
      }
    bool refl = subset_reflexive(3, e);
    bool trans = subset_transitive(e);
    bool built = true;
    try {
      RelMonoid m = monoid_from_preorder(cc, 3, edges);
      CHECK(check_rel_monoid(cc, m).all_passed());
      ++preorders;
      if (check_commutative(cc, m, 9).has_value()) ++witnesses;
    } catch (const NotReflexiveError&) {
      built = false;
    } catch (const NotTransitiveError&) {
      built = false;
    }
    CHECK(built == (refl && trans));
    if (refl && trans && subset_symmetric(e)) ++equivalences;
  }
  // 29 preorders on 3 labelled points, 5 of them equivalence relations
  CHECK(preorders == 29);
  CHECK(equivalences == 5);
  CHECK(witnesses == equivalences);
}

TEST_CASE("every partition of four points yields a commutative monoid") {
  CCategory cc = CCategory::finsets();
  // enumerate set partitions of {0,1,2,3} by block assignment
  std::size_t partitions = 0;
  std::vector<std::size_t> block(4, 0);
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i,
                                                         std::size_t maxb) {
    if (i == 4) {
      ++partitions;
      Edges edges;
      for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y)
          if (block[x] == block[y]) edges.push_back({x, y});
      RelMonoid m = monoid_from_preorder(cc, 4, edges);
      CHECK(check_commutative(cc, m, 16).has_value());
      return;
    }
    for (std::size_t b = 0; b <= maxb; ++b) {
      block[i] = b;
      go(i + 1, std::max(maxb, b + 1));
    }
  };
  go(0, 0);
  CHECK(partitions == 15);  // Bell number B(4)
}

TEST_CASE("generated stages match the path oracle") {
  CCategory cc = CCategory::finsets();

  {
    Relation r = graph_relation(cc, 2, {{0, 1}});
    GeneratedStages st = generate_category(cc, r, std::nullopt, 2);
    CHECK(st.stages[1].dom.size == 0);
  }

  {
    Relation cycle = graph_relation(cc, 2, {{0, 1}, {1, 0}});
    GeneratedStages st = generate_category(cc, cycle, std::nullopt, 3);
    CHECK(st.stages[0].dom.size == 2);
    CHECK(st.stages[1].dom.size == 2);
    CHECK(st.stages[2].dom.size == 2);
    auto pairs_of = [&](const Relation& rel) {
      std::set<std::pair<std::size_t, std::size_t>> out;
      auto f = rel_sources(rel);
      auto g = rel_targets(rel);
      for (std::size_t i = 0; i < rel.dom.size; ++i) out.insert({f[i], g[i]});
      return out;
    };
    CHECK(pairs_of(st.stages[1]) ==
          std::set<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}});
    CHECK(pairs_of(st.stages[2]) ==
          std::set<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 0}});
  }

  auto rng = test::rng(79);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t a = test::pick(rng, 1, 4);
    std::size_t ne = test::pick(rng, 1, 6);
    Edges edges;
    for (std::size_t i = 0; i < ne; ++i)
      edges.push_back({test::pick(rng, 0, a - 1), test::pick(rng, 0, a - 1)});
    Relation r = graph_relation(cc, a, edges);
    std::size_t depth = test::pick(rng, 2, 4);
    GeneratedStages st = generate_category(cc, r, std::nullopt, depth);
    for (std::size_t k = 1; k <= depth; ++k)
      CHECK(st.stages[k - 1].dom.size == count_paths(edges, k));
  }
}

TEST_CASE("unit maps embed identity arrows at every stage") {
  CCategory cc = CCategory::finsets();
  RelMonoid m = monoid_from_preorder(cc, 3,
                                     {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {0, 2}});
  GeneratedStages st = generate_category(cc, m.rel, m.unit, 3);
  REQUIRE(st.embeddings.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    // each embedding is a relation morphism from the identity relation
    CHECK(compose(st.stages[k].arrow, st.embeddings[k]) ==
          cc.delta_of(finset(3)));
  }

  Relation r = graph_relation(cc, 2, {{0, 1}});
  Mor bad_unit = mor_from_table(finset(2), finset(1), {0, 0});
  CHECK_THROWS_AS(generate_category(cc, r, bad_unit, 2), InvalidUnitMapError);
}
