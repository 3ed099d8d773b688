// Command-line front end: loads JSON descriptors, runs the engine
// operations, prints text or JSON reports. Exit codes: 0 all checks pass,
// 1 a check failed (or no witness found), 2 malformed input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "relcat/errors.hpp"
#include "relcat/json_io.hpp"
#include "relcat/products.hpp"

using namespace relcat;

namespace {

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("JSON parse error in ") + path + ": " + e.what());
  }
}

struct Output {
  bool as_json = false;

  int finish(const Report& rep, json extra = json::object()) const {
    if (as_json) {
      json out = report_to_json(rep);
      for (auto& [k, v] : extra.items()) out[k] = v;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << rep.to_string();
      if (!extra.empty()) std::cout << extra.dump(2) << "\n";
    }
    return rep.all_passed() ? 0 : 1;
  }

  int emit(const json& payload) const {
    std::cout << payload.dump(2) << "\n";
    return 0;
  }
};

CCategory load_ccat(const std::string& path) {
  if (path.empty()) return CCategory::finsets();
  return ccategory_from_json(load_file(path));
}

Relation load_relation(const CCategory& cc, const std::string& path,
                       std::size_t base_hint) {
  json j = load_file(path);
  if (j.is_array()) {
    // bare edge list needs --base
    if (base_hint == 0) throw SchemaError("bare edge lists need --base");
    json wrapped{{"graph", {{"vertices", base_hint}, {"edges", j}}}};
    return relation_from_json(cc, wrapped);
  }
  if (j.contains("edges") && !j.contains("graph")) {
    std::size_t n = base_hint;
    if (j.contains("vertices")) n = j["vertices"].get<std::size_t>();
    if (n == 0) throw SchemaError("edge-list files need vertices or --base");
    json wrapped{{"graph", {{"vertices", n}, {"edges", j["edges"]}}}};
    return relation_from_json(cc, wrapped);
  }
  return relation_from_json(cc, j);
}

Bicomodule load_bicomodule(const CCategory& cc, const std::string& path,
                           std::size_t base_hint) {
  json j = load_file(path);
  if (j.contains("bicomodule")) return bicomodule_from_json(j);
  Relation r = load_relation(cc, path, base_hint);
  return phi(cc, r);
}

json labels_json(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  json out = json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relcat: finite relation-category engine"};
  app.require_subcommand(1);

  Output out;
  app.add_flag("--json", out.as_json, "machine-readable output");
  unsigned long long seed = 20240915ULL;
  app.add_option("--seed", seed, "seed for randomized subcommands");

  std::string ccat_path, input_path, lhs_path, rhs_path, d3_path, unit_path;
  std::string triple_path, structure_path;
  std::size_t base = 0, depth = 2, dim = 2;
  unsigned field_p = 2;
  std::size_t bound = 8;
  bool cosemigroup = false;
  unsigned mod_p = 0;

  auto* cs = app.add_subcommand("check-structure", "verify symmetric monoidal laws");
  cs->add_option("--input", input_path)->required();

  auto* cm = app.add_subcommand("check-comonoid", "verify comonoid laws");
  cm->add_option("--input", input_path)->required();
  cm->add_flag("--cosemigroup", cosemigroup, "coassociativity only");
  cm->add_option("--mod", mod_p, "check laws modulo a prime");

  auto* ccat_cmd = app.add_subcommand("check-ccat", "verify the per-object structure");
  ccat_cmd->add_option("--input", input_path)->required();

  auto* phi_cmd = app.add_subcommand("phi", "relation -> bicomodule");
  phi_cmd->add_option("--ccat", ccat_path);
  phi_cmd->add_option("--relation", input_path)->required();
  phi_cmd->add_option("--base", base);

  auto* psi_cmd = app.add_subcommand("psi", "bicomodule -> relation");
  psi_cmd->add_option("--ccat", ccat_path);
  psi_cmd->add_option("--bicomodule", input_path)->required();

  auto* cb = app.add_subcommand("check-bicomodule", "verify the coaction laws");
  cb->add_option("--ccat", ccat_path);
  cb->add_option("--bicomodule", input_path)->required();

  auto* box_cmd = app.add_subcommand("box", "unconstrained product");
  box_cmd->add_option("--ccat", ccat_path);
  box_cmd->add_option("--lhs", lhs_path)->required();
  box_cmd->add_option("--rhs", rhs_path)->required();
  box_cmd->add_option("--base", base);

  auto* tensor_cmd = app.add_subcommand("tensor", "equalizer tensor product");
  tensor_cmd->add_option("--ccat", ccat_path);
  tensor_cmd->add_option("--lhs", lhs_path)->required();
  tensor_cmd->add_option("--rhs", rhs_path)->required();
  tensor_cmd->add_option("--base", base);

  auto* odot_cmd = app.add_subcommand("odot", "composable-pair product of relations");
  odot_cmd->add_option("--ccat", ccat_path);
  odot_cmd->add_option("--lhs", lhs_path)->required();
  odot_cmd->add_option("--rhs", rhs_path)->required();
  odot_cmd->add_option("--base", base);

  auto* con_cmd = app.add_subcommand("constraints", "induced m/l/r with coherence");
  con_cmd->add_option("--ccat", ccat_path);
  con_cmd->add_option("--d1", lhs_path)->required();
  con_cmd->add_option("--d2", rhs_path)->required();
  con_cmd->add_option("--d3", d3_path)->required();
  con_cmd->add_option("--base", base);

  auto* sym_cmd = app.add_subcommand("symmetry", "induced symmetry with identities");
  sym_cmd->add_option("--ccat", ccat_path);
  sym_cmd->add_option("--lhs", lhs_path)->required();
  sym_cmd->add_option("--rhs", rhs_path)->required();
  sym_cmd->add_option("--base", base);

  auto* mon_cmd = app.add_subcommand("monoid", "monoid from a reflexive transitive edge set");
  mon_cmd->add_option("--preorder", input_path)->required();
  mon_cmd->add_option("--base", base);

  auto* comm_cmd = app.add_subcommand("commutative", "search a commutativity witness");
  comm_cmd->add_option("--monoid", input_path)->required();
  comm_cmd->add_option("--base", base);
  comm_cmd->add_option("--bound", bound);

  auto* gen_cmd = app.add_subcommand("generate", "composable-string stages of a graph");
  gen_cmd->add_option("--relation", input_path)->required();
  gen_cmd->add_option("--depth", depth)->required();
  gen_cmd->add_option("--unit", unit_path);
  gen_cmd->add_option("--base", base);

  auto* q_cmd = app.add_subcommand("quantize", "transport a monoid object along a triple");
  q_cmd->add_option("--monoid-object", input_path)->required();
  q_cmd->add_option("--triple", triple_path)->required();
  q_cmd->add_option("--witness", unit_path);

  auto* ct_cmd = app.add_subcommand("check-triple", "verify subgroup membership");
  ct_cmd->add_option("--triple", triple_path)->required();

  auto* cq_cmd = app.add_subcommand("check-qfunctor", "verify the five object equations");
  cq_cmd->add_option("--functor", input_path)->required();

  auto* sc_cmd = app.add_subcommand("solve-comonoids", "brute-force field solutions");
  sc_cmd->add_option("--dim", dim)->required();
  sc_cmd->add_option("--field", field_p)->required();

  // global flags may follow the subcommand name
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cs->parsed()) {
      json j = load_file(input_path);
      MonoidalStructure s = structure_from_json(j);
      std::vector<Obj> universe = universe_from_json(s.ambient, j.at("universe"));
      std::vector<Mor> gens;
      if (j.contains("generators")) gens = generators_from_json(j["generators"]);
      return out.finish(check_symmetric_monoidal(s, universe, gens));
    }
    if (cm->parsed()) {
      ComonoidData c = comonoid_from_json(load_file(input_path));
      Report rep;
      if (mod_p != 0) {
        CheckResult& row = rep.add("comonoid laws mod " + std::to_string(mod_p));
        row.checked = 1;
        row.passed = check_comonoid_mod(c, mod_p);
      } else {
        rep = check_comonoid(c, cosemigroup);
        if (!cosemigroup) {
          CheckResult& srow = rep.add("sigma-commutativity");
          srow.checked = 1;
          srow.passed = check_sigma_commutative(c);
          CheckResult& mrow = rep.add("coproduct mono");
          mrow.checked = 1;
          mrow.passed = check_coproduct_mono(c);
        }
      }
      return out.finish(rep);
    }
    if (ccat_cmd->parsed()) {
      json j = load_file(input_path);
      CCategory cc = ccategory_from_json(j);
      std::vector<Obj> universe = universe_from_json(cc.ambient(), j.at("universe"));
      std::vector<Mor> gens;
      if (j.contains("generators")) gens = generators_from_json(j["generators"]);
      return out.finish(check_c_category(cc, universe, gens));
    }
    if (phi_cmd->parsed()) {
      CCategory cc = load_ccat(ccat_path);
      Relation r = load_relation(cc, input_path, base);
      return out.emit(bicomodule_to_json(phi(cc, r)));
    }
    if (psi_cmd->parsed()) {
      CCategory cc = load_ccat(ccat_path);
      Bicomodule b = bicomodule_from_json(load_file(input_path));
      Report rep = check_bicomodule(cc, b);
      if (!rep.all_passed()) return out.finish(rep);
      return out.emit(relation_to_json(psi(cc, b)));
    }
    if (cb->parsed()) {
      CCategory cc = load_ccat(ccat_path);
      Bicomodule b = bicomodule_from_json(load_file(input_path));
      return out.finish(check_bicomodule(cc, b));
    }
    if (box_cmd->parsed()) {
      CCategory cc = load_ccat(ccat_path);
      Bicomodule b1 = load_bicomodule(cc, lhs_path, base);
      Bicomodule b2 = load_bicomodule(cc, rhs_path, base);
      return out.emit(bicomodule_to_json(box_product(cc, b1, b2)));
    }
    if (tensor_cmd->parsed()) {
      CCategory cc = load_ccat(ccat_path);
      Bicomodule b1 = load_bicomodule(cc, lhs_path, base);
      Bicomodule b2 = load_bicomodule(cc, rhs_path, base);
      TensorResult t = tensor_relations(cc, b1, b2);
      json payload = relation_to_json(psi(cc, t.product));
      payload["carrier_labels"] = labels_json(t.pairs);
      payload["pi"] = mor_to_json(t.pi);
      return out.emit(payload);
    }
    if (odot_cmd->parsed()) {
      CCategory cc = load_ccat(ccat_path);
      Relation r = load_relation(cc, lhs_path, base);
      Relation s = load_relation(cc, rhs_path, base);
      Relation prod = odot(cc, r, s);
      TensorResult t = tensor_relations(cc, phi(cc, r), phi(cc, s));
      json payload = relation_to_json(prod);
      payload["carrier_labels"] = labels_json(t.pairs);
      return out.emit(payload);
    }
    if (con_cmd->parsed()) {
      CCategory cc = load_ccat(ccat_path);
      Bicomodule b1 = load_bicomodule(cc, lhs_path, base);
      Bicomodule b2 = load_bicomodule(cc, rhs_path, base);
      Bicomodule b3 = load_bicomodule(cc, d3_path, base);
      InducedConstraints ic = induced_constraints(cc, b1, b2, b3);
      json extra{{"m", mor_to_json(ic.m)},
                 {"l", mor_to_json(ic.l)},
                 {"r", mor_to_json(ic.r)}};
      return out.finish(ic.report, extra);
    }
    if (sym_cmd->parsed()) {
      CCategory cc = load_ccat(ccat_path);
      Bicomodule b1 = load_bicomodule(cc, lhs_path, base);
      Bicomodule b2 = load_bicomodule(cc, rhs_path, base);
      Mor s = induced_symmetry(cc, b1, b2);
      Report rep = symmetry_report(cc, b1, b2, b1);
      return out.finish(rep, json{{"symmetry", mor_to_json(s)}});
    }
    if (mon_cmd->parsed()) {
      CCategory cc = CCategory::finsets();
      Relation r = load_relation(cc, input_path, base);
      std::vector<std::size_t> f = rel_sources(r), g = rel_targets(r);
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t i = 0; i < r.dom.size; ++i) edges.emplace_back(f[i], g[i]);
      RelMonoid m = monoid_from_preorder(cc, r.base.size, edges);
      Report rep = check_rel_monoid(cc, m);
      return out.finish(rep, relmonoid_to_json(m));
    }
    if (comm_cmd->parsed()) {
      CCategory cc = CCategory::finsets();
      json j = load_file(input_path);
      RelMonoid m;
      if (j.contains("monoid")) {
        m = relmonoid_from_json(cc, j);
      } else {
        Relation r = load_relation(cc, input_path, base);
        std::vector<std::size_t> f = rel_sources(r), g = rel_targets(r);
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t i = 0; i < r.dom.size; ++i) edges.emplace_back(f[i], g[i]);
        m = monoid_from_preorder(cc, r.base.size, edges);
      }
      auto witness = check_commutative(cc, m, bound);
      Report rep;
      // the searched isomorphism is required to preserve the unit map
      CheckResult& row = rep.add("commutativity witness (unit-preserving)");
      row.checked = 1;
      row.passed = witness.has_value();
      if (!witness) row.witness = "exhausted all bijections";
      json extra = json::object();
      if (witness) extra["witness"] = mor_to_json(*witness);
      return out.finish(rep, extra);
    }
    if (gen_cmd->parsed()) {
      CCategory cc = CCategory::finsets();
      Relation r = load_relation(cc, input_path, base);
      std::optional<Mor> unit;
      if (!unit_path.empty()) unit = mor_from_json(load_file(unit_path));
      GeneratedStages st = generate_category(cc, r, unit, depth);
      json stages = json::array();
      for (std::size_t k = 0; k < st.stages.size(); ++k) {
        json entry = relation_to_json(st.stages[k]);
        entry["carrier_labels"] = labels_json(st.pairs[k]);
        if (!st.embeddings.empty())
          entry["unit_embedding"] = mor_to_json(st.embeddings[k]);
        stages.push_back(std::move(entry));
      }
      return out.emit(json{{"stages", stages}});
    }
    if (q_cmd->parsed()) {
      MonoidObject mon = monoid_object_from_json(load_file(input_path));
      QuantTriple t = triple_from_json(load_file(triple_path));
      Report hrep = check_h_membership(t);
      if (!hrep.all_passed()) return out.finish(hrep);
      MonoidalStructure source = builtin_structure(t.ambient);
      MonoidalStructure target = hat_transform(source, t);
      std::optional<Mor> witness;
      if (!unit_path.empty()) witness = mor_from_json(load_file(unit_path));
      QuantizedMonoid qm =
          quantize_monoid(mon, identity_functor(t), source, target, witness);
      json extra = monoid_object_to_json(qm.monoid);
      if (qm.witness) extra["witness"] = mor_to_json(*qm.witness);
      return out.finish(qm.report, extra);
    }
    if (ct_cmd->parsed()) {
      QuantTriple t = triple_from_json(load_file(triple_path));
      return out.finish(check_h_membership(t));
    }
    if (cq_cmd->parsed()) {
      json j = load_file(input_path);
      const json& inner = j.at("functor");
      FunctorData fd;
      fd.triple = triple_from_json(inner);
      if (inner.contains("object_map"))
        for (const json& pair : inner["object_map"])
          fd.object_map[pair.at(0).get<std::size_t>()] =
              Obj{fd.triple.ambient, pair.at(1).get<std::size_t>()};
      MonoidalStructure s1 = structure_from_json(inner.at("source"));
      MonoidalStructure s2 = structure_from_json(inner.at("target"));
      return out.finish(check_quantized_functor(fd, s1, s2));
    }
    if (sc_cmd->parsed()) {
      auto sols = solve_comonoid_equations(dim, field_p);
      json list = json::array();
      for (const FieldComonoid& fc : sols) {
        json entry{{"q", fc.q}, {"r", fc.r}};
        entry["lift"] = comonoid_to_json(fc.lift())["comonoid"];
        list.push_back(std::move(entry));
      }
      return out.emit(json{{"count", sols.size()}, {"solutions", list}});
    }
  } catch (const SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const RelcatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
