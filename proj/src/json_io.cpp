#include "relcat/json_io.hpp"

#include <algorithm>

#include "relcat/errors.hpp"

namespace relcat {

namespace {

Ambient ambient_from_string(const std::string& s) {
  if (s == "finset") return Ambient::FinSet;
  if (s == "finvect_sum") return Ambient::FinVectSum;
  if (s == "finvect_tensor") return Ambient::FinVectTensor;
  throw SchemaError("unknown ambient: " + s);
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return rat_from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(e.what());
    }
  }
  throw SchemaError("rational entries must be integers or \"p/q\" strings");
}

json rat_to_json(const Rat& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p())
    return json(r.get_num().get_si());
  return json(rat_to_string(r));
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field: ") + key);
  return *it;
}

}  // namespace

json obj_to_json(const Obj& o) {
  return json{{"ambient", ambient_name(o.ambient)}, {"size", o.size}};
}

Obj obj_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("object descriptor must be a JSON object");
  Ambient a = ambient_from_string(field(j, "ambient").get<std::string>());
  const json& sz = field(j, "size");
  if (!sz.is_number_unsigned())
    throw SchemaError("object size must be a nonnegative integer");
  return Obj{a, sz.get<std::size_t>()};
}

json mor_to_json(const Mor& m) {
  json j{{"dom", obj_to_json(m.dom)}, {"cod", obj_to_json(m.cod)}};
  if (m.is_table()) {
    j["table"] = m.table;
  } else {
    json rows = json::array();
    for (const auto& row : m.matrix) {
      json r = json::array();
      for (const Rat& v : row) r.push_back(rat_to_json(v));
      rows.push_back(std::move(r));
    }
    j["matrix"] = std::move(rows);
  }
  return j;
}

Mor mor_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("morphism descriptor must be a JSON object");
  Obj dom = obj_from_json(field(j, "dom"));
  Obj cod = obj_from_json(field(j, "cod"));
  try {
    if (j.contains("table")) {
      const json& t = j["table"];
      if (!t.is_array()) throw SchemaError("table must be an array");
      std::vector<std::size_t> table;
      for (const json& v : t) {
        if (!v.is_number_unsigned()) throw SchemaError("table entries are indices");
        table.push_back(v.get<std::size_t>());
      }
      return mor_from_table(dom, cod, std::move(table));
    }
    if (j.contains("matrix")) {
      const json& rows = j["matrix"];
      if (!rows.is_array()) throw SchemaError("matrix must be an array of rows");
      Matrix m;
      for (const json& row : rows) {
        if (!row.is_array()) throw SchemaError("matrix rows must be arrays");
        std::vector<Rat> r;
        for (const json& v : row) r.push_back(rat_from_json(v));
        m.push_back(std::move(r));
      }
      return mor_from_matrix(dom, cod, std::move(m));
    }
  } catch (const RelcatError& e) {
    throw SchemaError(e.what());
  }
  throw SchemaError("morphism needs a \"table\" or a \"matrix\"");
}

json comonoid_to_json(const ComonoidData& c) {
  return json{{"comonoid",
               {{"carrier", obj_to_json(c.carrier)},
                {"delta", mor_to_json(c.delta)},
                {"epsilon", mor_to_json(c.epsilon)}}}};
}

ComonoidData comonoid_from_json(const json& j) {
  const json& inner = j.contains("comonoid") ? j["comonoid"] : j;
  return ComonoidData{obj_from_json(field(inner, "carrier")),
                      mor_from_json(field(inner, "delta")),
                      mor_from_json(field(inner, "epsilon"))};
}

CCategory ccategory_from_json(const json& j) {
  const json& inner = field(j, "c_category");
  Ambient a = ambient_from_string(field(inner, "ambient").get<std::string>());
  const json& assign = field(inner, "assignments");
  if (assign.is_string() && assign.get<std::string>() == "canonical") {
    switch (a) {
      case Ambient::FinSet: return CCategory::finsets();
      case Ambient::FinVectSum: return CCategory::vec_sums();
      default:
        throw SchemaError("finvect_tensor needs explicit assignments");
    }
  }
  if (a != Ambient::FinVectTensor)
    throw SchemaError("explicit assignments are for finvect_tensor; use \"canonical\"");
  if (!assign.is_array()) throw SchemaError("assignments must be an array");
  std::map<std::size_t, ComonoidData> table;
  for (const json& entry : assign) {
    Obj o = obj_from_json(field(entry, "object"));
    table.emplace(o.size, comonoid_from_json(field(entry, "comonoid")));
  }
  try {
    return CCategory::vec_tensors(std::move(table));
  } catch (const RelcatError& e) {
    throw SchemaError(e.what());
  }
}

Relation relation_from_json(const CCategory& cc, const json& j) {
  if (j.contains("graph")) {
    const json& g = j["graph"];
    const json& vj = field(g, "vertices");
    std::size_t n = 0;
    std::map<std::string, std::size_t> names;
    if (vj.is_number_unsigned()) {
      n = vj.get<std::size_t>();
    } else if (vj.is_array()) {
      for (const json& v : vj) {
        if (!v.is_string()) throw SchemaError("vertex names must be strings");
        if (!names.emplace(v.get<std::string>(), n).second)
          throw SchemaError("duplicate vertex name");
        ++n;
      }
    } else {
      throw SchemaError("vertices must be a count or a name list");
    }
    auto resolve = [&](const json& v) -> std::size_t {
      if (v.is_number_unsigned()) return v.get<std::size_t>();
      if (v.is_string()) {
        auto it = names.find(v.get<std::string>());
        if (it == names.end())
          throw SchemaError("unknown vertex name: " + v.get<std::string>());
        return it->second;
      }
      throw SchemaError("edge endpoints must be indices or names");
    };
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const json& e : field(g, "edges")) {
      if (!e.is_array() || e.size() != 2)
        throw SchemaError("edges must be [src, dst] pairs");
      edges.emplace_back(resolve(e[0]), resolve(e[1]));
    }
    try {
      return graph_relation(cc, n, edges);
    } catch (const RelcatError& e) {
      throw SchemaError(e.what());
    }
  }
  const json& inner = field(j, "relation");
  Obj base = obj_from_json(field(inner, "base"));
  Mor arrow = mor_from_json(field(inner, "arrow"));
  try {
    return make_relation(cc, base, arrow);
  } catch (const RelcatError& e) {
    throw SchemaError(e.what());
  }
}

json relation_to_json(const Relation& r) {
  return json{{"relation",
               {{"base", obj_to_json(r.base)},
                {"dom", obj_to_json(r.dom)},
                {"arrow", mor_to_json(r.arrow)}}}};
}

json bicomodule_to_json(const Bicomodule& b) {
  return json{{"bicomodule",
               {{"base", obj_to_json(b.base)},
                {"carrier", obj_to_json(b.carrier)},
                {"delta_l", mor_to_json(b.delta_l)},
                {"delta_r", mor_to_json(b.delta_r)}}}};
}

Bicomodule bicomodule_from_json(const json& j) {
  const json& inner = field(j, "bicomodule");
  return Bicomodule{obj_from_json(field(inner, "base")),
                    obj_from_json(field(inner, "carrier")),
                    mor_from_json(field(inner, "delta_l")),
                    mor_from_json(field(inner, "delta_r"))};
}

RelMonoid relmonoid_from_json(const CCategory& cc, const json& j) {
  const json& inner = field(j, "monoid");
  Relation r = relation_from_json(cc, inner);
  return RelMonoid{r, mor_from_json(field(inner, "mu")),
                   mor_from_json(field(inner, "unit"))};
}

json relmonoid_to_json(const RelMonoid& m) {
  json rel = relation_to_json(m.rel);
  return json{{"monoid",
               {{"relation", rel["relation"]},
                {"mu", mor_to_json(m.mu)},
                {"unit", mor_to_json(m.unit)}}}};
}

namespace {

template <std::size_t N>
void load_overrides(const json& j, const char* key,
                    std::map<std::array<std::size_t, N>, Mor>& out) {
  if (!j.contains(key)) return;
  for (const json& entry : j[key]) {
    const json& objs = field(entry, "objs");
    if (!objs.is_array() || objs.size() != N)
      throw SchemaError(std::string(key) + " entries need " + std::to_string(N) +
                        " object sizes");
    std::array<std::size_t, N> sizes{};
    for (std::size_t i = 0; i < N; ++i) sizes[i] = objs[i].get<std::size_t>();
    out.emplace(sizes, mor_from_json(field(entry, "mor")));
  }
}

}  // namespace

MonoidalStructure structure_from_json(const json& j) {
  const json& inner = j.contains("structure") ? j["structure"] : j;
  MonoidalStructure s;
  s.ambient = ambient_from_string(field(inner, "ambient").get<std::string>());
  load_overrides<3>(inner, "alpha", s.alpha_override);
  load_overrides<2>(inner, "beta", s.beta_override);
  load_overrides<2>(inner, "gamma", s.gamma_override);
  load_overrides<2>(inner, "sigma", s.sigma_override);
  return s;
}

std::vector<Obj> universe_from_json(Ambient a, const json& j) {
  if (!j.is_array()) throw SchemaError("universe must be an array");
  std::vector<Obj> out;
  for (const json& entry : j) {
    if (entry.is_number_unsigned())
      out.push_back(Obj{a, entry.get<std::size_t>()});
    else
      out.push_back(obj_from_json(entry));
  }
  return out;
}

std::vector<Mor> generators_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("generators must be an array");
  std::vector<Mor> out;
  for (const json& entry : j) out.push_back(mor_from_json(entry));
  return out;
}

QuantTriple triple_from_json(const json& j) {
  const json& inner = field(j, "triple");
  QuantTriple t;
  t.ambient = ambient_from_string(field(inner, "ambient").get<std::string>());
  t.universe = universe_from_json(t.ambient, field(inner, "universe"));
  for (const json& entry : field(inner, "lambda")) {
    const json& objs = field(entry, "objs");
    if (!objs.is_array() || objs.size() != 2)
      throw SchemaError("lambda entries need two object sizes");
    t.lambda.emplace(
        std::array<std::size_t, 2>{objs[0].get<std::size_t>(),
                                   objs[1].get<std::size_t>()},
        mor_from_json(field(entry, "mor")));
  }
  for (const json& entry : field(inner, "mu")) {
    t.mu.emplace(field(entry, "obj").get<std::size_t>(),
                 mor_from_json(field(entry, "mor")));
  }
  t.eta = mor_from_json(field(inner, "eta"));
  if (inner.contains("action") && !inner["action"].is_string()) {
    for (const json& pair : inner["action"]) {
      if (!pair.is_array() || pair.size() != 2)
        throw SchemaError("action must be \"identity\" or a pair list");
      t.action.object_map[pair[0].get<std::size_t>()] = pair[1].get<std::size_t>();
    }
  }
  if (inner.contains("generators"))
    t.generators = generators_from_json(inner["generators"]);
  return t;
}

json triple_to_json(const QuantTriple& t) {
  json lambda = json::array();
  for (const auto& [key, m] : t.lambda)
    lambda.push_back(json{{"objs", {key[0], key[1]}}, {"mor", mor_to_json(m)}});
  json mu = json::array();
  for (const auto& [key, m] : t.mu)
    mu.push_back(json{{"obj", key}, {"mor", mor_to_json(m)}});
  json universe = json::array();
  for (const Obj& o : t.universe) universe.push_back(obj_to_json(o));
  json gens = json::array();
  for (const Mor& g : t.generators) gens.push_back(mor_to_json(g));
  json action;
  if (t.action.trivial()) {
    action = "identity";
  } else {
    action = json::array();
    for (const auto& [a, b] : t.action.object_map) action.push_back({a, b});
  }
  return json{{"triple",
               {{"ambient", ambient_name(t.ambient)},
                {"universe", universe},
                {"lambda", lambda},
                {"mu", mu},
                {"eta", mor_to_json(t.eta)},
                {"action", action},
                {"generators", gens}}}};
}

MonoidObject monoid_object_from_json(const json& j) {
  const json& inner = field(j, "monoid_object");
  return MonoidObject{obj_from_json(field(inner, "carrier")),
                      mor_from_json(field(inner, "product")),
                      mor_from_json(field(inner, "unit"))};
}

json monoid_object_to_json(const MonoidObject& m) {
  return json{{"monoid_object",
               {{"carrier", obj_to_json(m.carrier)},
                {"product", mor_to_json(m.product)},
                {"unit", mor_to_json(m.unit)}}}};
}

json report_to_json(const Report& r) {
  json checks = json::array();
  std::size_t passed = 0;
  for (const CheckResult& c : r.results) {
    if (c.passed) ++passed;
    checks.push_back(json{{"law", c.law},
                          {"passed", c.passed},
                          {"checked", c.checked},
                          {"skipped", c.skipped},
                          {"witness", c.witness}});
  }
  return json{{"checks", checks},
              {"summary",
               {{"laws", r.results.size()},
                {"passed", passed},
                {"failed", r.results.size() - passed}}},
              {"all_passed", r.all_passed()}};
}

}  // namespace relcat
