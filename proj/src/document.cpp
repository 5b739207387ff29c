#include "mvpref/document.hpp"

#include <fstream>
#include <sstream>

namespace mvpref {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw DocumentError(where + ": " + what);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail("document", "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(key, "missing field");
  return *it;
}

Element label_at(const json& v, const Chain& chain, const std::string& where) {
  std::string text;
  if (v.is_string())
    text = v.get<std::string>();
  else if (v.is_number())
    text = v.dump();
  else
    fail(where, "expected a label");
  auto e = chain.find(text);
  if (!e) fail(where, "unknown label '" + text + "' for " + chain.describe());
  return *e;
}

std::vector<std::string> read_worlds(const json& j) {
  const json& w = field(j, "worlds");
  if (!w.is_array() || w.empty()) fail("worlds", "expected a non-empty array of names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i].is_string()) fail("worlds[" + std::to_string(i) + "]", "expected a string");
    out.push_back(w[i].get<std::string>());
  }
  return out;
}

std::size_t world_position(const std::vector<std::string>& worlds, const std::string& name,
                           const std::string& where) {
  for (std::size_t i = 0; i < worlds.size(); ++i)
    if (worlds[i] == name) return i;
  fail(where, "unknown world '" + name + "'");
}

Valuation read_valuation(const json& j, const Chain& chain,
                         const std::vector<std::string>& worlds) {
  Valuation val;
  auto it = j.find("valuation");
  if (it == j.end()) return val;
  if (!it->is_object()) fail("valuation", "expected an object keyed by variable");
  const std::size_t n = worlds.size();
  for (const auto& [name, row] : it->items()) {
    const std::string where = "valuation." + name;
    std::vector<Element> vals(n, chain.bottom());
    if (row.is_array()) {
      if (row.size() != n)
        fail(where, "has " + std::to_string(row.size()) + " entries for " +
                        std::to_string(n) + " worlds");
      for (std::size_t w = 0; w < n; ++w)
        vals[w] = label_at(row[w], chain, where + "[" + std::to_string(w) + "]");
    } else if (row.is_object()) {
      std::vector<bool> seen(n, false);
      for (const auto& [wname, v] : row.items()) {
        const std::size_t w = world_position(worlds, wname, where);
        vals[w] = label_at(v, chain, where + "." + wname);
        seen[w] = true;
      }
      for (std::size_t w = 0; w < n; ++w)
        if (!seen[w]) fail(where, "no value at world '" + worlds[w] + "'");
    } else {
      fail(where, "expected an object keyed by world or an array");
    }
    val[name] = std::move(vals);
  }
  return val;
}

json valuation_to_json(const Valuation& val, const Chain& chain,
                       const std::vector<std::string>& worlds) {
  json out = json::object();
  for (const auto& [name, vals] : val) {
    json row = json::object();
    for (std::size_t w = 0; w < worlds.size(); ++w) row[worlds[w]] = chain.label(vals[w]);
    out[name] = row;
  }
  return out;
}

CrispRelation read_crisp(const json& m, std::size_t n, const std::string& where) {
  if (!m.is_array() || m.size() != n) fail(where, "expected a " + std::to_string(n) + "x" +
                                                      std::to_string(n) + " matrix");
  CrispRelation r(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (!m[u].is_array() || m[u].size() != n)
      fail(where + "[" + std::to_string(u) + "]", "expected " + std::to_string(n) + " entries");
    for (std::size_t v = 0; v < n; ++v) {
      const json& x = m[u][v];
      if (x.is_boolean())
        r.set(u, v, x.get<bool>());
      else if (x.is_number_integer() && (x.get<int>() == 0 || x.get<int>() == 1))
        r.set(u, v, x.get<int>() == 1);
      else
        fail(where + "[" + std::to_string(u) + "][" + std::to_string(v) + "]", "expected 0 or 1");
    }
  }
  return r;
}

json crisp_to_json(const CrispRelation& r) {
  json m = json::array();
  for (std::size_t u = 0; u < r.size(); ++u) {
    json row = json::array();
    for (std::size_t v = 0; v < r.size(); ++v) row.push_back(r(u, v) ? 1 : 0);
    m.push_back(row);
  }
  return m;
}

std::map<Element, CrispRelation> read_layers(const json& j, const char* key, const Chain& chain,
                                             std::size_t n) {
  const json& layers = field(j, key);
  if (!layers.is_object()) fail(key, "expected an object keyed by level");
  std::map<Element, CrispRelation> out;
  for (const auto& [label, m] : layers.items()) {
    const std::string where = std::string(key) + "." + label;
    auto e = chain.find(label);
    if (!e) fail(where, "unknown level '" + label + "'");
    out[*e] = read_crisp(m, n, where);
  }
  return out;
}

}  // namespace

json chain_to_json(const Chain& chain) {
  switch (chain.family()) {
    case Chain::Family::Lukasiewicz:
      return json{{"kind", "lukasiewicz"}, {"n", chain.size()}};
    case Chain::Family::Godel:
      return json{{"kind", "godel"}, {"n", chain.size()}};
    case Chain::Family::Custom:
      break;
  }
  json mono = json::array();
  for (Element x : chain.elements()) {
    json row = json::array();
    for (Element y : chain.elements()) row.push_back(chain.label(chain.mono(x, y)));
    mono.push_back(row);
  }
  return json{{"kind", "custom"}, {"elements", chain.labels()}, {"mono", mono}};
}

ChainPtr chain_from_json(const json& j) {
  try {
    if (j.is_string()) return std::make_shared<const Chain>(chain_from_spec(j.get<std::string>()));
    if (j.is_object()) {
      const auto kind = field(j, "kind").get<std::string>();
      if (kind == "lukasiewicz")
        return std::make_shared<const Chain>(Chain::lukasiewicz(field(j, "n").get<std::size_t>()));
      if (kind == "godel")
        return std::make_shared<const Chain>(Chain::godel(field(j, "n").get<std::size_t>()));
      if (kind == "custom") {
        auto labels = field(j, "elements").get<std::vector<std::string>>();
        auto mono = field(j, "mono").get<std::vector<std::vector<std::string>>>();
        return std::make_shared<const Chain>(Chain::custom(std::move(labels), mono));
      }
      fail("lattice.kind", "expected lukasiewicz, godel or custom");
    }
  } catch (const json::exception& e) {
    fail("lattice", e.what());
  } catch (const LatticeError& e) {
    fail("lattice", e.what());
  }
  fail("lattice", "expected {\"kind\": ..., \"n\": N}, a custom chain, or \"lukasiewicz:N\"");
}

ModelDocument read_model_document(const json& j) {
  ModelDocument doc;
  doc.chain = chain_from_json(field(j, "lattice"));
  const Chain& chain = *doc.chain;
  doc.worlds = read_worlds(j);
  const std::size_t n = doc.worlds.size();
  const json& rel = field(j, "relation");
  if (!rel.is_array() || rel.size() != n)
    fail("relation", "expected " + std::to_string(n) + " rows, one per world");
  std::vector<Element> entries(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    const std::string row = "relation[" + std::to_string(u) + "]";
    if (!rel[u].is_array() || rel[u].size() != n)
      fail(row, "expected " + std::to_string(n) + " entries");
    for (std::size_t v = 0; v < n; ++v)
      entries[u * n + v] = label_at(rel[u][v], chain, row + "[" + std::to_string(v) + "]");
  }
  doc.relation = FuzzyRelation(n, std::move(entries));
  doc.valuation = read_valuation(j, chain, doc.worlds);
  if (auto it = j.find("kind"); it != j.end()) {
    if (*it == "general")
      doc.general = true;
    else if (*it != "preference")
      fail("kind", "expected \"preference\" or \"general\"");
  }
  if (auto it = j.find("strict_cuts"); it != j.end()) {
    if (*it == "strict-then-cut")
      doc.strict_cuts = StrictCuts::StrictThenCut;
    else if (*it != "cut-then-strict")
      fail("strict_cuts", "expected \"cut-then-strict\" or \"strict-then-cut\"");
  }
  if (auto it = j.find("witness_world"); it != j.end()) {
    if (!it->is_string()) fail("witness_world", "expected a world name");
    doc.witness_world = world_position(doc.worlds, it->get<std::string>(), "witness_world");
  }
  return doc;
}

Model to_model(const ModelDocument& doc) {
  Model m = doc.general
                ? Model::general(doc.chain, doc.worlds, doc.relation, doc.valuation)
                : Model::preference(doc.chain, doc.worlds, doc.relation, doc.valuation);
  m.set_strict_cuts(doc.strict_cuts);
  return m;
}

json model_to_json(const Model& m, std::optional<std::size_t> witness_world) {
  const Chain& chain = m.chain();
  json rel = json::array();
  for (std::size_t u = 0; u < m.size(); ++u) {
    json row = json::array();
    for (std::size_t v = 0; v < m.size(); ++v) row.push_back(chain.label(m.relation()(u, v)));
    rel.push_back(row);
  }
  json j{{"lattice", chain_to_json(chain)},
         {"worlds", m.worlds()},
         {"relation", rel},
         {"valuation", valuation_to_json(m.valuation(), chain, m.worlds())}};
  if (!m.is_preference()) j["kind"] = "general";
  if (m.strict_cuts() == StrictCuts::StrictThenCut) j["strict_cuts"] = "strict-then-cut";
  if (witness_world) j["witness_world"] = m.worlds().at(*witness_world);
  return j;
}

bool is_layered_document(const json& j) {
  return j.is_object() && j.contains("weak") && !j.contains("relation");
}

LayeredModel read_layered_document(const json& j) {
  LayeredModel lm;
  lm.chain = chain_from_json(field(j, "lattice"));
  lm.worlds = read_worlds(j);
  lm.weak = read_layers(j, "weak", *lm.chain, lm.worlds.size());
  lm.strict = read_layers(j, "strict", *lm.chain, lm.worlds.size());
  lm.valuation = read_valuation(j, *lm.chain, lm.worlds);
  try {
    validate(lm);
  } catch (const LayeredError& e) {
    fail("layers", e.what());
  }
  return lm;
}

json layered_to_json(const LayeredModel& lm) {
  const Chain& chain = *lm.chain;
  json weak = json::object(), strict = json::object();
  for (const auto& [b, r] : lm.weak) weak[chain.label(b)] = crisp_to_json(r);
  for (const auto& [b, r] : lm.strict) strict[chain.label(b)] = crisp_to_json(r);
  return json{{"lattice", chain_to_json(chain)},
              {"worlds", lm.worlds},
              {"weak", weak},
              {"strict", strict},
              {"valuation", valuation_to_json(lm.valuation, chain, lm.worlds)}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DocumentError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw DocumentError(path + ": cannot write file");
  out << j.dump(2) << '\n';
}

Model load_model(const std::string& path) {
  try {
    return to_model(read_model_document(read_json_file(path)));
  } catch (const DocumentError& e) {
    const std::string what = e.what();
    if (what.rfind(path, 0) == 0) throw;
    throw DocumentError(path + ": " + what);
  }
}

LayeredModel load_layered(const std::string& path) {
  try {
    return read_layered_document(read_json_file(path));
  } catch (const DocumentError& e) {
    const std::string what = e.what();
    if (what.rfind(path, 0) == 0) throw;
    throw DocumentError(path + ": " + what);
  }
}

}  // namespace mvpref
