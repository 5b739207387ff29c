#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "mvpref/document.hpp"
#include "mvpref/examples.hpp"
#include "oracle.hpp"

using namespace mvpref;
using nlohmann::json;

namespace {

const std::string kModels = std::string(MVPREF_DATA_DIR) + "/models/";

bool same_chain(const Chain& a, const Chain& b) {
  if (a.labels() != b.labels() || a.family() != b.family()) return false;
  for (Element x : a.elements())
    for (Element y : a.elements())
      if (a.mono(x, y) != b.mono(x, y)) return false;
  return true;
}

bool same_model(const Model& a, const Model& b) {
  return same_chain(a.chain(), b.chain()) && a.worlds() == b.worlds() &&
         a.relation() == b.relation() && a.valuation() == b.valuation() &&
         a.is_preference() == b.is_preference() && a.strict_cuts() == b.strict_cuts();
}

/// The DocumentError text, or "" when the document is accepted.
std::string doc_error(const json& j) {
  try {
    (void)read_model_document(j);
  } catch (const DocumentError& e) {
    return e.what();
  }
  return "";
}

json small_doc() {
  return json::parse(R"({
    "lattice": {"kind": "lukasiewicz", "n": 3},
    "worlds": ["u", "v"],
    "relation": [["1", "0.5"], ["0", "1"]],
    "valuation": {"p": {"u": "1", "v": "0.5"}}
  })");
}

}  // namespace

TEST_CASE("lattice formats") {
  for (const Chain& c : {Chain::lukasiewicz(5), Chain::godel(4), three_element_godel_b()}) {
    const ChainPtr back = chain_from_json(chain_to_json(c));
    CHECK(same_chain(*back, c));
  }
  CHECK(chain_to_json(Chain::lukasiewicz(4)) == json::parse(R"({"kind":"lukasiewicz","n":4})"));
  CHECK(same_chain(*chain_from_json("lukasiewicz:4"), Chain::lukasiewicz(4)));
  CHECK(same_chain(*chain_from_json("godel:3"), Chain::godel(3)));
  CHECK_THROWS_AS((void)chain_from_json(json::parse(R"({"kind":"product","n":3})")), DocumentError);
  CHECK_THROWS_AS((void)chain_from_json("lukasiewicz:x"), DocumentError);
  try {
    (void)chain_from_json(json::parse(
        R"({"kind":"custom","elements":["0","a","b","1"],
            "mono":[["0","0","0","0"],["0","0","a","a"],["0","a","a","b"],["0","a","b","1"]]})"));
    FAIL("non-associative table accepted");
  } catch (const DocumentError& e) {
    CHECK(std::string(e.what()).find("associativity") != std::string::npos);
  }
}

TEST_CASE("bundled model files") {
  CHECK(same_model(load_model(kModels + "restaurant.json"), restaurant_model()));
  CHECK(same_model(load_model(kModels + "two_point.json"), two_point_model()));
  CHECK_FALSE(is_layered_document(read_json_file(kModels + "restaurant.json")));
  CHECK(is_layered_document(read_json_file(kModels + "clustered_layered.json")));
}

TEST_CASE("model documents round trip") {
  oracle::Gen gen(2024);
  const std::vector<std::string> vars{"p", "q"};
  for (int i = 0; i < 150; ++i) {
    const auto c = std::make_shared<const Chain>(i % 3 == 0   ? Chain::godel(2 + gen.below(5))
                                                 : i % 3 == 1 ? Chain::lukasiewicz(2 + gen.below(9))
                                                              : three_element_godel_b());
    const std::size_t n = 1 + gen.below(5);
    std::vector<std::string> names;
    for (std::size_t w = 0; w < n; ++w) names.push_back("w" + std::to_string(w));
    const Valuation val = gen.valuation(*c, n, vars);
    if (i % 2) {
      Model m = Model::preference(c, names, gen.preorder(*c, n), val);
      if (gen.below(2)) m.set_strict_cuts(StrictCuts::StrictThenCut);
      const std::size_t witness = gen.below(n);
      const ModelDocument doc = read_model_document(json::parse(model_to_json(m, witness).dump()));
      CHECK(doc.witness_world == witness);
      CHECK(same_model(to_model(doc), m));
    } else {
      const Model m = Model::general(c, names, gen.relation(*c, n), val);
      const ModelDocument doc = read_model_document(model_to_json(m));
      CHECK(doc.general);
      CHECK_FALSE(doc.witness_world.has_value());
      CHECK(same_model(to_model(doc), m));
    }
  }
}

TEST_CASE("accepted variations") {
  json j = small_doc();
  j["lattice"] = "lukasiewicz:3";
  j["valuation"]["p"] = json::array({"1", "0.5"});
  const Model m = to_model(read_model_document(j));
  CHECK(m.chain().label(m.valuation().at("p")[1]) == "0.5");
  j["strict_cuts"] = "strict-then-cut";
  j["witness_world"] = "v";
  const ModelDocument doc = read_model_document(j);
  CHECK(doc.strict_cuts == StrictCuts::StrictThenCut);
  CHECK(doc.witness_world == 1u);
}

TEST_CASE("field errors name the field") {
  struct Case {
    std::function<void(json&)> edit;
    std::string needle;
  };
  const std::vector<Case> cases{
      {[](json& j) { j.erase("worlds"); }, "worlds"},
      {[](json& j) { j["worlds"] = json::array(); }, "worlds"},
      {[](json& j) { j["worlds"] = json::array({"u", 3}); }, "worlds[1]"},
      {[](json& j) { j.erase("lattice"); }, "lattice"},
      {[](json& j) { j["relation"] = json::array({json::array({"1", "0.5"})}); }, "relation"},
      {[](json& j) { j["relation"][1] = json::array({"1"}); }, "relation[1]"},
      {[](json& j) { j["relation"][0][1] = "0.55"; }, "unknown label '0.55'"},
      {[](json& j) { j["relation"][0][1] = 7; }, "relation[0][1]: unknown label '7'"},
      {[](json& j) { j["relation"][0][1] = true; }, "expected a label"},
      {[](json& j) { j["valuation"]["p"] = {{"u", "1"}}; }, "no value at world 'v'"},
      {[](json& j) { j["valuation"]["p"] = {{"u", "1"}, {"v", "1"}, {"z", "1"}}; }, "unknown world 'z'"},
      {[](json& j) { j["valuation"]["p"] = json::array({"1"}); }, "valuation.p"},
      {[](json& j) { j["valuation"] = 4; }, "valuation"},
      {[](json& j) { j["kind"] = "fuzzy"; }, "kind"},
      {[](json& j) { j["strict_cuts"] = "both"; }, "strict_cuts"},
      {[](json& j) { j["witness_world"] = "z"; }, "unknown world 'z'"},
  };
  for (const Case& k : cases) {
    json j = small_doc();
    k.edit(j);
    const std::string err = doc_error(j);
    CAPTURE(j.dump());
    CAPTURE(err);
    CHECK(err.find(k.needle) != std::string::npos);
  }
  CHECK(doc_error(small_doc()).empty());
  CHECK(doc_error(json::array()).find("object") != std::string::npos);
}

TEST_CASE("preorder laws are checked after reading") {
  json j = small_doc();
  j["relation"] = json::array({json::array({"0.5", "0"}), json::array({"0", "1"})});
  const ModelDocument doc = read_model_document(j);
  CHECK_THROWS_AS((void)to_model(doc), ModelError);
  j["kind"] = "general";
  CHECK_NOTHROW((void)to_model(read_model_document(j)));
}

TEST_CASE("layered documents") {
  const LayeredModel lm = load_layered(kModels + "clustered_layered.json");
  CHECK(lm.worlds.size() == 6);
  CHECK(lm.weak.size() == lm.chain->size());
  CHECK(lm.strict.size() == lm.chain->size() - 1);
  CHECK_NOTHROW(validate(lm));
  const LayeredModel back = read_layered_document(json::parse(layered_to_json(lm).dump()));
  CHECK(same_chain(*back.chain, *lm.chain));
  CHECK(back.worlds == lm.worlds);
  CHECK(back.weak == lm.weak);
  CHECK(back.strict == lm.strict);
  CHECK(back.valuation == lm.valuation);

  json j = layered_to_json(lm);
  j["strict"]["0.5"][0][0] = 2;
  CHECK_THROWS_AS((void)read_layered_document(j), DocumentError);
  j = layered_to_json(lm);
  j["weak"]["0.7"] = j["weak"]["1"];
  try {
    (void)read_layered_document(j);
    FAIL("unknown level accepted");
  } catch (const DocumentError& e) {
    CHECK(std::string(e.what()).find("0.7") != std::string::npos);
  }
}

TEST_CASE("file errors name the path") {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "mvpref_document_test";
  std::filesystem::create_directories(dir);
  const std::string missing = (dir / "missing.json").string();
  std::filesystem::remove(missing);
  try {
    (void)load_model(missing);
    FAIL("missing file accepted");
  } catch (const DocumentError& e) {
    CHECK(std::string(e.what()).rfind(missing, 0) == 0);
  }
  const std::string broken = (dir / "broken.json").string();
  std::ofstream(broken) << "{ \"worlds\": [";
  CHECK_THROWS_WITH_AS((void)load_model(broken), doctest::Contains(broken.c_str()), DocumentError);
  const std::string bad_field = (dir / "bad_field.json").string();
  json j = small_doc();
  j.erase("relation");
  write_json_file(bad_field, j);
  CHECK_THROWS_WITH_AS((void)load_model(bad_field), doctest::Contains("relation"), DocumentError);
  std::filesystem::remove_all(dir);
}
