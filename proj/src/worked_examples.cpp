#include <functional>
#include <sstream>
#include <stdexcept>

#include "mvpref/examples.hpp"
#include "mvpref/prefs.hpp"
#include "mvpref/relation.hpp"

namespace mvpref {

namespace {

constexpr const char* kGolden =
#include "golden_tables.inc"
    ;

std::string normalize(const std::string& s) {
  std::istringstream is(s);
  std::string out;
  for (std::string t; is >> t;) out += (out.empty() ? "" : " ") + t;
  return out;
}

std::string row_text(const Chain& c, const std::vector<Element>& v) {
  std::string out;
  for (Element e : v) out += (out.empty() ? "" : " ") + c.label(e);
  return out;
}

std::string matrix_text(const Chain& c, const FuzzyRelation& r) {
  std::string out;
  for (std::size_t u = 0; u < r.size(); ++u) {
    if (u) out += " / ";
    std::vector<Element> row;
    for (std::size_t v = 0; v < r.size(); ++v) row.push_back(r(u, v));
    out += row_text(c, row);
  }
  return out;
}

std::string matrix_text(const CrispRelation& r) {
  std::string out;
  for (std::size_t u = 0; u < r.size(); ++u) {
    if (u) out += " / ";
    for (std::size_t v = 0; v < r.size(); ++v) out += std::string(v ? " " : "") + (r(u, v) ? "1" : "0");
  }
  return out;
}

}  // namespace

Model restaurant_model() {
  auto chain = std::make_shared<const Chain>(Chain::lukasiewicz(11));
  const Chain& c = *chain;
  const std::vector<std::string> worlds{"bf", "bm", "cf", "cm"};
  const std::vector<std::vector<std::string>> p{{"1", "0.5", "0.5", "0.5"},
                                                {"0.8", "1", "0.6", "0.8"},
                                                {"0.8", "0.5", "1", "0.7"},
                                                {"0.6", "0.5", "0.5", "1"}};
  std::vector<Element> entries;
  for (const auto& row : p)
    for (const auto& l : row) entries.push_back(c.element(l));
  Valuation val;
  for (std::size_t w = 0; w < worlds.size(); ++w) {
    const char zone = worlds[w][0], dish = worlds[w][1];
    val["b"].push_back(zone == 'b' ? c.top() : c.bottom());
    val["c"].push_back(zone == 'c' ? c.top() : c.bottom());
    val["f"].push_back(dish == 'f' ? c.top() : c.bottom());
    val["m"].push_back(dish == 'm' ? c.top() : c.bottom());
  }
  return Model::preference(chain, worlds, FuzzyRelation(4, entries), val);
}

Formula light_meal(const Chain& c) {
  return disj(conj(cnst(c, c.element("0.8")), var("f")), conj(cnst(c, c.element("0.2")), var("m")));
}

Formula heavy_meal(const Chain& c) {
  return disj(conj(cnst(c, c.element("0.7")), var("m")), conj(cnst(c, c.element("0.3")), var("f")));
}

Chain three_element_godel_b() {
  return Chain::custom({"0", "b", "1"},
                       {{"0", "0", "0"}, {"0", "b", "b"}, {"0", "b", "1"}});
}

Model two_point_model() {
  auto chain = std::make_shared<const Chain>(three_element_godel_b());
  const Element b = chain->element("b"), one = chain->top();
  return Model::preference(chain, {"x", "y"}, FuzzyRelation(2, {one, b, one, one}), {});
}

std::map<std::string, std::string> golden_tables() {
  std::map<std::string, std::string> out;
  std::istringstream is(kGolden);
  std::size_t line_no = 0;
  for (std::string line; std::getline(is, line);) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("golden table line " + std::to_string(line_no) + " has no '='");
    out[normalize(line.substr(0, eq))] = normalize(line.substr(eq + 1));
  }
  return out;
}

std::vector<GoldenComparison> reproduce_examples() {
  const Model m = restaurant_model();
  const Chain& c = m.chain();
  const Model two = two_point_model();
  const Chain& tc = two.chain();
  const Formula l = light_meal(c), h = heavy_meal(c);
  const Formula b = var("b"), f = var("f"), meat = var("m");
  const PrefKind ae{}, ee{PrefKind::Quantifier::EE, false, std::nullopt};
  const PrefKind beach{PrefKind::Quantifier::AE, false, b};

  auto column = [&](const Formula& x) { return row_text(c, eval_all(m, x)); };
  auto value = [&](const PrefKind& k, const Formula& x, const Formula& y) {
    return c.label(eval_pref(m, k, x, y));
  };

  const std::map<std::string, std::function<std::string()>> compute{
      {"restaurant.preference", [&] { return matrix_text(c, m.relation()); }},
      {"restaurant.indifference", [&] { return matrix_text(c, indifference(m.relation())); }},
      {"restaurant.strict_part", [&] { return matrix_text(c, strict_part(m.relation(), c)); }},
      {"two_point.strict_of_cut_b",
       [&] { return matrix_text(strict_of_cut(two.relation(), tc, tc.element("b"))); }},
      {"two_point.cut_of_strict_b",
       [&] { return matrix_text(cut_of_strict(two.relation(), tc, tc.element("b"))); }},
      {"restaurant.light", [&] { return column(l); }},
      {"restaurant.heavy", [&] { return column(h); }},
      {"restaurant.dia_light", [&] { return column(dia(l)); }},
      {"restaurant.dia_heavy", [&] { return column(dia(h)); }},
      {"restaurant.ae_fish_meat", [&] { return value(ae, f, meat); }},
      {"restaurant.ae_meat_fish", [&] { return value(ae, meat, f); }},
      {"restaurant.ee_fish_meat", [&] { return value(ee, f, meat); }},
      {"restaurant.ee_meat_fish", [&] { return value(ee, meat, f); }},
      {"restaurant.ae_beach_meat_beach_fish",
       [&] { return value(ae, conj(b, meat), conj(b, f)); }},
      {"restaurant.ae_light_heavy", [&] { return value(ae, l, h); }},
      {"restaurant.ae_heavy_light", [&] { return value(ae, h, l); }},
      {"restaurant.dia_beach_heavy", [&] { return column(dia(conj(b, h))); }},
      {"restaurant.dia_beach_light", [&] { return column(dia(conj(b, l))); }},
      {"restaurant.beach_ae_light_heavy", [&] { return value(beach, l, h); }},
      {"restaurant.beach_ae_heavy_light", [&] { return value(beach, h, l); }},
  };

  std::vector<GoldenComparison> out;
  for (const auto& [key, expected] : golden_tables()) {
    auto it = compute.find(key);
    out.push_back(GoldenComparison{
        key, expected, it == compute.end() ? std::string("<no computation>") : it->second()});
  }
  return out;
}

}  // namespace mvpref
