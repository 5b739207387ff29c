#ifndef MVPREF_EXAMPLES_HPP_
#define MVPREF_EXAMPLES_HPP_

#include <map>
#include <string>
#include <vector>

#include "mvpref/formula.hpp"
#include "mvpref/model.hpp"

namespace mvpref {

/// Restaurant choice on the 11-element Lukasiewicz chain: worlds bf bm cf cm
/// (beach/countryside x fish/meat), crisp variables b c f m.
Model restaurant_model();
/// (#0.8 & f) | (#0.2 & m)
Formula light_meal(const Chain& chain);
/// (#0.7 & m) | (#0.3 & f)
Formula heavy_meal(const Chain& chain);

/// Chain 0 < b < 1 with min as product.
Chain three_element_godel_b();
/// Worlds x y over that chain with P(x,y) = b and every other entry 1.
Model two_point_model();

/// The bundled golden values, key -> text.
std::map<std::string, std::string> golden_tables();

struct GoldenComparison {
  std::string key;
  std::string expected;
  std::string computed;
  bool matches() const { return expected == computed; }
};

/// Recomputes every golden key from the bundled models.
std::vector<GoldenComparison> reproduce_examples();

}  // namespace mvpref

#endif  // MVPREF_EXAMPLES_HPP_
