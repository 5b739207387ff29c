#ifndef MVPREF_DOCUMENT_HPP_
#define MVPREF_DOCUMENT_HPP_

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "mvpref/layered.hpp"
#include "mvpref/model.hpp"

namespace mvpref {

/// Model file layout (JSON):
///   "lattice":   {"kind": "lukasiewicz" | "godel", "n": N} |
///                {"kind": "custom", "elements": [...], "mono": [[label, ...], ...]}
///                (the strings "lukasiewicz:N" and "godel:N" are accepted too)
///   "worlds":    ["w0", ...]
///   "relation":  square matrix of labels, row = source world
///   "valuation": {"p": {"w0": label, ...}, ...}  (a label array is accepted)
///   optional "kind": "preference" (default) | "general"
///   optional "strict_cuts": "cut-then-strict" (default) | "strict-then-cut"
///   optional "witness_world": world name (countermodels)
/// Layered model files replace "relation" by "weak" and "strict", each a map
/// from level label to a 0/1 matrix.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A model file after label resolution and shape checks, before the
/// preorder conditions are enforced.
struct ModelDocument {
  ChainPtr chain;
  std::vector<std::string> worlds;
  FuzzyRelation relation;
  Valuation valuation;
  bool general = false;
  StrictCuts strict_cuts = StrictCuts::CutThenStrict;
  std::optional<std::size_t> witness_world;
};

nlohmann::json chain_to_json(const Chain& chain);
ChainPtr chain_from_json(const nlohmann::json& j);

ModelDocument read_model_document(const nlohmann::json& j);
/// Throws ModelError when a preference document violates the preorder laws.
Model to_model(const ModelDocument& doc);
nlohmann::json model_to_json(const Model& m,
                             std::optional<std::size_t> witness_world = std::nullopt);

bool is_layered_document(const nlohmann::json& j);
LayeredModel read_layered_document(const nlohmann::json& j);
nlohmann::json layered_to_json(const LayeredModel& lm);

/// Throws DocumentError naming the file on I/O or JSON syntax errors.
nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

Model load_model(const std::string& path);
LayeredModel load_layered(const std::string& path);

}  // namespace mvpref

#endif  // MVPREF_DOCUMENT_HPP_
