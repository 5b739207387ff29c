#ifndef MVPREF_LATTICE_HPP_
#define MVPREF_LATTICE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mvpref {

/// A truth value, identified by its position in the chain (0 is bottom).
struct Element {
  std::uint16_t index = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

class LatticeError : public std::runtime_error {
 public:
  enum class Kind { InvalidCardinality, UnknownElement, Validation };

  LatticeError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A finite MTL-chain: a linearly ordered, bounded, integral, commutative
/// residuated lattice, expanded with the Baaz delta.
///
/// The order is the label order. The monoidal product is stored as a table;
/// the residuum is always derived from it as x -> y = max{z : x * z <= y}.
/// Chains are immutable and can be shared freely across threads.
class Chain {
 public:
  enum class Family { Lukasiewicz, Godel, Custom };

  static Chain lukasiewicz(std::size_t n);
  static Chain godel(std::size_t n);

  /// Builds a chain from ordered labels (bottom first) and a product table
  /// given as labels. Throws LatticeError(Validation) naming the failed law.
  static Chain custom(std::vector<std::string> labels,
                      const std::vector<std::vector<std::string>>& mono);

  std::size_t size() const noexcept { return labels_.size(); }
  Family family() const noexcept { return family_; }
  /// "lukasiewicz:11", "godel:3" or "custom:3".
  std::string describe() const;

  Element bottom() const noexcept { return Element{0}; }
  Element top() const noexcept {
    return Element{static_cast<std::uint16_t>(labels_.size() - 1)};
  }
  /// Immediate predecessor of the top element.
  Element coatom() const noexcept {
    return Element{static_cast<std::uint16_t>(labels_.size() - 2)};
  }

  /// All elements in increasing order.
  std::vector<Element> elements() const;
  /// All elements except bottom.
  std::vector<Element> positives() const;

  bool contains(Element x) const noexcept { return x.index < labels_.size(); }
  const std::string& label(Element x) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Element> find(std::string_view label) const;
  /// Throws LatticeError(UnknownElement).
  Element element(std::string_view label) const;

  Element meet(Element x, Element y) const noexcept { return x < y ? x : y; }
  Element join(Element x, Element y) const noexcept { return x < y ? y : x; }
  Element mono(Element x, Element y) const noexcept {
    return mono_[x.index * size() + y.index];
  }
  Element residuum(Element x, Element y) const noexcept {
    return residuum_[x.index * size() + y.index];
  }
  Element neg(Element x) const noexcept { return residuum(x, bottom()); }
  Element delta(Element x) const noexcept {
    return x == top() ? top() : bottom();
  }
  /// (x -> y) * (y -> x)
  Element biresiduum(Element x, Element y) const noexcept {
    return mono(residuum(x, y), residuum(y, x));
  }

 private:
  Chain(Family family, std::vector<std::string> labels,
        std::vector<Element> mono);

  void validate() const;

  Family family_;
  std::vector<std::string> labels_;
  std::vector<Element> mono_;
  std::vector<Element> residuum_;
};

using ChainPtr = std::shared_ptr<const Chain>;

/// The meet over all a of (b -> a) -> a. Equals b on every finite chain.
Element double_residual(const Chain& chain, Element b);

/// Parses "lukasiewicz:N" or "godel:N".
Chain chain_from_spec(std::string_view spec);

/// True when every character is usable inside a formula label token.
bool is_label_text(std::string_view text);

}  // namespace mvpref

#endif  // MVPREF_LATTICE_HPP_
