#include "mvpref/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace mvpref {

namespace {

// Renders k/d in decimal when it terminates within six digits, otherwise as
// a reduced fraction.
std::string equidistant_label(std::size_t k, std::size_t d) {
  if (k == 0) return "0";
  if (k == d) return "1";
  const std::size_t g = std::gcd(k, d);
  const std::size_t num = k / g;
  const std::size_t den = d / g;
  std::size_t rest = den;
  while (rest % 2 == 0) rest /= 2;
  while (rest % 5 == 0) rest /= 5;
  if (rest == 1) {
    std::string digits;
    std::size_t r = num;
    for (int i = 0; i < 6 && r != 0; ++i) {
      r *= 10;
      digits.push_back(static_cast<char>('0' + r / den));
      r %= den;
    }
    if (r == 0) return "0." + digits;
  }
  return std::to_string(num) + "/" + std::to_string(den);
}

Element at(std::size_t i) { return Element{static_cast<std::uint16_t>(i)}; }

}  // namespace

bool is_label_text(std::string_view text) {
  if (text.empty()) return false;
  return std::all_of(text.begin(), text.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '.' || c == '/';
  });
}

Chain::Chain(Family family, std::vector<std::string> labels,
             std::vector<Element> mono)
    : family_(family), labels_(std::move(labels)), mono_(std::move(mono)) {
  const std::size_t n = labels_.size();
  residuum_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t best = 0;
      for (std::size_t z = 0; z < n; ++z)
        if (mono_[x * n + z].index <= y) best = z;
      residuum_[x * n + y] = at(best);
    }
  }
}

Chain Chain::lukasiewicz(std::size_t n) {
  if (n < 2)
    throw LatticeError(LatticeError::Kind::InvalidCardinality,
                       "a chain needs at least 2 elements, got " +
                           std::to_string(n));
  const std::size_t d = n - 1;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back(equidistant_label(k, d));
  std::vector<Element> mono(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      mono[x * n + y] = at(x + y > d ? x + y - d : 0);
  return Chain(Family::Lukasiewicz, std::move(labels), std::move(mono));
}

Chain Chain::godel(std::size_t n) {
  if (n < 2)
    throw LatticeError(LatticeError::Kind::InvalidCardinality,
                       "a chain needs at least 2 elements, got " +
                           std::to_string(n));
  const std::size_t d = n - 1;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back(equidistant_label(k, d));
  std::vector<Element> mono(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) mono[x * n + y] = at(std::min(x, y));
  return Chain(Family::Godel, std::move(labels), std::move(mono));
}

Chain Chain::custom(std::vector<std::string> labels,
                    const std::vector<std::vector<std::string>>& mono) {
  using Kind = LatticeError::Kind;
  const std::size_t n = labels.size();
  if (n < 2)
    throw LatticeError(Kind::InvalidCardinality,
                       "a chain needs at least 2 elements, got " +
                           std::to_string(n));
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!is_label_text(l))
      throw LatticeError(Kind::Validation,
                         "label '" + l + "' must use only [A-Za-z0-9_./]");
    if (!seen.insert(l).second)
      throw LatticeError(Kind::Validation, "duplicate label '" + l + "'");
  }
  if (mono.size() != n)
    throw LatticeError(Kind::Validation,
                       "product table has " + std::to_string(mono.size()) +
                           " rows, expected " + std::to_string(n));
  auto index_of = [&](const std::string& l) -> Element {
    for (std::size_t i = 0; i < n; ++i)
      if (labels[i] == l) return at(i);
    throw LatticeError(Kind::UnknownElement,
                       "product table mentions unknown element '" + l + "'");
  };
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (mono[x].size() != n)
      throw LatticeError(Kind::Validation,
                         "product table row " + std::to_string(x) + " has " +
                             std::to_string(mono[x].size()) +
                             " entries, expected " + std::to_string(n));
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = index_of(mono[x][y]);
  }
  Chain chain(Family::Custom, std::move(labels), std::move(table));
  chain.validate();
  return chain;
}

void Chain::validate() const {
  const std::size_t n = size();
  auto fail = [&](const std::string& law, std::initializer_list<Element> w) {
    std::ostringstream os;
    os << law << " fails for";
    const char* names[] = {" x=", " y=", " z="};
    std::size_t i = 0;
    for (Element e : w) os << names[i++] << label(e);
    throw LatticeError(LatticeError::Kind::Validation, os.str());
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Element x = at(i);
    if (mono(top(), x) != x) fail("unit law 1 * x = x", {x});
    for (std::size_t j = 0; j < n; ++j) {
      const Element y = at(j);
      if (mono(x, y) != mono(y, x)) fail("commutativity", {x, y});
      if (j + 1 < n && mono(x, y) > mono(x, at(j + 1)))
        fail("monotonicity of *", {x, y, at(j + 1)});
      for (std::size_t k = 0; k < n; ++k) {
        const Element z = at(k);
        if (mono(mono(x, y), z) != mono(x, mono(y, z)))
          fail("associativity", {x, y, z});
        if ((mono(x, z) <= y) != (z <= residuum(x, y)))
          fail("residuation", {x, y, z});
      }
    }
  }
}

std::string Chain::describe() const {
  switch (family_) {
    case Family::Lukasiewicz: return "lukasiewicz:" + std::to_string(size());
    case Family::Godel: return "godel:" + std::to_string(size());
    case Family::Custom: break;
  }
  return "custom:" + std::to_string(size());
}

std::vector<Element> Chain::elements() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i));
  return out;
}

std::vector<Element> Chain::positives() const {
  std::vector<Element> out;
  for (std::size_t i = 1; i < size(); ++i) out.push_back(at(i));
  return out;
}

const std::string& Chain::label(Element x) const {
  if (!contains(x))
    throw LatticeError(LatticeError::Kind::UnknownElement,
                       "element index " + std::to_string(x.index) +
                           " outside chain of size " + std::to_string(size()));
  return labels_[x.index];
}

std::optional<Element> Chain::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return at(i);
  return std::nullopt;
}

Element Chain::element(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw LatticeError(LatticeError::Kind::UnknownElement,
                     "unknown element '" + std::string(label) + "' in " +
                         describe());
}

Element double_residual(const Chain& chain, Element b) {
  Element acc = chain.top();
  for (Element a : chain.elements())
    acc = chain.meet(acc, chain.residuum(chain.residuum(b, a), a));
  return acc;
}

Chain chain_from_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw LatticeError(LatticeError::Kind::Validation,
                       "chain spec must look like 'lukasiewicz:N' or 'godel:N'");
  const auto family = spec.substr(0, colon);
  const auto count = spec.substr(colon + 1);
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
  if (ec != std::errc() || ptr != count.data() + count.size())
    throw LatticeError(LatticeError::Kind::Validation,
                       "bad element count in chain spec '" + std::string(spec) +
                           "'");
  if (family == "lukasiewicz" || family == "luk") return Chain::lukasiewicz(n);
  if (family == "godel") return Chain::godel(n);
  throw LatticeError(LatticeError::Kind::Validation,
                     "unknown chain family '" + std::string(family) + "'");
}

}  // namespace mvpref
