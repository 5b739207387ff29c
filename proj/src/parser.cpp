#include <cctype>

#include "mvpref/formula.hpp"

namespace mvpref {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
         c == '/';
}

// Recursive descent over the raw text; no separate token stream.
class Parser {
 public:
  Parser(std::string_view text, const Chain& chain) : s_(text), chain_(chain) {}

  Formula run() {
    Formula f = implication();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg,
                         ParseError::Kind kind = ParseError::Kind::Syntax) {
    fail_at(i_, msg, kind);
  }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg,
                            ParseError::Kind kind = ParseError::Kind::Syntax) {
    throw ParseError(kind, pos,
                     "at column " + std::to_string(pos + 1) + ": " + msg);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
  }

  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(i_, tok.size()) == tok) {
      i_ += tok.size();
      return true;
    }
    return false;
  }

  Formula at(Formula f, std::size_t pos) {
    auto n = std::make_shared<Node>(*f);
    n->pos = pos;
    return Formula(std::move(n));
  }

  Formula implication() {
    skip();
    const std::size_t pos = i_;
    Formula left = disjunction();
    if (eat("->")) return at(imp(left, implication()), pos);
    return left;
  }

  Formula disjunction() {
    skip();
    const std::size_t pos = i_;
    Formula f = conjunction();
    while (eat("|")) f = at(disj(f, conjunction()), pos);
    return f;
  }

  Formula conjunction() {
    skip();
    const std::size_t pos = i_;
    Formula f = product();
    while (eat("&")) f = at(conj(f, product()), pos);
    return f;
  }

  Formula product() {
    skip();
    const std::size_t pos = i_;
    Formula f = unary();
    while (eat("*")) f = at(prod(f, unary()), pos);
    return f;
  }

  std::string label() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && label_char(s_[i_])) ++i_;
    if (start == i_) fail("expected an element label");
    return std::string(s_.substr(start, i_ - start));
  }

  Element element(const std::string& text, std::size_t pos) {
    if (auto e = chain_.find(text)) return *e;
    fail_at(pos, "unknown element '" + text + "' for " + chain_.describe(),
            ParseError::Kind::UnknownElement);
  }

  Formula unary() {
    skip();
    const std::size_t pos = i_;
    if (i_ >= s_.size()) fail("unexpected end of formula");
    const char c = s_[i_];
    if (c == '~') {
      ++i_;
      return at(neg(unary()), pos);
    }
    if (c == '(') {
      ++i_;
      Formula f = implication();
      if (!eat(")")) fail("expected ')'");
      return f;
    }
    if (c == '#') {
      ++i_;
      const std::size_t lpos = i_;
      const std::string text = label();
      return at(cnst(chain_, element(text, lpos)), pos);
    }
    if (!ident_start(c)) fail("unexpected '" + std::string(1, c) + "'");
    while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
    const std::string word(s_.substr(pos, i_ - pos));

    static const struct { const char* word; Op fuzzy; Op cut; } modal[] = {
        {"box", Op::Box, Op::BoxCut},
        {"dia", Op::Dia, Op::DiaCut},
        {"sbox", Op::SBox, Op::SBoxCut},
        {"sdia", Op::SDia, Op::SDiaCut},
    };
    for (const auto& m : modal) {
      if (word != m.word) continue;
      if (i_ < s_.size() && s_[i_] == '(') {
        ++i_;
        skip();
        const std::size_t lpos = i_;
        const std::string text = label();
        const Element level = element(text, lpos);
        if (!eat(")")) fail("expected ')' after cut level");
        if (is_strict_modal(m.cut) && level == chain_.bottom())
          fail_at(lpos, "strict cut modalities are not defined at level 0",
                  ParseError::Kind::ZeroStrictCut);
        return at(make_cut(m.cut, chain_, level, unary()), pos);
      }
      return at(make(m.fuzzy, {unary()}), pos);
    }
    if (word == "delta") return at(delta(unary()), pos);
    if (word == "A") return at(univ(unary()), pos);
    if (word == "E") return at(exist(unary()), pos);
    return at(var(word), pos);
  }

  std::string_view s_;
  const Chain& chain_;
  std::size_t i_ = 0;
};

}  // namespace

Formula parse(std::string_view text, const Chain& chain) {
  return Parser(text, chain).run();
}

}  // namespace mvpref
