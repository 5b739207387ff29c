#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mvpref/formula.hpp"
#include "oracle.hpp"

using namespace mvpref;

namespace {

const Chain& luk11() {
  static const Chain c = Chain::lukasiewicz(11);
  return c;
}

ParseError parse_error(std::string_view text, const Chain& c) {
  try {
    (void)parse(text, c);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("parsed without error: " << text);
  return ParseError(ParseError::Kind::Syntax, 0, "");
}

}  // namespace

TEST_CASE("parse builds the expected trees") {
  const Chain& c = luk11();
  const Element half = c.element("0.5");
  CHECK(parse("box(0.5) p -> p", c) == imp(box(c, half, var("p")), var("p")));
  CHECK(parse("A (p -> dia q)", c) == univ(imp(var("p"), dia(var("q")))));
  CHECK(parse("p -> q -> r", c) == imp(var("p"), imp(var("q"), var("r"))));
  CHECK(parse("p | q & r", c) == disj(var("p"), conj(var("q"), var("r"))));
  CHECK(parse("p & q * r", c) == conj(var("p"), prod(var("q"), var("r"))));
  CHECK(parse("~p * q", c) == prod(neg(var("p")), var("q")));
  CHECK(parse("#0.8 & f", c) == conj(cnst(c, c.element("0.8")), var("f")));
  CHECK(parse("delta box p", c) == delta(box(var("p"))));
  CHECK(parse("E sdia(0.3) x1", c) == exist(sdia(c, c.element("0.3"), var("x1"))));
  CHECK(parse("sbox p", c) == sbox(var("p")));
  CHECK(parse("(p)", c) == var("p"));
  // "box (" with a space is the plain box applied to a parenthesized formula
  CHECK(parse("box (p)", c) == box(var("p")));
}

TEST_CASE("parse errors") {
  const Chain& c = luk11();
  SUBCASE("zero strict cut") {
    CHECK(parse_error("sbox(0) p", c).kind() == ParseError::Kind::ZeroStrictCut);
    CHECK(parse_error("sdia(0) p", c).kind() == ParseError::Kind::ZeroStrictCut);
    CHECK_NOTHROW((void)parse("box(0) p", c));
  }
  SUBCASE("unknown labels") {
    CHECK(parse_error("box(0.55) p", c).kind() == ParseError::Kind::UnknownElement);
    CHECK(parse_error("#2 -> p", c).kind() == ParseError::Kind::UnknownElement);
  }
  SUBCASE("syntax errors carry positions") {
    const ParseError e = parse_error("p -> ", c);
    CHECK(e.kind() == ParseError::Kind::Syntax);
    CHECK(e.position() == 5);
    CHECK(parse_error("p q", c).position() == 2);
    CHECK(parse_error("(p & q", c).kind() == ParseError::Kind::Syntax);
    CHECK(parse_error("p & ) q", c).position() == 4);
    CHECK(parse_error("", c).kind() == ParseError::Kind::Syntax);
    CHECK(parse_error("p $ q", c).position() == 2);
  }
  SUBCASE("constructors reject strict cuts at bottom") {
    CHECK_THROWS_AS((void)sbox(c, c.bottom(), var("p")), std::invalid_argument);
  }
}

TEST_CASE("print") {
  const Chain& c = luk11();
  CHECK(print(imp(var("p"), var("q"))) == "p -> q");
  CHECK(print(box(c, c.top(), var("p"))) == "box(1) p");
  CHECK(print(parse("A (p -> dia q)", c)) == "A (p -> dia q)");
  CHECK(print(parse("(p -> q) -> r", c)) == "(p -> q) -> r");
  CHECK(print(parse("#0.8 & f | #0.2 & m", c)) == "#0.8 & f | #0.2 & m");
}

TEST_CASE("parse inverts print on random trees") {
  oracle::Gen gen(20261016);
  const std::vector<std::string> vars{"p", "q", "r"};
  const Chain c3 = Chain::lukasiewicz(3);
  for (int i = 0; i < 1000; ++i) {
    const Chain& c = i % 2 ? luk11() : c3;
    const Formula f = gen.formula(c, vars, 1 + i % 5);
    const std::string text = print(f);
    CAPTURE(text);
    CHECK(parse(text, c) == f);
    CHECK(print(parse(text, c)) == text);
  }
}

TEST_CASE("structural helpers") {
  const Chain& c = luk11();
  const Formula f = parse("box(0.5) (p -> dia q) & r", c);
  CHECK(modal_depth(f) == 2);
  CHECK(size(f) == 7);
  CHECK(variables(f) == std::set<std::string>{"p", "q", "r"});
  CHECK(contains_op(f, Op::Dia));
  CHECK_FALSE(contains_op(f, Op::Box));
  const Formula g = substitute(f, {{"p", var("q")}, {"q", var("p")}});
  CHECK(g == parse("box(0.5) (q -> dia p) & r", c));
  CHECK(conj_all(c, {}) == cnst(c, c.top()));
  CHECK(disj_all(c, {}) == cnst(c, c.bottom()));
  CHECK(approx(c, var("p"), c.top()) == parse("delta ((p -> #1) * (#1 -> p))", c));
  // equality looks at cut levels and constant values
  CHECK_FALSE(parse("box(0.5) p", c) == parse("box(0.6) p", c));
  CHECK_FALSE(parse("#0.5", c) == parse("#0.6", c));
}

TEST_CASE("desugarings remove the operators they define") {
  oracle::Gen gen(7);
  const Chain c = Chain::lukasiewicz(3);
  const std::vector<std::string> vars{"p", "q"};
  for (int i = 0; i < 300; ++i) {
    const Formula f = gen.formula(c, vars, 3);
    CAPTURE(print(f));
    const Formula d1 = desugar_dia_from_box(f, c);
    for (Op op : {Op::Dia, Op::DiaCut, Op::SDia, Op::SDiaCut}) CHECK_FALSE(contains_op(d1, op));
    const Formula d2 = desugar_box_from_dia(f, c);
    for (Op op : {Op::Box, Op::BoxCut, Op::SBox, Op::SBoxCut}) CHECK_FALSE(contains_op(d2, op));
    const Formula d3 = desugar_graded_from_cuts(f, c);
    for (Op op : {Op::Box, Op::Dia, Op::SBox, Op::SDia, Op::Univ, Op::Exist})
      CHECK_FALSE(contains_op(d3, op));
    const Formula d4 = desugar_cuts_via_delta(f, c);
    CHECK_FALSE(contains_op(d4, Op::BoxCut));
    CHECK_FALSE(contains_op(d4, Op::SBoxCut));
  }
}

TEST_CASE("desugaring shapes on small chains") {
  const Chain c2 = Chain::lukasiewicz(2);
  const Formula p = var("p");
  const Formula zero = cnst(c2, c2.bottom()), one = cnst(c2, c2.top());
  CHECK(desugar_dia_from_box(dia(p), c2) ==
        conj(imp(box(imp(p, zero)), zero), imp(box(imp(p, one)), one)));
  CHECK(desugar_graded_from_cuts(box(p), c2) ==
        conj(imp(zero, box(c2, c2.bottom(), p)), imp(one, box(c2, c2.top(), p))));
  // the strict graded box ranges over positive levels only
  const Formula sb = desugar_graded_from_cuts(sbox(p), c2);
  CHECK(sb == imp(one, sbox(c2, c2.top(), p)));
  // the cut diamond unfolds with the cut box at the same level
  const Formula dc = desugar_dia_from_box(dia(c2, c2.top(), p), c2);
  CHECK(contains_op(dc, Op::BoxCut));
  const Chain g = Chain::custom({"0", "b", "1"}, {{"0", "0", "0"}, {"0", "b", "b"}, {"0", "b", "1"}});
  const Formula bc = desugar_cuts_via_delta(box(g, g.element("b"), p), g);
  CHECK(contains_op(bc, Op::Dia));
  CHECK(contains_op(bc, Op::Delta));
  const Formula sc = desugar_cuts_via_delta(sbox(g, g.element("b"), p), g);
  CHECK(contains_op(sc, Op::SDia));
}
