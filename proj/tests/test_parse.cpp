#include <doctest.h>

#include "dendrikit/json_io.hpp"
#include "dendrikit/parse.hpp"
#include "dendrikit/qsym.hpp"

using namespace dendrikit;

namespace {

PackedWord pw(std::vector<int> v) { return PackedWord(Word(std::move(v))); }

std::size_t parse_error_offset(const char* text) {
  try {
    parse_element(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("no ParseError from ", text);
  return 0;
}

}  // namespace

TEST_SUITE("parse") {
  TEST_CASE("literals") {
    NCQSymElement x = parse_element("M[1,2,1]");
    CHECK(x == NCQSymElement(pw({1, 2, 1})));
    CHECK(parse_element("0").is_zero_elt());
    CHECK(parse_element("M[]") == ncqsym_unit());

    NCQSymElement y = parse_element("2*M[1,1] - 1/2*M[2,1]");
    CHECK(y.coeff(pw({1, 1})) == Rational(2));
    CHECK(y.coeff(pw({2, 1})) == Rational(-1, 2));
    CHECK(y.term_count() == 2);

    CHECK(parse_element(" - M[1] + M[1] ").is_zero_elt());
    CHECK(parse_element("+3/6*M[1]").coeff(pw({1})) == Rational(1, 2));
    CHECK(parse_element("  2 * M[ 1 , 2 ]  ") == Rational(2) * NCQSymElement(pw({1, 2})));
  }

  TEST_CASE("print-parse round trip") {
    std::vector<NCQSymElement> cases{
        NCQSymElement(),
        ncqsym_unit(),
        NCQSymElement(pw({1})),
        Rational(-1) * NCQSymElement(pw({1, 2, 1})),
        Rational(3, 7) * NCQSymElement(pw({2, 1})) - Rational(5) * NCQSymElement(pw({1, 1, 2})),
        product_full(NCQSymElement(pw({1, 2})), NCQSymElement(pw({1}))),
    };
    for (const NCQSymElement& x : cases) {
      CAPTURE(element_str(x));
      CHECK(parse_element(element_str(x)) == x);
      CHECK(element_from_json(element_json(x)) == x);
    }
  }

  TEST_CASE("errors carry offsets") {
    CHECK(parse_error_offset("M[1,3]") == 6);
    CHECK(parse_error_offset("M[1") == 3);
    CHECK(parse_error_offset("2*") == 2);
    CHECK(parse_error_offset("M[1] ? M[2,1]") == 5);
    CHECK(parse_error_offset("1/0*M[1]") == 2);
    CHECK(parse_error_offset("0 + M[1]") == 2);
    CHECK_THROWS_AS(parse_element(""), ParseError);
    CHECK(std::string(ParseError(5, "boom").what()).find("(offset 5)") != std::string::npos);
  }

  TEST_CASE("printers") {
    NCQSymElement x = Rational(1) * NCQSymElement(pw({1, 2})) - Rational(1, 3) * NCQSymElement(pw({1}));
    CHECK(element_str(x) == "-1/3*M[1] + M[1,2]");

    QSymElement q = abelianize(NCQSymElement(pw({2, 1, 2})));
    CHECK(element_str(q) == "QM[1,2]");

    Element<PlaneTree> t(tree_of_word(Word({1, 2})));
    CHECK(element_str(t) == "MM[((o o) o)]");

    TensorElement<PackedWord> d = coproduct(NCQSymElement(pw({1, 1})));
    CHECK(tensor_str(d) == "M[] (x) M[1,1] + M[1,1] (x) M[]");
    CHECK(tensor_str(TensorElement<PackedWord>()) == "0");

    NCPolynomial p = expand(pw({1, 2}), 2);
    CHECK(poly_str(p) == "Word[1,2]");
  }

  TEST_CASE("json schema") {
    Json j = element_json(Rational(-1, 2) * NCQSymElement(pw({1, 2, 1})));
    CHECK(j.dump() == R"({"basis":"M","terms":[{"key":[1,2,1],"coeff":"-1/2"}]})");

    Json q = element_json(abelianize(NCQSymElement(pw({1, 2, 1}))));
    CHECK(q.dump() == R"({"basis":"QM","terms":[{"key":[2,1],"coeff":"1"}]})");

    Json p = poly_json(expand(pw({1}), 2));
    CHECK(p.dump() == R"({"basis":"Word","terms":[{"key":[1],"coeff":"1"},{"key":[2],"coeff":"1"}],"alphabet":2})");

    Json d = tensor_json(coproduct(NCQSymElement(pw({1}))));
    CHECK(d.dump() ==
          R"({"basis":"MxM","terms":[{"key":[[],[1]],"coeff":"1"},{"key":[[1],[]],"coeff":"1"}]})");

    CHECK(word_from_json(word_json(Word({3, 1, 2}))) == Word({3, 1, 2}));
    CHECK_THROWS_AS(word_from_json(Json{{"not", "array"}}), ParseError);
    CHECK_THROWS_AS(element_from_json(Json::array()), ParseError);
    CHECK_THROWS_AS(element_from_json(Json{{"basis", "QM"}, {"terms", Json::array()}}), ParseError);
  }
}
