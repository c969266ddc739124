#include "dendrikit/parse.hpp"

#include <cctype>
#include <charconv>

#include "dendrikit/rational.hpp"

namespace dendrikit {

namespace {

struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos == text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c, const char* what) {
    if (!consume(c)) throw ParseError(pos, what);
  }

  long integer() {
    skip_ws();
    long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos) throw ParseError(pos, "expected integer");
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }

  Rational coefficient() {
    long num = integer();
    if (consume('/')) {
      std::size_t at = pos;
      long den = integer();
      if (den == 0) throw ParseError(at, "zero denominator");
      Rational c(num, den);
      c.canonicalize();
      return c;
    }
    return Rational(num);
  }

  PackedWord key() {
    expect('M', "expected 'M'");
    expect('[', "expected '['");
    std::vector<int> letters;
    if (!consume(']')) {
      while (true) {
        std::size_t at = pos;
        long a = integer();
        if (a < 1) throw ParseError(at, "letters must be >= 1");
        letters.push_back(static_cast<int>(a));
        if (consume(']')) break;
        expect(',', "expected ',' or ']'");
      }
    }
    std::size_t at = pos;
    Word w(std::move(letters));
    if (!is_packed(w)) throw ParseError(at, "key [" + w.str() + "] is not packed");
    return PackedWord(std::move(w));
  }
};

void append_coeff(std::string& out, const Rational& c, bool first) {
  Rational a = c < 0 ? Rational(-c) : c;
  if (first)
    out += c < 0 ? "-" : "";
  else
    out += c < 0 ? " - " : " + ";
  if (a != 1) out += rational_str(a) + "*";
}

template <typename K, typename KeyStr>
std::string generic_str(const Element<K>& x, const char* basis, KeyStr&& key_str) {
  if (x.is_zero_elt()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    append_coeff(out, c, first);
    out += basis;
    out += '[';
    out += key_str(k);
    out += ']';
    first = false;
  }
  return out;
}

}  // namespace

NCQSymElement parse_element(std::string_view text) {
  Scanner s{text};
  NCQSymElement out;
  if (s.peek() == '0') {
    ++s.pos;
    if (!s.eof()) throw ParseError(s.pos, "trailing input");
    return out;
  }
  bool negative = false;
  if (s.consume('-'))
    negative = true;
  else
    s.consume('+');
  while (true) {
    Rational c(1);
    if (std::isdigit(static_cast<unsigned char>(s.peek()))) {
      c = s.coefficient();
      if (!s.consume('*')) {
        // bare "M" follows only if '*' was optional whitespace away
        if (s.peek() != 'M') throw ParseError(s.pos, "expected '*' or 'M'");
      }
    }
    PackedWord k = s.key();
    out.add_term(k, negative ? Rational(-c) : c);
    if (s.eof()) break;
    if (s.consume('-'))
      negative = true;
    else if (s.consume('+'))
      negative = false;
    else
      throw ParseError(s.pos, "expected '+' or '-'");
  }
  return out;
}

std::string element_str(const NCQSymElement& x, const char* basis) {
  return generic_str(x, basis, [](const PackedWord& u) { return u.str(); });
}

std::string element_str(const QSymElement& x) {
  return generic_str(x, "QM", [](const Composition& c) {
    std::string s = c.str();
    return s.substr(1, s.size() - 2);  // strip outer parentheses
  });
}

std::string element_str(const Element<PlaneTree>& x) {
  return generic_str(x, "MM", [](const PlaneTree& t) { return t.str(); });
}

std::string poly_str(const NCPolynomial& p) {
  return generic_str(p.poly, "Word", [](const Word& w) { return w.str(); });
}

std::string tensor_str(const TensorElement<PackedWord>& x) {
  if (x.is_zero_elt()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    append_coeff(out, c, first);
    out += "M[" + k.first.str() + "] (x) M[" + k.second.str() + "]";
    first = false;
  }
  return out;
}

}  // namespace dendrikit
