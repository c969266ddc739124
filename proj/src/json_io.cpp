#include "dendrikit/json_io.hpp"

namespace dendrikit {

Json word_json(const Word& w) { return Json(w.letters()); }

Word word_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError(0, "word must be a JSON array");
  std::vector<int> letters;
  for (const auto& a : j) {
    if (!a.is_number_integer() || a.get<long long>() < 1)
      throw ParseError(letters.size(), "letters must be integers >= 1");
    letters.push_back(a.get<int>());
  }
  return Word(std::move(letters));
}

namespace {

template <typename K, typename KeyJson>
Json terms_json(const Element<K>& x, const char* basis, KeyJson&& key_json) {
  Json terms = Json::array();
  for (const auto& [k, c] : x.terms())
    terms.push_back(Json{{"key", key_json(k)}, {"coeff", rational_str(c)}});
  return Json{{"basis", basis}, {"terms", std::move(terms)}};
}

}  // namespace

Json element_json(const NCQSymElement& x, const char* basis) {
  return terms_json(x, basis, [](const PackedWord& u) { return word_json(u.word()); });
}

Json element_json(const QSymElement& x) {
  return terms_json(x, "QM", [](const Composition& c) { return Json(c.parts()); });
}

Json element_json(const Element<PlaneTree>& x) {
  return terms_json(x, "MM", [](const PlaneTree& t) { return Json(t.str()); });
}

Json tensor_json(const TensorElement<PackedWord>& x) {
  return terms_json(x, "MxM", [](const std::pair<PackedWord, PackedWord>& k) {
    return Json::array({word_json(k.first.word()), word_json(k.second.word())});
  });
}

Json poly_json(const NCPolynomial& p) {
  Json j = terms_json(p.poly, "Word", [](const Word& w) { return word_json(w); });
  j["alphabet"] = p.alphabet;
  return j;
}

NCQSymElement element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("terms"))
    throw ParseError(0, "element document needs basis and terms");
  std::string basis = j["basis"].get<std::string>();
  if (basis != "M" && basis != "SYL")
    throw ParseError(0, "expected a packed-word basis tag");
  NCQSymElement out;
  for (const auto& t : j["terms"]) {
    Word w = word_from_json(t.at("key"));
    out.add_term(PackedWord(std::move(w)), parse_rational(t.at("coeff").get<std::string>()));
  }
  return out;
}

}  // namespace dendrikit
