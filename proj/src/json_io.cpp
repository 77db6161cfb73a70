#include "ncalg/json_io.hpp"

#include "ncalg/error.hpp"

namespace ncalg {

Json rational_to_json(const mpq_class& c) { return c.get_str(); }

mpq_class rational_from_json(const Json& j) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (!j.is_string()) throw Error(ErrorKind::ParseError, "expected a rational, got " + j.dump());
  mpq_class c;
  if (c.set_str(j.get<std::string>(), 10) != 0)
    throw Error(ErrorKind::ParseError, "bad rational " + j.dump());
  c.canonicalize();
  return c;
}

Json poly_to_json(const Poly& p) {
  Json out = Json::array();
  for (auto& t : p.terms()) {
    Json m = Json::object();
    for (auto& [v, u] : t.m.entries()) {
      mpq_class e = exp_value(u);
      if (e.get_den() == 1)
        m[var_name(v)] = e.get_num().get_si();
      else
        m[var_name(v)] = e.get_str();
    }
    out.push_back(Json::array({rational_to_json(t.c), m}));
  }
  return out;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected a term list");
  Poly p;
  for (auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[1].is_object())
      throw Error(ErrorKind::ParseError, "bad term " + t.dump());
    Monomial m;
    for (auto& [name, e] : t[1].items())
      m = m * Monomial::var(var_id(name), exp_units(rational_from_json(e)));
    p += Poly::monomial(m, rational_from_json(t[0]));
  }
  return p;
}

Json scalar_to_json(const Scalar& s) {
  Json j;
  j["num"] = poly_to_json(s.num());
  j["den"] = poly_to_json(s.den());
  return j;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_object() || !j.contains("num"))
    throw Error(ErrorKind::ParseError, "bad scalar " + j.dump());
  Poly num = poly_from_json(j["num"]);
  Poly den = j.contains("den") ? poly_from_json(j["den"]) : Poly(1);
  // The denominator may carry monomial factors; route them through the field.
  Scalar d = Scalar::from_poly(den.unshifted(den.monomial_content()));
  Scalar n = Scalar::from_poly(num.unshifted(den.monomial_content()));
  return n / d;
}

Json ncpoly_to_json(const NcPoly& f) {
  Json j;
  j["gens"] = f.gens();
  Json terms = Json::array();
  for (auto& [w, c] : f.terms()) {
    Json word = Json::array();
    for (char l : w) word.push_back(static_cast<unsigned char>(l) + 1);
    terms.push_back(Json::array({scalar_to_json(c), word}));
  }
  j["terms"] = terms;
  return j;
}

NcPoly ncpoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("gens") || !j.contains("terms"))
    throw Error(ErrorKind::ParseError, "bad NcPoly");
  Alphabet gens = j["gens"].get<Alphabet>();
  NcPoly f(gens);
  for (auto& t : j["terms"]) {
    Word w;
    for (auto& l : t.at(1)) {
      int i = l.get<int>();
      if (i < 1 || i > static_cast<int>(gens.size()))
        throw Error(ErrorKind::ParseError, "letter out of range in " + t.dump());
      w.push_back(static_cast<char>(i - 1));
    }
    f.add_term(w, scalar_from_json(t.at(0)));
  }
  return f;
}

}  // namespace ncalg
