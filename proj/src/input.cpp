#include "qoinv/input.hpp"

#include <string>

namespace qoinv {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::InvalidInput, what); }

const json& require(const json& obj, const char* key) {
  if (!obj.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

RatVec vector_from_json(const json& j, std::size_t d, Basis basis, const std::string& what) {
  if (!j.is_array()) bad(what + " must be a list");
  if (j.size() != d) throw Error(Errc::DimensionMismatch, what + " must have " + std::to_string(d) + " entries");
  std::vector<Rat> coords;
  for (const auto& x : j) coords.push_back(rational_from_json(x));
  return RatVec(std::move(coords), basis);
}

std::vector<RatVec> vector_list(const json& j, std::size_t d, Basis basis, const std::string& what) {
  if (!j.is_array()) bad(what + " must be a list of vectors");
  std::vector<RatVec> out;
  for (const auto& v : j) out.push_back(vector_from_json(v, d, basis, what));
  return out;
}

Int integer_from_json(const json& j, const std::string& what) {
  Rat q = rational_from_json(j);
  if (!is_integer(q)) bad(what + " must be an integer");
  return q.get_num();
}

json vector_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v.coords()) a.push_back(to_string(x));
  return a;
}

}  // namespace

Rat rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rat(Int(std::to_string(j.get<std::uint64_t>())))
                                  : Rat(Int(std::to_string(j.get<std::int64_t>())));
  }
  throw Error(Errc::ParseError, "expected a rational string or an integer, got " + j.dump());
}

json rational_to_json(const Rat& q) { return to_string(q); }

InputDoc parse_input(const json& j) {
  if (!j.is_object()) bad("input must be a JSON object");
  InputDoc doc;
  const json& d = require(j, "d");
  if (!d.is_number_integer() || d.get<std::int64_t>() < 1) bad("\"d\" must be a positive integer");
  doc.d = d.get<std::size_t>();
  doc.char_exponents = vector_list(require(j, "char_exponents"), doc.d, Basis::E, "characteristic exponent");

  if (j.contains("options")) {
    const json& o = j.at("options");
    if (!o.is_object()) bad("\"options\" must be an object");
    if (o.contains("basis")) {
      const std::string b = o.at("basis").is_string() ? o.at("basis").get<std::string>() : "";
      if (b == "e") doc.basis = Basis::E;
      else if (b == "M") doc.basis = Basis::M;
      else bad("options.basis must be \"e\" or \"M\"");
    }
    if (o.contains("bound")) doc.bound = rational_from_json(o.at("bound"));
    if (o.contains("ideal")) doc.custom_ideal = vector_list(o.at("ideal"), doc.d, doc.basis, "ideal generator");
  }
  if (j.contains("phi")) doc.phi = vector_list(j.at("phi"), doc.d, doc.basis, "phi exponent");

  if (j.contains("deformation")) {
    const json& def = j.at("deformation");
    if (!def.is_object()) bad("\"deformation\" must be an object");
    if (def.contains("c")) {
      if (!def.at("c").is_array()) bad("deformation.c must be a list");
      std::vector<Rat> c;
      for (const auto& x : def.at("c")) c.push_back(rational_from_json(x));
      doc.c = std::move(c);
    }
    if (def.contains("extra_terms")) {
      if (!def.at("extra_terms").is_array()) bad("deformation.extra_terms must be a list");
      for (const auto& t : def.at("extra_terms")) {
        if (!t.is_object()) bad("extra term must be an object");
        ExtraTerm term;
        const Int row = integer_from_json(require(t, "row"), "extra term row");
        if (row < 1) bad("extra term row must be positive");
        term.row = row.get_ui();
        term.coeff = rational_from_json(require(t, "coeff"));
        const json& alpha = require(t, "alpha");
        if (!alpha.is_array()) bad("extra term alpha must be a list");
        for (const auto& a : alpha) term.alpha.push_back(integer_from_json(a, "extra term alpha"));
        doc.extra_terms.push_back(std::move(term));
      }
    }
  }
  return doc;
}

InputDoc parse_input_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
  return parse_input(j);
}

json to_json(const InputDoc& doc) {
  json j;
  j["d"] = doc.d;
  j["char_exponents"] = json::array();
  for (const auto& v : doc.char_exponents) j["char_exponents"].push_back(vector_json(v));
  json options;
  options["basis"] = std::string(basis_name(doc.basis));
  if (doc.bound) options["bound"] = to_string(*doc.bound);
  if (doc.custom_ideal) {
    options["ideal"] = json::array();
    for (const auto& v : *doc.custom_ideal) options["ideal"].push_back(vector_json(v));
  }
  j["options"] = options;
  if (doc.phi) {
    j["phi"] = json::array();
    for (const auto& v : *doc.phi) j["phi"].push_back(vector_json(v));
  }
  if (doc.c || !doc.extra_terms.empty()) {
    json def = json::object();
    if (doc.c) {
      def["c"] = json::array();
      for (const auto& x : *doc.c) def["c"].push_back(to_string(x));
    }
    def["extra_terms"] = json::array();
    for (const auto& t : doc.extra_terms) {
      json alpha = json::array();
      for (const auto& a : t.alpha) alpha.push_back(to_string(a));
      def["extra_terms"].push_back({{"row", t.row}, {"coeff", to_string(t.coeff)}, {"alpha", alpha}});
    }
    j["deformation"] = def;
  }
  return j;
}

std::vector<RatVec> parse_exponent_list(std::string_view text, std::size_t d, Basis basis) {
  std::vector<RatVec> out;
  if (text == "zero") return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    std::vector<Rat> coords;
    std::size_t s = 0;
    while (s <= item.size()) {
      std::size_t e = item.find(',', s);
      if (e == std::string_view::npos) e = item.size();
      coords.push_back(parse_rational(item.substr(s, e - s)));
      s = e + 1;
    }
    if (coords.size() != d) {
      throw Error(Errc::DimensionMismatch, "exponent \"" + std::string(item) + "\" needs " + std::to_string(d) + " entries");
    }
    out.emplace_back(std::move(coords), basis);
    start = end + 1;
  }
  return out;
}

}  // namespace qoinv
