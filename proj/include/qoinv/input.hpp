#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qoinv/deformation.hpp"
#include "qoinv/lattice.hpp"

namespace qoinv {

/// Parsed input document. Rationals are written as strings ("3/2") or JSON
/// integers; floating-point numbers are rejected.
struct InputDoc {
  std::size_t d = 0;
  std::vector<RatVec> char_exponents;  // e-coordinates
  std::optional<std::vector<Rat>> c;   // deformation coefficients c_1 .. c_{g-1}
  std::vector<ExtraTerm> extra_terms;
  std::optional<std::vector<RatVec>> phi;           // tagged with `basis`
  std::optional<std::vector<RatVec>> custom_ideal;  // options.ideal, tagged with `basis`
  Basis basis = Basis::M;  // coordinates of phi and options.ideal
  std::optional<Rat> bound;
};

/// Throws ParseError or InvalidInput.
InputDoc parse_input(const nlohmann::json& j);
InputDoc parse_input_text(std::string_view text);

nlohmann::json to_json(const InputDoc& doc);

/// "a,b;c,d" -> exponent list tagged with `basis`; "zero" -> empty list.
std::vector<RatVec> parse_exponent_list(std::string_view text, std::size_t d, Basis basis);

Rat rational_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rat& q);

}  // namespace qoinv
