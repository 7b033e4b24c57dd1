#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qoinv {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" (decimal digits only). Throws ParseError on a
/// zero denominator or malformed text. The result is canonicalized.
Rat parse_rational(std::string_view text);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

inline bool is_integer(const Rat& v) { return v.get_den() == 1; }

Int floor_div(const Int& a, const Int& b);
Int floor(const Rat& v);
Int ceil(const Rat& v);

}  // namespace qoinv
