#include "qoinv/rational.hpp"

#include <cctype>

#include "qoinv/error.hpp"

namespace qoinv {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::BasisMismatch: return "BasisMismatch";
    case Errc::NegativeExponent: return "NegativeExponent";
    case Errc::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case Errc::IndexOne: return "IndexOne";
    case Errc::OverweightViolation: return "OverweightViolation";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::Singular: return "Singular";
    case Errc::NotSublattice: return "NotSublattice";
    case Errc::NonIntegerIndex: return "NonIntegerIndex";
    case Errc::ReductionFailure: return "ReductionFailure";
    case Errc::NegativeRemainder: return "NegativeRemainder";
    case Errc::CrossCheckMismatch: return "CrossCheckMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotInAmbient: return "NotInAmbient";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::NotInKernel: return "NotInKernel";
    case Errc::GeneratorOutsideCone: return "GeneratorOutsideCone";
    case Errc::NotProper: return "NotProper";
    case Errc::EmptySupport: return "EmptySupport";
    case Errc::UnsupportedDimension: return "UnsupportedDimension";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::BoundMismatch: return "BoundMismatch";
    case Errc::ZeroSeries: return "ZeroSeries";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(Errc::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  Int p(std::string(num), 10);
  Int q(std::string(den), 10);
  if (q == 0) {
    throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  Rat r(negative ? Int(-p) : p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_str();
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int floor(const Rat& v) { return floor_div(v.get_num(), v.get_den()); }

Int ceil(const Rat& v) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
  return q;
}

}  // namespace qoinv
