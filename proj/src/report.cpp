#include "qoinv/report.hpp"

#include <sstream>

#include "qoinv/invariants.hpp"
#include "qoinv/monomial_ideal.hpp"
#include "qoinv/newton.hpp"

namespace qoinv {

using nlohmann::json;

json vector_to_json(const RatVec& v) {
  json coords = json::array();
  for (const auto& x : v.coords()) coords.push_back(to_string(x));
  return {{"basis", std::string(basis_name(v.basis()))}, {"coords", coords}};
}

RatVec vector_from_json(const json& j) {
  const std::string b = j.at("basis").get<std::string>();
  if (b != "e" && b != "M") throw Error(Errc::ParseError, "unknown basis \"" + b + "\"");
  std::vector<Rat> coords;
  for (const auto& x : j.at("coords")) coords.push_back(rational_from_json(x));
  return RatVec(std::move(coords), b == "e" ? Basis::E : Basis::M);
}

int exit_code_for(Errc code) noexcept {
  switch (code) {
    case Errc::UnsupportedDimension:
    case Errc::NotNormalized:
    case Errc::NotProper:
    case Errc::BudgetExceeded:
    case Errc::ReductionFailure:
    case Errc::NegativeRemainder:
    case Errc::CrossCheckMismatch:
      return kExitRefused;
    default:
      return kExitValidation;
  }
}

namespace {

json ints_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

// One vector in both coordinate systems.
json both(const QOSemigroup& s, const RatVec& v_e) {
  return {{"e", vector_to_json(v_e)}, {"M", vector_to_json(s.to_m(v_e))}};
}

json both_list(const QOSemigroup& s, const std::vector<RatVec>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(both(s, v));
  return a;
}

json series_json(const TruncatedSeries& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) {
    terms.push_back({{"exponent", vector_to_json(RatVec::from_integers(e, Basis::M))}, {"coeff", to_string(c)}});
  }
  return {{"bound", to_string(f.bound())}, {"terms", terms}};
}

json ideal_json(const QOSemigroup& s, const MonomialIdeal& ideal) { return both_list(s, ideal.generators()); }

QOSemigroup semigroup_of(const InputDoc& doc) {
  return build_semigroup(validate(doc.char_exponents, doc.d));
}

RatVec to_e(const QOSemigroup& s, const RatVec& v) { return v.basis() == Basis::M ? s.to_e(v) : v; }

json cmd_semigroup(const QOSemigroup& s) {
  json r;
  r["d"] = s.d();
  r["g"] = s.g();
  r["normalized"] = s.source().normalized;
  r["well_ordered"] = s.source().well_ordered;
  r["warnings"] = s.source().warnings;
  r["char_exponents"] = both_list(s, s.exponents());
  r["indices"] = ints_json(s.indices());
  r["degree"] = to_string(s.degree());
  json basis = json::array();
  for (const auto& v : s.lattice().basis()) basis.push_back(vector_to_json(v));
  r["lattice_basis"] = basis;
  r["semigroup_exponents"] = both_list(s, s.semigroup_exponents());
  r["generators"] = both_list(s, s.generators());
  json rel = json::array();
  for (std::size_t j = 0; j < s.relations().rows(); ++j) rel.push_back(ints_json(s.relations().row(j)));
  r["relations"] = rel;
  r["m_indices"] = s.m_indices();
  r["frobenius"] = both(s, s.frobenius());
  if (s.d() == 1) r["beta_bar"] = ints_json(branch_invariants(s).beta_bar);
  return r;
}

json cmd_ideals(const QOSemigroup& s) {
  json r;
  const MonomialIdeal toric_log = toric_log_jacobian_qo(s);
  const MonomialIdeal log = log_jacobian_qo(s);
  r["toric_log_jacobian"] = {{"listed", both_list(s, toric_log_jacobian_exponents(s))},
                             {"minimal", ideal_json(s, toric_log)}};
  r["log_jacobian"] = {{"listed", both_list(s, xi_set(s))}, {"minimal", ideal_json(s, log)}};
  r["toric_log_in_log"] = ideal_subset(toric_log, log);

  const Ambient ambient = Ambient::normal_cone(s.lattice());
  const MonomialIdeal jac_toric = jacobian_toric(s.generators(), s.relations(), ambient);
  json terms = json::array();
  for (const auto& t : jacobian_toric_terms(s.generators(), s.relations())) {
    terms.push_back({{"deleted_columns", t.deleted_columns},
                     {"kept_rows", t.kept_rows},
                     {"exponent", both(s, t.exponent)}});
  }
  r["jacobian_toric"] = {{"minimal", ideal_json(s, jac_toric)},
                         {"terms", terms},
                         {"equals_shifted_toric_log", ideal_equal(jac_toric, scale_by_monomial(s.frobenius(), toric_log))}};

  json notes = json::array();
  json jac;
  if (s.d() >= 3) {
    const JacobianQO j = jac_qo(s, true);
    jac = {{"minimal", ideal_json(s, j.ideal)}, {"lower_bound_only", true}, {"not_proper", j.not_proper}};
    notes.push_back("d >= 3: X^{γ0}𝒥_g is only known to be contained in Jac(S)O_Z; equality is an open question");
  } else if (s.d() == 2 && !s.source().normalized) {
    jac = nullptr;
    notes.push_back("input is not normalized; Jac(S)O_Z is not computed");
  } else {
    const JacobianQO j = jac_qo(s);
    jac = {{"minimal", ideal_json(s, j.ideal)}, {"lower_bound_only", false}, {"not_proper", j.not_proper}};
  }
  r["jacobian_hypersurface"] = jac;
  r["notes"] = notes;
  return r;
}

MonomialIdeal chosen_ideal(const QOSemigroup& s, const InputDoc& doc, const std::string& name) {
  if (name == "jac") return jac_qo(s).ideal;
  if (name == "logjac") return log_jacobian_qo(s);
  if (name == "toric-log") return toric_log_jacobian_qo(s);
  if (name == "custom") {
    if (!doc.custom_ideal) throw Error(Errc::InvalidInput, "--ideal custom needs options.ideal in the input");
    std::vector<RatVec> gens;
    for (const auto& v : *doc.custom_ideal) gens.push_back(to_e(s, v));
    return minimalize(MonomialIdeal(Ambient::normal_cone(s.lattice()), gens));
  }
  throw Error(Errc::InvalidInput, "unknown ideal \"" + name + "\"");
}

json cmd_nubar(const QOSemigroup& s, const InputDoc& doc, const CommandOptions& opts) {
  if (s.d() > 2) throw Error(Errc::UnsupportedDimension, "ν̄ is computed for d <= 2");
  std::vector<RatVec> phi;
  if (opts.phi) phi = parse_exponent_list(*opts.phi, s.d(), doc.basis);
  else if (doc.phi) phi = *doc.phi;
  else throw Error(Errc::InvalidInput, "no φ given (input \"phi\" or --phi)");

  const MonomialIdeal ideal = chosen_ideal(s, doc, opts.ideal);
  const NuBar nb = nu_bar(phi, ideal);
  const DualFan2D fan = dual_fan(ideal);
  json r;
  json phi_e = json::array();
  for (const auto& v : phi) phi_e.push_back(both(s, to_e(s, v)));
  r["phi"] = phi_e;
  r["ideal"] = {{"name", opts.ideal}, {"generators", ideal_json(s, ideal)}};
  json verts = json::array();
  for (const auto& v : fan.vertices) verts.push_back(both(s, s.to_e(v)));
  json rays = json::array();
  for (const auto& ray : fan.rays) {
    rays.push_back({{"ray", ints_json(ray.ray)}, {"basis", "N"}, {"ord", to_string(ray.ord)}, {"boundary", ray.boundary}});
  }
  json table = json::array();
  for (const auto& row : nb.table) {
    table.push_back({{"ray", ints_json(row.ray)},
                     {"ord_phi", to_string(row.ord_numerator)},
                     {"ord_ideal", to_string(row.ord_ideal)},
                     {"ratio", to_string(row.ratio)}});
  }
  r["fan"] = {{"vertices", verts}, {"rays", rays}};
  r["table"] = table;
  r["value"] = nb.value.infinite ? std::string("+inf") : to_string(nb.value.value);
  return r;
}

std::string dominant_name(DominantExponent::Verdict v) {
  switch (v) {
    case DominantExponent::Verdict::Dominant: return "Dominant";
    case DominantExponent::Verdict::NotMonomialTimesUnit: return "NotMonomialTimesUnit";
    case DominantExponent::Verdict::InconclusiveAtBound: return "InconclusiveAtBound";
  }
  return "";
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json cmd_verify(const QOSemigroup& s, const InputDoc& doc, const CommandOptions& opts, int& exit_code) {
  Deformation def = default_deformation(s, opts.point);
  if (doc.c) def.c = *doc.c;
  def.extra_terms = doc.extra_terms;
  CheckOptions check;
  check.bound = opts.bound ? opts.bound : doc.bound;
  const LeadingIdealReport rep = leading_ideal_check(s, def, check);
  const RMatrix rmat = build_R(s, def, rep.bound);

  json r;
  r["point"] = opts.point == Point::Unit ? "unit" : "zero";
  r["verdict"] = verdict_name(rep.verdict);
  r["bound"] = to_string(rep.bound);
  r["margin"] = to_string(rep.margin);
  r["exact"] = rep.exact;
  r["inclusion_only"] = rep.inclusion_only;
  json c = json::array();
  for (const auto& x : def.c) c.push_back(to_string(x));
  r["c"] = c;
  json rows = json::array();
  for (std::size_t j = 0; j < rmat.rows; ++j) {
    json row = json::array();
    for (std::size_t i = 0; i < rmat.cols; ++i) row.push_back(series_json(rmat(j, i)));
    rows.push_back(row);
  }
  r["R"] = rows;
  json minors = json::array();
  for (const auto& m : rep.minors) {
    json mj{{"deleted_columns", m.deleted_columns}, {"minor", series_json(m.minor)}, {"zero", m.zero}};
    if (m.dominant) {
      json dj{{"verdict", dominant_name(m.dominant->verdict)}};
      if (m.dominant->verdict == DominantExponent::Verdict::Dominant) {
        dj["exponent"] = both(s, s.to_e(RatVec::from_integers(m.dominant->exponent, Basis::M)));
        dj["coefficient"] = to_string(m.dominant->coefficient);
      }
      mj["dominant"] = dj;
    }
    if (m.leading_exponent) mj["leading_exponent"] = both(s, *m.leading_exponent);
    minors.push_back(mj);
  }
  r["minors"] = minors;
  r["target"] = ideal_json(s, rep.target);
  r["leading"] = rep.leading ? ideal_json(s, *rep.leading) : json(nullptr);
  r["jac_in_target"] = optional_bool(rep.jac_in_target);
  r["target_in_jac"] = optional_bool(rep.target_in_jac);
  r["notes"] = rep.notes;
  switch (rep.verdict) {
    case Verdict::Pass: exit_code = kExitOk; break;
    case Verdict::Fail: exit_code = kExitFail; break;
    case Verdict::Inconclusive: exit_code = kExitInconclusive; break;
  }
  return r;
}

json cmd_poincare(const QOSemigroup& s) {
  const PoincareSeries p = poincare_series(s);
  json r;
  r["numerator"] = both_list(s, p.numerator);
  r["denominator"] = both_list(s, p.denominator);
  r["frobenius"] = both(s, s.frobenius());
  r["symmetric"] = poincare_symmetry_check(p, s.frobenius(), s.d());
  return r;
}

json cmd_branch(const QOSemigroup& s) {
  const BranchInvariants b = branch_invariants(s);
  json r;
  r["multiplicity"] = to_string(b.multiplicity);
  r["beta_bar"] = ints_json(b.beta_bar);
  r["jacobian_multiplicity"] = to_string(b.jacobian_multiplicity);
  r["milnor"] = to_string(b.milnor);
  r["conductor"] = to_string(b.milnor);
  r["frobenius_number"] = to_string(b.frobenius_number);
  return r;
}

json error_json(std::string_view code, const std::string& message) {
  return {{"error", {{"code", std::string(code)}, {"message", message}}}};
}

}  // namespace

CommandResult run_command(std::string_view command, const InputDoc& doc, const CommandOptions& opts) {
  CommandResult out;
  try {
    const QOSemigroup s = semigroup_of(doc);
    json r;
    if (command == "semigroup") r = cmd_semigroup(s);
    else if (command == "ideals") r = cmd_ideals(s);
    else if (command == "nubar") r = cmd_nubar(s, doc, opts);
    else if (command == "verify") r = cmd_verify(s, doc, opts, out.exit_code);
    else if (command == "poincare") r = cmd_poincare(s);
    else if (command == "branch") r = cmd_branch(s);
    else throw Error(Errc::InvalidInput, "unknown command \"" + std::string(command) + "\"");
    r["command"] = std::string(command);
    out.report = std::move(r);
  } catch (const Error& e) {
    out.exit_code = exit_code_for(e.code());
    out.report = error_json(errc_name(e.code()), e.what());
    out.report["command"] = std::string(command);
  }
  return out;
}

CommandResult run_command_text(std::string_view command, std::string_view input_text, const CommandOptions& opts) {
  InputDoc doc;
  try {
    doc = parse_input_text(input_text);
  } catch (const Error& e) {
    CommandResult out;
    out.exit_code = exit_code_for(e.code());
    out.report = error_json(errc_name(e.code()), e.what());
    out.report["command"] = std::string(command);
    return out;
  }
  return run_command(command, doc, opts);
}

namespace {

bool is_vector(const json& j) {
  return j.is_object() && j.size() == 2 && j.contains("basis") && j.contains("coords");
}

std::string inline_value(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (is_vector(j)) {
    std::string s = "(";
    for (std::size_t i = 0; i < j["coords"].size(); ++i) {
      if (i) s += ", ";
      s += j["coords"][i].get<std::string>();
    }
    return s + ")_" + j["basis"].get<std::string>();
  }
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) s += ", ";
      s += inline_value(j[i]);
    }
    return s + "]";
  }
  return j.dump();
}

bool is_flat(const json& j) {
  if (j.is_array()) {
    for (const auto& x : j)
      if (!is_flat(x)) return false;
    return true;
  }
  return !j.is_object() || is_vector(j);
}

void render(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (is_flat(v)) {
        os << pad << k << ": " << inline_value(v) << '\n';
      } else {
        os << pad << k << ":\n";
        render(os, v, indent + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_flat(v)) {
        os << pad << "- " << inline_value(v) << '\n';
      } else {
        os << pad << "-\n";
        render(os, v, indent + 1);
      }
    }
  } else {
    os << pad << inline_value(j) << '\n';
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  render(os, report, 0);
  return os.str();
}

}  // namespace qoinv
