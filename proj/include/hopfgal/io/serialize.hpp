#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hopfgal/galois/galois.hpp"
#include "hopfgal/rewrite/case_studies.hpp"

namespace hopfgal::io {

using json = nlohmann::json;

/// Non-negative integer, whether stored signed or unsigned.
inline bool is_natural(const json& j) { return j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0); }

/// Field named by a file or a --field flag: p == 0 means the rationals.
struct FieldSpec {
  unsigned long p = 0;

  bool rational() const { return p == 0; }
  std::string name() const { return rational() ? "Q" : "GF(" + std::to_string(p) + ")"; }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline FieldSpec field_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) throw ParseError("field must be {\"type\": \"Q\"} or {\"type\": \"GF\", \"p\": prime}");
  const auto type = j["type"].get<std::string>();
  if (type == "Q") return {};
  if (type != "GF") throw ParseError("unknown field type " + type);
  if (!j.contains("p") || !is_natural(j["p"])) throw ParseError("GF field needs a positive integer p");
  const auto p = j["p"].get<unsigned long>();
  if (p > 0xFFFFFFFFul || !is_prime(static_cast<std::uint32_t>(p))) throw ParseError(std::to_string(p) + " is not prime");
  return {p};
}

/// "q" or "gf:p".
inline FieldSpec parse_field_flag(const std::string& s) {
  if (s == "q" || s == "Q") return {};
  if (s.rfind("gf:", 0) == 0 || s.rfind("GF:", 0) == 0) {
    unsigned long p = 0;
    try {
      std::size_t used = 0;
      p = std::stoul(s.substr(3), &used);
      if (used != s.size() - 3) p = 0;
    } catch (const std::exception&) {
      p = 0;
    }
    if (p == 0 || p > 0xFFFFFFFFul || !is_prime(static_cast<std::uint32_t>(p))) throw ParseError("--field gf:p needs a prime p, got " + s);
    return {p};
  }
  throw ParseError("--field must be q or gf:p, got " + s);
}

/// Field actually used: the override may reduce rational data mod p, nothing else.
inline FieldSpec resolve_field(const FieldSpec& file, const std::optional<FieldSpec>& flag) {
  if (!flag || *flag == file) return file;
  if (file.rational() && !flag->rational()) return *flag;
  throw ParseError("cannot reinterpret data over " + file.name() + " as " + flag->name());
}

inline json to_json(const RationalField&) { return {{"type", "Q"}}; }
inline json to_json(const PrimeField& f) { return {{"type", "GF"}, {"p", f.modulus()}}; }

inline json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

namespace detail {

template <ExactField F>
typename F::Element scalar(const F& f, const json& j) {
  if (j.is_string()) return f.parse(j.get<std::string>());
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  throw ParseError("scalars must be strings or integers, got " + j.dump());
}

template <ExactField F>
Vector<F> vector(const F& f, const json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) throw ParseError(what + " must be an array of length " + std::to_string(n));
  Vector<F> v;
  v.reserve(n);
  for (const auto& x : j) v.push_back(scalar(f, x));
  return v;
}

template <ExactField F>
LinMap<F> columns(const F& f, const json& j, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!j.is_array() || j.size() != cols) throw ParseError(what + " must list " + std::to_string(cols) + " columns");
  std::vector<Vector<F>> cs;
  for (std::size_t c = 0; c < cols; ++c) cs.push_back(vector(f, j[c], rows, what + " column " + std::to_string(c)));
  return LinMap<F>::from_columns(f, rows, cs);
}

inline std::size_t dimension(const json& j, const std::string& what) {
  if (!j.contains("dim") || !is_natural(j["dim"]) || j["dim"].get<std::size_t>() == 0) throw ParseError(what + ".dim must be a positive integer");
  return j["dim"].get<std::size_t>();
}

template <ExactField F>
BasedAlgebra<F> algebra(const F& f, const json& j, const std::string& what) {
  if (!j.is_object()) throw ParseError(what + " must be an object");
  const auto n = dimension(j, what);
  if (!j.contains("mult") || !j["mult"].is_array() || j["mult"].size() != n) throw ParseError(what + ".mult must be a dim x dim array of vectors");
  std::vector<typename F::Element> s;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = j["mult"][i];
    if (!row.is_array() || row.size() != n) throw ParseError(what + ".mult row " + std::to_string(i) + " has the wrong length");
    for (std::size_t k = 0; k < n; ++k) {
      auto v = vector(f, row[k], n, what + ".mult[" + std::to_string(i) + "][" + std::to_string(k) + "]");
      s.insert(s.end(), v.begin(), v.end());
    }
  }
  if (j.contains("unit")) return BasedAlgebra<F>(f, n, std::move(s), vector(f, j["unit"], n, what + ".unit"));
  auto a = BasedAlgebra<F>::with_derived_unit(f, n, std::move(s));
  if (!a) throw AxiomError(what + " has no two-sided unit");
  return *a;
}

inline std::size_t index(const json& j, std::size_t bound, const std::string& what) {
  if (!is_natural(j) || j.get<std::size_t>() >= bound) throw ParseError(what + " index out of range");
  return j.get<std::size_t>();
}

}  // namespace detail

/// Parses the algebroid schema without checking any axiom.
///   total: {dim, mult[i][j] = e_i e_j, unit?}, base: same (absent: the ground field),
///   source/target: columns s(e_a), comult: per basis element a list of [i, j, c] for c e_i (x) e_j,
///   counit: columns eps(e_x).
template <ExactField F>
LeftBialgebroid<F> bialgebroid_from_json(const json& j, const F& f) {
  if (!j.is_object()) throw ParseError("algebroid file must be a JSON object");
  if (!j.contains("total")) throw ParseError("missing total");
  auto total = detail::algebra(f, j["total"], "total");
  const auto m = total.dim();
  const bool over_field = !j.contains("base");
  auto base = over_field ? BasedAlgebra<F>::ground(f) : detail::algebra(f, j["base"], "base");
  const auto n = base.dim();
  auto unit_map = LinMap<F>::from_columns(f, m, {total.unit()});
  auto source = j.contains("source") ? detail::columns(f, j["source"], m, n, "source") : over_field ? unit_map : throw ParseError("missing source");
  auto target = j.contains("target") ? detail::columns(f, j["target"], m, n, "target") : over_field ? unit_map : throw ParseError("missing target");
  if (!j.contains("comult") || !j["comult"].is_array() || j["comult"].size() != m) throw ParseError("comult must list one tensor per basis element");
  LinMap<F> comult(f, m * m, m);
  for (std::size_t x = 0; x < m; ++x) {
    const auto& terms = j["comult"][x];
    if (!terms.is_array()) throw ParseError("comult entry " + std::to_string(x) + " must be a list of [i, j, c]");
    for (const auto& t : terms) {
      if (!t.is_array() || t.size() != 3) throw ParseError("comult terms are [i, j, c]");
      const auto i = detail::index(t[0], m, "comult"), k = detail::index(t[1], m, "comult");
      comult(i * m + k, x) += detail::scalar(f, t[2]);
    }
  }
  if (!j.contains("counit")) throw ParseError("missing counit");
  auto counit = detail::columns(f, j["counit"], n, m, "counit");
  return LeftBialgebroid<F>(AeRing<F>(std::move(base), std::move(total), std::move(source), std::move(target)), std::move(comult), std::move(counit));
}

/// Parses and validates; failing axioms raise AxiomError naming every failed check.
template <ExactField F>
LeftBialgebroid<F> load_bialgebroid(const json& j, const F& f) {
  auto b = bialgebroid_from_json(j, f);
  require_valid(validate_bialgebroid(b));
  return b;
}

template <ExactField F>
LeftBialgebroid<F> load_bialgebroid(const std::string& path, const F& f) {
  return load_bialgebroid(read_file(path), f);
}

template <ExactField F>
json scalar_to_json(const F& f, const typename F::Element& a) {
  return f.format(a);
}

template <ExactField F>
json vector_to_json(const F& f, const Vector<F>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(f.format(x));
  return out;
}

namespace detail {

template <ExactField F>
json algebra_to_json(const BasedAlgebra<F>& a) {
  json mult = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(vector_to_json(a.field(), a.basis_product(i, k)));
    mult.push_back(std::move(row));
  }
  return {{"dim", a.dim()}, {"mult", std::move(mult)}, {"unit", vector_to_json(a.field(), a.unit())}};
}

template <ExactField F>
json columns_to_json(const LinMap<F>& m) {
  json out = json::array();
  for (std::size_t c = 0; c < m.domain_dim(); ++c) out.push_back(vector_to_json(m.field(), m.column(c)));
  return out;
}

}  // namespace detail

template <ExactField F>
json bialgebroid_to_json(const LeftBialgebroid<F>& b, const std::string& name) {
  const auto& f = b.field();
  const auto m = b.dim();
  json j{{"name", name}, {"field", to_json(f)}, {"total", detail::algebra_to_json(b.total())}};
  if (!b.over_ground_field()) {
    j["base"] = detail::algebra_to_json(b.base());
    j["source"] = detail::columns_to_json(b.ring().source());
    j["target"] = detail::columns_to_json(b.ring().target());
  }
  json comult = json::array();
  for (std::size_t x = 0; x < m; ++x) {
    json terms = json::array();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k)
        if (!b.comult()(i * m + k, x).is_zero()) terms.push_back({i, k, f.format(b.comult()(i * m + k, x))});
    comult.push_back(std::move(terms));
  }
  j["comult"] = std::move(comult);
  j["counit"] = detail::columns_to_json(b.counit());
  return j;
}

// ---------------------------------------------------------------------------
// Subspaces

template <ExactField F>
Subspace<F> subspace_from_json(const json& j, const F& f) {
  if (!j.is_object() || !j.contains("ambient") || !is_natural(j["ambient"]) || !j.contains("basis") || !j["basis"].is_array())
    throw ParseError("subspace must be {\"ambient\": n, \"basis\": [[...], ...]}");
  const auto n = j["ambient"].get<std::size_t>();
  std::vector<Vector<F>> rows;
  for (const auto& r : j["basis"]) rows.push_back(detail::vector(f, r, n, "subspace row"));
  return Subspace<F>::span(f, n, rows);
}

/// A single subspace object, an object with a "subspaces" list, or a bare array of subspace objects.
template <ExactField F>
std::vector<Subspace<F>> subspaces_from_json(const json& j, const F& f) {
  std::vector<Subspace<F>> out;
  if (j.is_array()) {
    for (const auto& s : j) out.push_back(subspace_from_json(s, f));
  } else if (j.is_object() && j.contains("subspaces")) {
    if (!j.contains("ambient") || !is_natural(j["ambient"]) || !j["subspaces"].is_array()) throw ParseError("subspace list needs ambient and subspaces");
    for (const auto& basis : j["subspaces"]) out.push_back(subspace_from_json(json{{"ambient", j["ambient"]}, {"basis", basis}}, f));
  } else {
    out.push_back(subspace_from_json(j, f));
  }
  return out;
}

template <ExactField F>
json to_json(const Subspace<F>& s) {
  json basis = json::array();
  for (const auto& r : s.basis()) basis.push_back(vector_to_json(s.field(), r));
  return {{"ambient", s.ambient_dim()}, {"dim", s.dim()}, {"basis", std::move(basis)}};
}

template <ExactField F>
json subspace_list_to_json(const std::vector<Subspace<F>>& v, std::size_t ambient) {
  json list = json::array();
  for (const auto& s : v) list.push_back(to_json(s)["basis"]);
  return {{"ambient", ambient}, {"subspaces", std::move(list)}};
}

// ---------------------------------------------------------------------------
// Reports

inline json to_json(const ValidationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"statement", c.statement}, {"passed", c.passed}, {"witness", c.witness}});
  return {{"ok", r.ok()}, {"checks", std::move(checks)}, {"notes", r.notes}};
}

inline json to_json(const TranslationReport& r) {
  return {{"ok", r.ok()},
          {"inverse_identities", r.inverse_identities},
          {"in_distinguished", r.in_distinguished},
          {"unital", r.unital},
          {"multiplicative", r.multiplicative},
          {"witness", r.witness}};
}

template <ExactField F>
json optional_subspace(const std::optional<Subspace<F>>& s) {
  return s ? to_json(*s) : json(nullptr);
}

template <ExactField F>
json to_json(const IdealEntry<F>& e) {
  json j{{"ideal", to_json(e.ideal)},          {"valid", e.valid},
         {"psi", optional_subspace(e.psi)},    {"phi_psi", optional_subspace(e.phi_psi)},
         {"phi_psi_inside", e.counit_inclusion}, {"psi_phi_psi_equals_psi", e.idempotent}};
  if (e.hypotheses_computed)
    j["filter"] = {{"coequalizer", e.coequalizer},
                   {"pure_left", e.pure_left},
                   {"pure_right", e.pure_right},
                   {"pure_left_twisted", e.pure_left_twisted},
                   {"pure_right_twisted", e.pure_right_twisted},
                   {"persistence", e.persistence},
                   {"admitted", e.admitted}};
  return j;
}

template <ExactField F>
json to_json(const SubringEntry<F>& e) {
  json j{{"subring", to_json(e.subring)},        {"valid", e.valid},
         {"phi", optional_subspace(e.phi)},      {"psi_phi", optional_subspace(e.psi_phi)},
         {"inside_psi_phi", e.unit_inclusion},   {"phi_psi_phi_equals_phi", e.idempotent}};
  if (e.hypotheses_computed)
    j["filter"] = {{"equalizer", e.equalizer},
                   {"pure_left", e.pure_left},
                   {"pure_right", e.pure_right},
                   {"pure_left_twisted", e.pure_left_twisted},
                   {"pure_right_twisted", e.pure_right_twisted},
                   {"bbeta", e.bbeta},
                   {"gamma_prime", e.gamma_prime},
                   {"admitted", e.admitted}};
  if (e.maps_computed)
    j["comparison_maps"] = {{"zeta_corestricts", e.zeta_corestricts},
                            {"zeta_rank", e.zeta_rank},
                            {"zeta_iso_expected", e.zeta_iso_expected},
                            {"zeta_iso", e.zeta_iso},
                            {"xi_rank", e.xi_rank},
                            {"xi_bijective", e.xi_bijective}};
  return j;
}

template <ExactField F>
json to_json(const GaloisReport<F>& r) {
  json ideals = json::array(), subrings = json::array(), violations = json::array();
  for (const auto& e : r.ideals) ideals.push_back(to_json(e));
  for (const auto& e : r.subrings) subrings.push_back(to_json(e));
  for (const auto& v : r.violations) violations.push_back({{"law", v.law}, {"objects", v.objects}, {"detail", v.detail}});
  json j{{"ok", r.ok()},
         {"inputs_valid", r.inputs_valid()},
         {"ideals", std::move(ideals)},
         {"subrings", std::move(subrings)},
         {"nested_ideal_pairs", r.nested_ideal_pairs},
         {"nested_subring_pairs", r.nested_subring_pairs},
         {"connection_checked", r.connection_checked},
         {"bijection_checked", r.bijection_checked},
         {"comparison_maps_checked", r.maps_checked},
         {"violations", std::move(violations)},
         {"notes", r.notes}};
  if (r.bijection_checked) j["admitted"] = {{"ideals", r.admitted_ideals}, {"subrings", r.admitted_subrings}};
  return j;
}

namespace detail {

inline json monomial_map(const rewrite::Monomial& m, const std::vector<std::string>& vars) {
  json j = json::object();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) j[vars[i]] = m[i];
  return j;
}

}  // namespace detail

template <ExactField F>
json to_json(const rewrite::ReductionSystem<F>& s) {
  json rules = json::array();
  for (const auto& r : s.rules()) {
    json rhs = json::array();
    for (const auto& [m, c] : r.rhs.terms()) rhs.push_back({{"coeff", s.field().format(c)}, {"exponents", detail::monomial_map(m, s.variables())}});
    rules.push_back({{"lhs", detail::monomial_map(r.lhs, s.variables())}, {"rhs", std::move(rhs)}, {"text", s.format(r.lhs) + " -> " + s.format(r.rhs)}});
  }
  return {{"variables", s.variables()}, {"order", "lex"}, {"rules", std::move(rules)}};
}

/// System file: {"variables": [...], "rules": [{"lhs": {var: exp}, "rhs": [{"coeff": c, "exponents": {var: exp}}]}]}.
template <ExactField F>
rewrite::ReductionSystem<F> reduction_system_from_json(const json& j, const F& f) {
  if (!j.is_object() || !j.contains("variables") || !j["variables"].is_array()) throw ParseError("system needs a variables list");
  std::vector<std::string> vars;
  for (const auto& v : j["variables"]) {
    if (!v.is_string()) throw ParseError("variable names must be strings");
    vars.push_back(v.get<std::string>());
  }
  rewrite::ReductionSystem<F> s(f, vars);
  auto monomial = [&](const json& e) {
    if (!e.is_object()) throw ParseError("exponents must be an object");
    rewrite::Monomial m(vars.size(), 0);
    for (const auto& [name, exp] : e.items()) {
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) throw ParseError("unknown variable " + name);
      if (!is_natural(exp) || exp.template get<unsigned long long>() > 0xFFFFFFFFull) throw ParseError("exponents must be natural numbers");
      m[static_cast<std::size_t>(it - vars.begin())] = exp.template get<std::uint32_t>();
    }
    return m;
  };
  for (const auto& r : j.value("rules", json::array())) {
    if (!r.contains("lhs") || !r.contains("rhs") || !r["rhs"].is_array()) throw ParseError("rules need lhs and rhs");
    rewrite::Polynomial<F> rhs(f, vars.size());
    for (const auto& t : r["rhs"]) rhs.add_term(monomial(t.value("exponents", json::object())), detail::scalar(f, t.at("coeff")));
    s.add_rule(monomial(r["lhs"]), std::move(rhs));
  }
  return s;
}

template <ExactField F>
json to_json(const rewrite::ConfluenceReport<F>& r, const rewrite::ReductionSystem<F>& s) {
  auto amb = [&](const rewrite::Ambiguity<F>& a) {
    return json{{"monomial", s.format(a.monomial)},
                {"rules", {a.first_rule, a.second_rule}},
                {"normal_forms", {s.format(a.first_normal_form), s.format(a.second_normal_form)}},
                {"resolved", a.resolved()}};
  };
  json ambiguities = json::array(), failures = json::array();
  for (const auto& a : r.ambiguities) ambiguities.push_back(amb(a));
  for (const auto& a : r.exhaustive_failures) failures.push_back(amb(a));
  return {{"confluent", r.confluent()},
          {"degree_bound", r.degree_bound},
          {"ambiguities", std::move(ambiguities)},
          {"monomials_checked", r.monomials_checked},
          {"exhaustive_failures", std::move(failures)}};
}

template <ExactField F>
json to_json(const rewrite::Sl2Report<F>& r) {
  const auto& h = r.h_system;
  const auto& k = r.k_system;
  json terms = json::array();
  for (const auto& [mult, rel] : r.third_rule.terms) terms.push_back({{"multiplier", k.format(mult)}, {"relation", k.format(rel)}});
  auto monomials = [](const auto& sys, const std::vector<rewrite::Monomial>& ms) {
    json out = json::array();
    for (const auto& m : ms) out.push_back(sys.format(m));
    return out;
  };
  json eq = json::array();
  for (const auto& p : r.equalizer_basis) eq.push_back(h.format(p));
  return {{"ok", r.ok()},
          {"degree_bound", r.degree_bound},
          {"h_system", to_json(h)},
          {"k_system", to_json(k)},
          {"third_rule_derivation", {{"target", k.format(r.third_rule.target)}, {"combination", std::move(terms)}, {"verified", r.third_rule.verified}}},
          {"h_confluence", to_json(r.h_confluence, h)},
          {"k_confluence", to_json(r.k_confluence, k)},
          {"h_basis", monomials(h, r.h_basis)},
          {"h_basis_matches_family", r.h_basis_matches_family},
          {"k_family_size", r.k_family.size()},
          {"k_family_distinct", r.k_family_distinct},
          {"k_family_irreducible", r.k_family_irreducible},
          {"equalizer_basis", std::move(eq)},
          {"expected_basis", monomials(h, r.expected_monomials)},
          {"equalizer_matches", r.equalizer_matches},
          {"equalizer_closed_under_a_b", r.equalizer_closed},
          {"notes", r.notes}};
}

template <ExactField F>
json to_json(const rewrite::LaurentReport<F>& r) {
  const auto& s = r.system;
  json certs = json::array();
  for (const auto& c : r.certificates)
    certs.push_back({{"exponent", c.exponent},
                     {"element", s.format(c.element)},
                     {"x", s.format(c.x)},
                     {"b", s.format(c.b)},
                     {"y", s.format(c.y)},
                     {"sign", c.sign},
                     {"identity", "e(x)1 - 1(x)e = sign * ((x*b)(x)y - x(x)(b*y))"},
                     {"verified", c.verified}});
  json window = json::array();
  for (const auto& m : r.window_basis) window.push_back(s.format(m));
  return {{"ok", r.ok()},
          {"window", r.window},
          {"system", to_json(s)},
          {"confluence", to_json(r.confluence, s)},
          {"window_basis", std::move(window)},
          {"equalizer_certificates", std::move(certs)},
          {"inverse_in_equalizer", r.inverse_in_equalizer},
          {"inverse_outside_b", r.inverse_outside_b},
          {"hplus_window_dim", r.hplus_dim},
          {"hbplus_equals_h_xminus1", r.hbplus_equals_h_xminus1},
          {"h_xminus1_equals_hplus", r.h_xminus1_equals_hplus},
          {"hplus_equals_hhplus", r.hplus_equals_hhplus},
          {"bplus_equals_b_xminus1", r.bplus_equals_b_xminus1},
          {"evaluation_at_one_criterion", r.evaluation_criterion},
          {"xminus1_in_hbplus", r.xminus1_in_hbplus},
          {"xplus1_in_hbplus", r.xplus1_in_hbplus},
          {"coequalizer_condition_hplus", r.coequalizer_condition},
          {"b_window_dim", r.b_window_dim},
          {"psi_phi_b_window_dim", r.psi_phi_window_dim},
          {"b_inside_psi_phi_b", r.b_inside_psi_phi},
          {"strict_containment", r.strict_containment},
          {"containment_witness", s.format(r.containment_witness)},
          {"excluded_by_equalizer_filter", r.excluded_by_equalizer_filter},
          {"bijection_violation", r.bijection_violation},
          {"notes", r.notes}};
}

}  // namespace hopfgal::io
