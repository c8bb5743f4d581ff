#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hopfgal/exactla/subspace.hpp"
#include "hopfgal/rewrite/reduction.hpp"

namespace hopfgal::rewrite {

/// target = sum multiplier_i * relation_i, checked by expanding both sides.
template <ExactField F>
struct Derivation {
  Polynomial<F> target;
  std::vector<std::pair<Polynomial<F>, Polynomial<F>>> terms;
  bool verified = false;
};

template <ExactField F>
Derivation<F> derive(Polynomial<F> target, std::vector<std::pair<Polynomial<F>, Polynomial<F>>> terms) {
  Derivation<F> d{std::move(target), std::move(terms), false};
  auto sum = Polynomial<F>(d.target.field(), d.target.nvars());
  for (const auto& [mult, rel] : d.terms) sum += mult * rel;
  d.verified = sum == d.target;
  return d;
}

/// rule lhs - rhs as a polynomial relation.
template <ExactField F>
Polynomial<F> relation(const Rule<F>& r) {
  return Polynomial<F>::monomial(r.rhs.field(), r.lhs) - r.rhs;
}

template <ExactField F>
ReductionSystem<F> sl2_system(const F& field) {
  ReductionSystem<F> s(field, {"a", "b", "c", "d"});
  s.add_rule("ad", "bc + 1");
  return s;
}

/// Two copies of the SL_2 relations sharing the first row (s, t), with second rows (u, v) and (w, z).
template <ExactField F>
ReductionSystem<F> sl2_pair_system(const F& field) {
  ReductionSystem<F> s(field, {"s", "t", "u", "v", "w", "z"});
  s.add_rule("sv", "tu + 1");
  s.add_rule("sz", "tw + 1");
  s.add_rule("tuz", "tvw + v - z");
  return s;
}

template <ExactField F>
ReductionSystem<F> laurent_system(const F& field) {
  ReductionSystem<F> s(field, {"X", "Y"});
  s.add_rule("XY", "1");
  return s;
}

template <ExactField F>
struct Sl2Report {
  std::uint32_t degree_bound = 0;
  ReductionSystem<F> h_system;
  ReductionSystem<F> k_system;
  /// tuz - tvw - v + z as a combination of the two defining relations of K.
  Derivation<F> third_rule;
  ConfluenceReport<F> h_confluence{};
  ConfluenceReport<F> k_confluence{};
  /// Irreducible monomials of H up to the bound.
  std::vector<Monomial> h_basis{};
  /// h_basis equals {a^i b^j c^k} u {b^m c^n d^l : l >= 1} up to the bound.
  bool h_basis_matches_family = false;
  /// {s^i t^j u^k, t^m u^n v^l, s^i t^j w^k, t^m w^n z^l} up to the bound.
  std::vector<Monomial> k_family{};
  bool k_family_distinct = false;
  bool k_family_irreducible = false;
  /// Kernel of eta_1 - eta_2 on the degree-bounded part of H.
  std::vector<Polynomial<F>> equalizer_basis{};
  std::vector<Monomial> expected_monomials{};
  bool equalizer_matches = false;
  bool equalizer_closed = false;
  std::vector<std::string> notes{};

  bool ok() const {
    return third_rule.verified && h_confluence.confluent() && k_confluence.confluent() && h_basis_matches_family &&
           k_family_distinct && k_family_irreducible && equalizer_matches && equalizer_closed;
  }
};

namespace detail {

template <ExactField F>
Vector<F> coordinates_in(const F& field, const Polynomial<F>& p, const std::map<Monomial, std::size_t>& index, bool& inside) {
  auto v = zero_vector(field, index.size());
  inside = true;
  for (const auto& [m, c] : p.terms()) {
    auto it = index.find(m);
    if (it == index.end()) {
      inside = false;
      continue;
    }
    v[it->second] = c;
  }
  return v;
}

template <ExactField F>
Polynomial<F> from_coordinates(const F& field, std::size_t nvars, const Vector<F>& v, const std::vector<Monomial>& basis) {
  Polynomial<F> p(field, nvars);
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], v[i]);
  return p;
}

template <ExactField F>
Polynomial<F> substitute(const ReductionSystem<F>& target, const Monomial& m, const std::vector<std::size_t>& images) {
  Monomial out(target.nvars(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) out[images[i]] += m[i];
  return target.normal_form(out);
}

}  // namespace detail

/// Degree-bounded verification that the equalizer of the two maps H -> K of the
/// SL_2 example is the polynomial subalgebra in the first row.
template <ExactField F>
Sl2Report<F> sl2_case_study(const F& field, std::uint32_t degree_bound) {
  auto pair = sl2_pair_system(field);
  const auto& kr = pair.rules();
  auto third = derive(relation(kr[2]), {{pair.parse("v"), relation(kr[1])}, {pair.parse("-z"), relation(kr[0])}});
  Sl2Report<F> rep{degree_bound, sl2_system(field), std::move(pair), std::move(third)};
  const auto& h = rep.h_system;
  const auto& k = rep.k_system;

  const auto exhaustive = std::max<std::uint32_t>(degree_bound, 5);
  rep.h_confluence = check_confluence(h, exhaustive);
  rep.k_confluence = check_confluence(k, exhaustive);

  PresentedAlgebra<F> ha(h);
  rep.h_basis = ha.normal_monomials(degree_bound);
  std::set<Monomial> family;
  for (const auto& m : monomials_up_to(4, degree_bound))
    if ((m[3] == 0) || (m[0] == 0 && m[3] >= 1)) family.insert(m);
  rep.h_basis_matches_family = family == std::set<Monomial>(rep.h_basis.begin(), rep.h_basis.end());

  for (const auto& m : monomials_up_to(6, degree_bound)) {
    const bool su = m[3] == 0 && m[4] == 0 && m[5] == 0;
    const bool tuv = m[0] == 0 && m[4] == 0 && m[5] == 0 && m[3] >= 1;
    const bool stw = m[2] == 0 && m[3] == 0 && m[5] == 0 && m[4] >= 1;
    const bool twz = m[0] == 0 && m[2] == 0 && m[3] == 0 && m[5] >= 1;
    rep.k_family.insert(rep.k_family.end(), static_cast<std::size_t>(su + tuv + stw + twz), m);
  }
  rep.k_family_distinct = std::set<Monomial>(rep.k_family.begin(), rep.k_family.end()).size() == rep.k_family.size();
  rep.k_family_irreducible = true;
  for (const auto& m : rep.k_family)
    if (!(k.normal_form(m) == Polynomial<F>::monomial(field, m))) rep.k_family_irreducible = false;

  // a, b, c, d -> s, t, u, v and s, t, w, z
  const std::vector<std::size_t> eta1{0, 1, 2, 3}, eta2{0, 1, 4, 5};
  std::vector<Polynomial<F>> diffs;
  std::map<Monomial, std::size_t> rows;
  for (const auto& m : rep.h_basis) {
    diffs.push_back(detail::substitute(k, m, eta1) - detail::substitute(k, m, eta2));
    for (const auto& [km, c] : diffs.back().terms()) rows.emplace(km, 0);
  }
  std::size_t r = 0;
  for (auto& [km, i] : rows) i = r++;
  std::vector<Vector<F>> cols;
  bool inside = true;
  for (const auto& d : diffs) cols.push_back(detail::coordinates_in(field, d, rows, inside));
  const auto n = rep.h_basis.size();
  const auto ker = kernel(LinMap<F>::from_columns(field, rows.size(), cols));
  for (const auto& v : ker.basis()) rep.equalizer_basis.push_back(detail::from_coordinates(field, 4, v, rep.h_basis));

  std::map<Monomial, std::size_t> h_index;
  for (std::size_t i = 0; i < n; ++i) h_index.emplace(rep.h_basis[i], i);
  std::vector<Vector<F>> expected;
  for (const auto& m : rep.h_basis)
    if (m[2] == 0 && m[3] == 0) {
      rep.expected_monomials.push_back(m);
      expected.push_back(unit_vector(field, n, h_index.at(m)));
    }
  rep.equalizer_matches = ker == Subspace<F>::span(field, n, expected);

  rep.equalizer_closed = true;
  for (const auto& e : rep.equalizer_basis)
    for (std::size_t x : {0u, 1u}) {
      auto prod = h.multiply(h.variable(x), e);
      if (prod.degree() > degree_bound) continue;
      auto v = detail::coordinates_in(field, prod, h_index, inside);
      if (!inside || !ker.contains(v)) rep.equalizer_closed = false;
    }

  rep.notes = {
      "third rule tuz -> tvw + v - z derived from the defining relations of K (certificate third_rule)",
      "the equalizer is computed on the degree filtration; reductions are never truncated",
      "flatness and faithful flatness of H -> K are not checked by the engine; the equalizer is computed directly",
      "no point of SL_2 has first row (0, 0) since ad - bc = 0 there, so the first-row map is surjective on points",
  };
  return rep;
}

/// Formal element of a tensor square of a presented algebra, keyed by pairs of monomials.
template <ExactField F>
using FormalTensor = std::map<std::pair<Monomial, Monomial>, typename F::Element>;

template <ExactField F>
FormalTensor<F> formal_tensor(const Polynomial<F>& p, const Polynomial<F>& q) {
  FormalTensor<F> t;
  for (const auto& [m, c] : p.terms())
    for (const auto& [n, d] : q.terms()) {
      auto [it, fresh] = t.try_emplace({m, n}, c * d);
      if (!fresh) it->second += c * d;
      if (it->second.is_zero()) t.erase(it);
    }
  return t;
}

template <ExactField F>
FormalTensor<F> combine(FormalTensor<F> a, const FormalTensor<F>& b, const typename F::Element& scale) {
  for (const auto& [k, v] : b) {
    auto [it, fresh] = a.try_emplace(k, v * scale);
    if (!fresh) it->second += v * scale;
    if (it->second.is_zero()) a.erase(it);
  }
  return a;
}

/// e (x) 1 - 1 (x) e = sign * ((x b) (x) y - x (x) (b y)) with b in the subalgebra.
template <ExactField F>
struct BalancingCertificate {
  int exponent = 0;
  Polynomial<F> element;
  Polynomial<F> x;
  Polynomial<F> b;
  Polynomial<F> y;
  int sign = 1;
  bool verified = false;
};

template <ExactField F>
struct LaurentReport {
  std::uint32_t window = 0;
  ReductionSystem<F> system;
  ConfluenceReport<F> confluence{};
  /// X^{-w}, ..., X^{-1}, 1, X, ..., X^w as normal monomials.
  std::vector<Monomial> window_basis{};
  std::vector<BalancingCertificate<F>> certificates{};
  bool inverse_in_equalizer = false;
  bool inverse_outside_b = false;
  std::size_t hplus_dim = 0;
  bool hbplus_equals_h_xminus1 = false;
  bool h_xminus1_equals_hplus = false;
  bool hplus_equals_hhplus = false;
  bool bplus_equals_b_xminus1 = false;
  /// f in H(X - 1) iff f(1) = 0, for every f supported in the window.
  bool evaluation_criterion = false;
  bool xminus1_in_hbplus = false;
  bool xplus1_in_hbplus = false;
  bool coequalizer_condition = false;
  std::size_t b_window_dim = 0;
  std::size_t psi_phi_window_dim = 0;
  bool b_inside_psi_phi = false;
  bool strict_containment = false;
  Monomial containment_witness{};
  bool excluded_by_equalizer_filter = false;
  bool bijection_violation = false;
  std::vector<std::string> notes{};

  bool ok() const {
    bool certs = !certificates.empty();
    for (const auto& c : certificates) certs = certs && c.verified;
    return confluence.confluent() && certs && inverse_in_equalizer && inverse_outside_b && hbplus_equals_h_xminus1 &&
           h_xminus1_equals_hplus && hplus_equals_hhplus && bplus_equals_b_xminus1 && evaluation_criterion &&
           xminus1_in_hbplus && coequalizer_condition && b_inside_psi_phi && strict_containment &&
           excluded_by_equalizer_filter && !bijection_violation;
  }
};

/// X^n as a normal monomial of k[X, Y]/(XY - 1).
inline Monomial laurent_monomial(int n) {
  return n >= 0 ? Monomial{static_cast<std::uint32_t>(n), 0} : Monomial{0, static_cast<std::uint32_t>(-n)};
}

/// The Laurent polynomial ring with B = k[X], restricted to the window of exponents -w..w.
template <ExactField F>
LaurentReport<F> laurent_case_study(const F& field, std::uint32_t window) {
  if (window == 0) throw InvalidArgument("window must be at least 1");
  LaurentReport<F> rep{window, laurent_system(field)};
  const auto& s = rep.system;
  const int w = static_cast<int>(window);
  const std::size_t n = 2 * window + 1;
  rep.confluence = check_confluence(s, 2 * window + 2);

  std::map<Monomial, std::size_t> index;
  for (int e = -w; e <= w; ++e) {
    index.emplace(laurent_monomial(e), rep.window_basis.size());
    rep.window_basis.push_back(laurent_monomial(e));
  }
  auto mono = [&](int e) { return Polynomial<F>::monomial(field, laurent_monomial(e)); };
  auto one = s.one();
  auto in_b = [](const Monomial& m) { return m[1] == 0; };

  for (int e = -w; e <= w; ++e) {
    if (e == 0) continue;
    BalancingCertificate<F> c{e, mono(e), e < 0 ? mono(e) : one, mono(std::abs(e)), e < 0 ? mono(e) : one, e < 0 ? -1 : 1};
    auto lhs = combine<F>(formal_tensor(c.element, one), formal_tensor(one, c.element), -field.one());
    auto rel = combine<F>(formal_tensor(s.multiply(c.x, c.b), c.y), formal_tensor(c.x, s.multiply(c.b, c.y)), -field.one());
    c.verified = lhs == combine<F>(FormalTensor<F>{}, rel, field.from_int(c.sign));
    for (const auto& [m, co] : c.b.terms()) c.verified = c.verified && in_b(m);
    rep.certificates.push_back(std::move(c));
  }
  for (const auto& c : rep.certificates)
    if (c.exponent == -1) rep.inverse_in_equalizer = c.verified;
  rep.inverse_outside_b = !in_b(laurent_monomial(-1));

  bool inside = true;
  auto coords = [&](const Polynomial<F>& p) { return detail::coordinates_in(field, p, index, inside); };
  auto span_inside = [&](const std::vector<Polynomial<F>>& ps) {
    std::vector<Vector<F>> vs;
    for (const auto& p : ps) {
      auto v = coords(p);
      if (inside) vs.push_back(std::move(v));
    }
    return Subspace<F>::span(field, n, vs);
  };
  auto x_minus_1 = s.parse("X - 1");

  // eps(X) = eps(Y) = 1
  LinMap<F> eps(field, 1, n);
  for (std::size_t i = 0; i < n; ++i) eps(0, i) = field.one();
  const auto hplus = kernel(eps);
  rep.hplus_dim = hplus.dim();

  std::vector<Polynomial<F>> gens;
  for (int e = -w; e < w; ++e) gens.push_back(s.multiply(mono(e), x_minus_1));
  const auto h_xminus1 = span_inside(gens);

  std::vector<Polynomial<F>> bplus_gens;
  for (int e = 1; e <= w; ++e) bplus_gens.push_back(mono(e) - one);
  gens.clear();
  for (int e = -w; e <= w; ++e)
    for (const auto& g : bplus_gens) gens.push_back(s.multiply(mono(e), g));
  const auto hbplus = span_inside(gens);

  gens.clear();
  for (const auto& v : hplus.basis())
    for (int e = -w; e <= w; ++e) gens.push_back(s.multiply(mono(e), detail::from_coordinates(field, 2, v, rep.window_basis)));
  const auto hhplus = span_inside(gens);

  rep.hbplus_equals_h_xminus1 = hbplus == h_xminus1;
  rep.h_xminus1_equals_hplus = h_xminus1 == hplus;
  rep.hplus_equals_hhplus = hplus == hhplus;

  std::vector<Vector<F>> b_vecs;
  for (int e = 0; e <= w; ++e) b_vecs.push_back(coords(mono(e)));
  const auto b_window = Subspace<F>::span(field, n, b_vecs);
  rep.b_window_dim = b_window.dim();
  gens.clear();
  for (int e = 0; e < w; ++e) gens.push_back(s.multiply(mono(e), x_minus_1));
  rep.bplus_equals_b_xminus1 = intersect(b_window, hplus) == span_inside(gens);

  LinMap<F> at_one(field, 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto nf = s.normal_form(Polynomial<F>::monomial(field, rep.window_basis[i]));
    for (const auto& [m, c] : nf.terms()) at_one(0, i) += c;
  }
  rep.evaluation_criterion = h_xminus1 == kernel(at_one);
  rep.xminus1_in_hbplus = hbplus.contains(coords(x_minus_1));
  rep.xplus1_in_hbplus = hbplus.contains(coords(s.parse("X + 1")));

  // I = H^+, so H/I = k through eps and the cotensor square is the whole tensor square.
  std::vector<Vector<F>> diffs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) diffs.push_back(unit_vector(field, n, j) - unit_vector(field, n, i));
  rep.coequalizer_condition = Subspace<F>::span(field, n, diffs) == hplus;

  // coinvariants of H/H^+: f with sum eps(f_1) f_2 = f, monomials grouplike
  std::vector<Vector<F>> defect;
  for (std::size_t i = 0; i < n; ++i) defect.push_back(scaled(eps(0, i), unit_vector(field, n, i)) - unit_vector(field, n, i));
  const auto psi_phi = kernel(LinMap<F>::from_columns(field, n, defect));
  rep.psi_phi_window_dim = psi_phi.dim();
  rep.b_inside_psi_phi = b_window.is_subspace_of(psi_phi);
  rep.containment_witness = laurent_monomial(-1);
  const auto witness = coords(mono(-1));
  rep.strict_containment = rep.b_inside_psi_phi && psi_phi.contains(witness) && !b_window.contains(witness);
  rep.excluded_by_equalizer_filter = rep.inverse_in_equalizer && rep.inverse_outside_b;
  rep.bijection_violation = !rep.excluded_by_equalizer_filter && rep.strict_containment;

  rep.notes = {
      "window exponents range over -w..w; products leaving the window are discarded",
      "X^{-1} is represented by the normal monomial Y",
      "k[X] is strictly contained in the equalizer of H => H (x)_B H, so the equalizer filter rejects it",
  };
  return rep;
}

}  // namespace hopfgal::rewrite
