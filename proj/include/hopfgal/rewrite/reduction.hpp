#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hopfgal/rewrite/polynomial.hpp"

namespace hopfgal::rewrite {

template <ExactField F>
struct Rule {
  Monomial lhs;
  Polynomial<F> rhs;
};

/// Rewriting rules lhs -> rhs on commutative monomials, ordered lexicographically
/// with the first declared variable most significant.
template <ExactField F>
class ReductionSystem {
 public:
  ReductionSystem(F field, std::vector<std::string> variables, std::vector<Rule<F>> rules = {})
      : field_(std::move(field)), variables_(std::move(variables)) {
    std::set<std::string> seen;
    for (const auto& v : variables_) {
      if (v.empty()) throw InvalidArgument("empty variable name");
      if (!seen.insert(v).second) throw InvalidArgument("duplicate variable " + v);
    }
    for (auto& r : rules) add_rule(std::move(r.lhs), std::move(r.rhs));
  }

  /// Rejects rules whose rhs is not strictly below the lhs, and duplicate lhs.
  void add_rule(Monomial lhs, Polynomial<F> rhs) {
    if (lhs.size() != variables_.size() || rhs.nvars() != variables_.size())
      throw DimensionMismatch("rule in the wrong number of variables");
    if (degree(lhs) == 0) throw InvalidArgument("rule with constant left-hand side");
    for (const auto& [m, c] : rhs.terms())
      if (!lex_less(m, lhs))
        throw InvalidArgument("rule " + format_monomial(lhs, variables_) + " -> " + rhs.format(variables_) + " does not decrease the order");
    for (const auto& r : rules_)
      if (r.lhs == lhs) throw InvalidArgument("two rules share the left-hand side " + format_monomial(lhs, variables_));
    rules_.push_back({std::move(lhs), std::move(rhs)});
  }

  void add_rule(std::string_view lhs, std::string_view rhs) {
    auto l = parse_polynomial(field_, variables_, lhs);
    if (l.size() != 1 || !(l.terms().begin()->second == field_.one()))
      throw ParseError("left-hand side '" + std::string(lhs) + "' is not a monic monomial");
    add_rule(l.terms().begin()->first, parse_polynomial(field_, variables_, rhs));
  }

  const F& field() const { return field_; }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<Rule<F>>& rules() const { return rules_; }
  std::size_t nvars() const { return variables_.size(); }

  Polynomial<F> zero() const { return Polynomial<F>(field_, nvars()); }
  Polynomial<F> one() const { return Polynomial<F>::constant(field_, nvars(), field_.one()); }
  Polynomial<F> variable(std::size_t i) const {
    Monomial m(nvars(), 0);
    m.at(i) = 1;
    return Polynomial<F>::monomial(field_, std::move(m));
  }
  Polynomial<F> parse(std::string_view text) const { return parse_polynomial(field_, variables_, text); }
  std::string format(const Polynomial<F>& p) const { return p.format(variables_); }
  std::string format(const Monomial& m) const { return format_monomial(m, variables_); }

  /// Index of the first rule whose lhs divides m.
  std::optional<std::size_t> matching_rule(const Monomial& m) const {
    for (std::size_t r = 0; r < rules_.size(); ++r)
      if (divides(rules_[r].lhs, m)) return r;
    return std::nullopt;
  }

  bool is_irreducible(const Monomial& m) const { return !matching_rule(m); }

  /// Replaces the term c*m of p by c*(m/lhs)*rhs for the given rule.
  Polynomial<F> reduce_once(const Polynomial<F>& p, const Monomial& m, std::size_t rule) const {
    const auto& r = rules_.at(rule);
    if (!divides(r.lhs, m)) throw InvalidArgument("rule does not apply to " + format(m));
    auto c = p.coefficient(m);
    auto out = p;
    out.add_term(m, -c);
    out += r.rhs.times_monomial(cofactor(r.lhs, m)).scaled(c);
    return out;
  }

  using StepObserver = std::function<void(const Monomial& replaced, std::size_t rule, const Polynomial<F>& replacement)>;

  /// Reduces the largest reducible term until none remains.
  Polynomial<F> normal_form(Polynomial<F> p, const StepObserver& observe = {}) const {
    while (true) {
      std::optional<std::pair<Monomial, std::size_t>> step;
      for (const auto& [m, c] : p.terms())
        if (auto r = matching_rule(m)) {
          step.emplace(m, *r);
          break;
        }
      if (!step) return p;
      if (observe) observe(step->first, step->second, rules_[step->second].rhs.times_monomial(cofactor(rules_[step->second].lhs, step->first)));
      p = reduce_once(p, step->first, step->second);
    }
  }

  Polynomial<F> normal_form(const Monomial& m) const { return normal_form(Polynomial<F>::monomial(field_, m)); }

  bool is_normal(const Polynomial<F>& p) const {
    for (const auto& [m, c] : p.terms())
      if (!is_irreducible(m)) return false;
    return true;
  }

  Polynomial<F> multiply(const Polynomial<F>& p, const Polynomial<F>& q) const { return normal_form(p * q); }

 private:
  F field_;
  std::vector<std::string> variables_;
  std::vector<Rule<F>> rules_;
};

/// The algebra presented by a reduction system, with irreducible monomials as basis.
template <ExactField F>
class PresentedAlgebra {
 public:
  explicit PresentedAlgebra(ReductionSystem<F> system) : system_(std::move(system)) {}

  const ReductionSystem<F>& system() const { return system_; }
  const F& field() const { return system_.field(); }
  bool is_normal_monomial(const Monomial& m) const { return system_.is_irreducible(m); }
  Polynomial<F> normal_form(const Polynomial<F>& p) const { return system_.normal_form(p); }
  Polynomial<F> multiply(const Polynomial<F>& p, const Polynomial<F>& q) const { return system_.multiply(p, q); }

  /// Irreducible monomials of total degree at most d, in increasing order.
  std::vector<Monomial> normal_monomials(std::uint32_t d) const {
    std::vector<Monomial> out;
    for (auto& m : monomials_up_to(system_.nvars(), d))
      if (is_normal_monomial(m)) out.push_back(std::move(m));
    return out;
  }

 private:
  ReductionSystem<F> system_;
};

template <ExactField F>
struct Ambiguity {
  Monomial monomial;
  std::size_t first_rule = 0;
  std::size_t second_rule = 0;
  Polynomial<F> first_normal_form;
  Polynomial<F> second_normal_form;
  bool resolved() const { return first_normal_form == second_normal_form; }
};

template <ExactField F>
struct ConfluenceReport {
  std::uint32_t degree_bound = 0;
  /// Overlap and inclusion ambiguities: lcm of every pair of non-coprime left-hand sides.
  std::vector<Ambiguity<F>> ambiguities;
  std::size_t monomials_checked = 0;
  /// Monomials up to the degree bound where two one-step reductions reach different normal forms.
  std::vector<Ambiguity<F>> exhaustive_failures;

  bool confluent() const {
    for (const auto& a : ambiguities)
      if (!a.resolved()) return false;
    return exhaustive_failures.empty();
  }
};

namespace detail {

template <ExactField F>
Ambiguity<F> branch(const ReductionSystem<F>& s, const Monomial& m, std::size_t i, std::size_t j) {
  auto p = Polynomial<F>::monomial(s.field(), m);
  return {m, i, j, s.normal_form(s.reduce_once(p, m, i)), s.normal_form(s.reduce_once(p, m, j))};
}

}  // namespace detail

template <ExactField F>
ConfluenceReport<F> check_confluence(const ReductionSystem<F>& s, std::uint32_t degree_bound) {
  ConfluenceReport<F> rep;
  rep.degree_bound = degree_bound;
  const auto& rules = s.rules();
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = i + 1; j < rules.size(); ++j)
      if (!coprime(rules[i].lhs, rules[j].lhs)) rep.ambiguities.push_back(detail::branch(s, lcm(rules[i].lhs, rules[j].lhs), i, j));
  for (const auto& m : monomials_up_to(s.nvars(), degree_bound)) {
    ++rep.monomials_checked;
    std::vector<std::size_t> applicable;
    for (std::size_t r = 0; r < rules.size(); ++r)
      if (divides(rules[r].lhs, m)) applicable.push_back(r);
    for (std::size_t k = 1; k < applicable.size(); ++k) {
      auto a = detail::branch(s, m, applicable[0], applicable[k]);
      if (!a.resolved()) rep.exhaustive_failures.push_back(std::move(a));
    }
  }
  return rep;
}

template <ExactField F>
ConfluenceReport<F> check_confluence(const PresentedAlgebra<F>& a, std::uint32_t degree_bound) {
  return check_confluence(a.system(), degree_bound);
}

}  // namespace hopfgal::rewrite
