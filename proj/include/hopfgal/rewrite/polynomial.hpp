#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hopfgal/errors.hpp"
#include "hopfgal/exactla/field.hpp"

namespace hopfgal::rewrite {

/// Exponent vector of a commutative monomial.
using Monomial = std::vector<std::uint32_t>;

inline std::uint32_t degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (auto e : m) d += e;
  return d;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial operator*(Monomial a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

/// b / a, assuming a divides b.
inline Monomial cofactor(const Monomial& a, Monomial b) {
  for (std::size_t i = 0; i < a.size(); ++i) b[i] -= a[i];
  return b;
}

inline Monomial lcm(Monomial a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::max(a[i], b[i]);
  return a;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

/// Lexicographic order with variable 0 most significant: std::greater on exponent vectors.
inline bool lex_less(const Monomial& a, const Monomial& b) { return a < b; }

/// Every monomial in `nvars` variables of total degree at most `max_degree`, in increasing lex order.
inline std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint32_t max_degree) {
  std::vector<Monomial> out;
  Monomial m(nvars, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i == nvars) {
      out.push_back(m);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      m[i] = e;
      rec(i + 1, left - e);
    }
    m[i] = 0;
  };
  rec(0, max_degree);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string format_monomial(const Monomial& m, const std::vector<std::string>& vars) {
  bool single = true;
  for (const auto& v : vars) single = single && v.size() == 1;
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty() && !single) s += "*";
    s += vars[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

/// A polynomial in commuting variables, terms kept in decreasing lex order.
template <ExactField F>
class Polynomial {
 public:
  using Element = typename F::Element;
  using Terms = std::map<Monomial, Element, std::greater<Monomial>>;

  Polynomial(F field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

  static Polynomial constant(const F& field, std::size_t nvars, Element c) {
    Polynomial p(field, nvars);
    p.add_term(Monomial(nvars, 0), std::move(c));
    return p;
  }

  static Polynomial monomial(const F& field, Monomial m, Element c) {
    Polynomial p(field, m.size());
    p.add_term(std::move(m), std::move(c));
    return p;
  }

  static Polynomial monomial(const F& field, Monomial m) {
    auto one = field.one();
    return monomial(field, std::move(m), one);
  }

  const F& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, rewrite::degree(m));
    return d;
  }

  Element coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  void add_term(Monomial m, Element c) {
    if (m.size() != nvars_) throw DimensionMismatch("monomial in the wrong number of variables");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial p(field_, nvars_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
  }

  Polynomial scaled(const Element& s) const {
    Polynomial p(field_, nvars_);
    for (const auto& [m, c] : terms_) p.add_term(m, c * s);
    return p;
  }

  Polynomial times_monomial(const Monomial& u) const {
    Polynomial p(field_, nvars_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m * u, c);
    return p;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    Polynomial p(a.field_, a.nvars_);
    for (const auto& [m, c] : a.terms_)
      for (const auto& [n, d] : b.terms_) p.add_term(m * n, c * d);
    return p;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  std::string format(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      auto cs = field_.format(c);
      bool negative = !cs.empty() && cs[0] == '-';
      if (negative) cs = cs.substr(1);
      if (s.empty())
        s += negative ? "-" : "";
      else
        s += negative ? " - " : " + ";
      bool unit_monomial = rewrite::degree(m) == 0;
      if (cs != "1" || unit_monomial) {
        s += cs;
        if (!unit_monomial) s += "*";
      }
      if (!unit_monomial) s += format_monomial(m, vars);
    }
    return s;
  }

 private:
  void check(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw DimensionMismatch("polynomials in different numbers of variables");
  }

  F field_;
  std::size_t nvars_;
  Terms terms_;
};

/// Parses sums of terms such as "tvw + v - z", "2*s^2 t", "-1/2 x*y".
/// Variables are matched greedily against the declared names.
template <ExactField F>
Polynomial<F> parse_polynomial(const F& field, const std::vector<std::string>& vars, std::string_view text) {
  Polynomial<F> p(field, vars.size());
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) { throw ParseError("polynomial '" + std::string(text) + "': " + why); };
  auto number = [&] {
    std::size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
    return text.substr(start, i - start);
  };
  skip();
  if (i == text.size()) fail("empty");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
      negative = text[i] == '-';
      ++i;
      skip();
    } else if (!first) {
      fail("expected + or - at position " + std::to_string(i));
    }
    first = false;
    auto coeff = field.one();
    bool seen_factor = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = field.parse(std::string(number()));
      seen_factor = true;
    }
    Monomial m(vars.size(), 0);
    while (true) {
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
      if (i == text.size() || text[i] == '+' || text[i] == '-') break;
      std::size_t best = vars.size(), best_len = 0;
      for (std::size_t v = 0; v < vars.size(); ++v)
        if (vars[v].size() > best_len && text.substr(i, vars[v].size()) == vars[v]) {
          best = v;
          best_len = vars[v].size();
        }
      if (best == vars.size()) fail("unknown symbol at position " + std::to_string(i));
      i += best_len;
      std::uint32_t e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        auto digits = number();
        if (digits.empty() || digits.find('/') != std::string_view::npos) fail("bad exponent");
        e = static_cast<std::uint32_t>(std::stoul(std::string(digits)));
      }
      m[best] += e;
      seen_factor = true;
    }
    if (!seen_factor) fail("dangling sign");
    p.add_term(std::move(m), negative ? -coeff : coeff);
  }
  return p;
}

}  // namespace hopfgal::rewrite
