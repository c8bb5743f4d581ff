#include "catch_amalgamated.hpp"

#include <algorithm>
#include <random>

#include "hopfgal/hopfgal.hpp"

using namespace hopfgal;
using namespace hopfgal::rewrite;

namespace {

RationalField Q;

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational() {
    long den = integer(1, 9);
    return Rational(integer(-20, 20)) / Rational(den);
  }
  Residue residue(const PrimeField& f) { return f.from_int(integer(0, static_cast<long>(f.modulus()) - 1)); }

  template <ExactField F>
  typename F::Element element(const F& f) {
    if constexpr (std::is_same_v<F, RationalField>)
      return coin() ? Rational(0) : rational();
    else
      return residue(f);
  }

  template <ExactField F>
  Vector<F> vector(const F& f, std::size_t n) {
    Vector<F> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(element(f));
    return v;
  }

  template <ExactField F>
  LinMap<F> matrix(const F& f, std::size_t rows, std::size_t cols) {
    std::vector<Vector<F>> cs;
    for (std::size_t j = 0; j < cols; ++j) cs.push_back(vector(f, rows));
    return LinMap<F>::from_columns(f, rows, cs);
  }

  template <ExactField F>
  Subspace<F> subspace(const F& f, std::size_t n) {
    std::vector<Vector<F>> vs;
    auto k = integer(0, static_cast<long>(n));
    for (long i = 0; i < k; ++i) vs.push_back(vector(f, n));
    return Subspace<F>::span(f, n, vs);
  }

  template <ExactField F>
  Polynomial<F> polynomial(const ReductionSystem<F>& s, std::uint32_t max_degree, int terms) {
    auto p = s.zero();
    for (int t = 0; t < terms; ++t) {
      Monomial m(s.nvars(), 0);
      auto d = integer(0, max_degree);
      for (long i = 0; i < d; ++i) ++m[integer(0, static_cast<long>(s.nvars()) - 1)];
      auto c = element(s.field());
      if (!c.is_zero()) p += Polynomial<F>::monomial(s.field(), m, c);
    }
    return p;
  }
};

constexpr int kCases = 100;

}  // namespace

TEST_CASE("property: field axioms over Q and GF(p)") {
  Gen g(11);
  auto axioms = [&](const auto& f) {
    for (int i = 0; i < kCases; ++i) {
      auto a = g.element(f), b = g.element(f), c = g.element(f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a - a == f.zero());
      CHECK(a * f.one() == a);
      if (!a.is_zero()) CHECK(a * a.inverse() == f.one());
      CHECK(f.parse(f.format(a)) == a);
    }
  };
  axioms(Q);
  axioms(PrimeField(2));
  axioms(PrimeField(7));
  axioms(PrimeField(2147483647));
}

TEST_CASE("property: rank of a matrix equals rank of its transpose") {
  Gen g(12);
  for (int i = 0; i < kCases; ++i) {
    auto r = static_cast<std::size_t>(g.integer(1, 6)), c = static_cast<std::size_t>(g.integer(1, 6));
    auto m = g.matrix(Q, r, c);
    CHECK(rank(m) == rank(m.transpose()));
    CHECK(kernel(m).dim() + image(m).dim() == c);
    auto p = g.matrix(PrimeField(3), r, c);
    CHECK(rank(p) == rank(p.transpose()));
    auto ker = kernel(p);
    for (const auto& v : ker.basis()) CHECK(all_zero(p.apply(v)));
  }
}

TEST_CASE("property: dimension formula for sum and intersection") {
  Gen g(13);
  for (int i = 0; i < kCases; ++i) {
    auto n = static_cast<std::size_t>(g.integer(1, 6));
    auto u = g.subspace(Q, n), w = g.subspace(Q, n);
    auto meet = intersect(u, w);
    CHECK((u + w).dim() + meet.dim() == u.dim() + w.dim());
    CHECK(meet.is_subspace_of(u));
    CHECK(meet.is_subspace_of(w));
    CHECK(u.annihilator().dim() == n - u.dim());
  }
}

TEST_CASE("property: canonical form ignores the spanning set") {
  Gen g(14);
  PrimeField f(5);
  for (int i = 0; i < kCases; ++i) {
    auto n = static_cast<std::size_t>(g.integer(1, 5));
    std::vector<Vector<PrimeField>> vs;
    for (long k = g.integer(0, 4); k > 0; --k) vs.push_back(g.vector(f, n));
    auto s = Subspace<PrimeField>::span(f, n, vs);
    auto shuffled = vs;
    std::shuffle(shuffled.begin(), shuffled.end(), g.rng);
    if (!shuffled.empty()) shuffled.push_back(shuffled[0] + shuffled.back());
    auto t = Subspace<PrimeField>::span(f, n, shuffled);
    CHECK(s == t);
    CHECK(s.key() == t.key());
  }
}

TEST_CASE("property: quotient identities") {
  Gen g(15);
  for (int i = 0; i < kCases; ++i) {
    auto n = static_cast<std::size_t>(g.integer(1, 6));
    auto killed = g.subspace(Q, n);
    QuotientSpace<RationalField> q(killed);
    CHECK(q.dim() == n - killed.dim());
    CHECK(q.projection() * q.section() == LinMap<RationalField>::identity(Q, q.dim()));
    CHECK(kernel(q.projection()) == killed);
    auto v = g.vector(Q, n);
    CHECK(killed.contains(q.lift(q.project(v)) - v));
  }
}

TEST_CASE("property: normal forms are linear, idempotent and terminate by descent") {
  Gen g(16);
  auto h = sl2_system(Q);
  auto k = sl2_pair_system(Q);
  for (const auto* s : {&h, &k}) {
    for (int i = 0; i < kCases; ++i) {
      auto p = g.polynomial(*s, 5, 4), q = g.polynomial(*s, 5, 4);
      auto a = g.rational();
      auto np = s->normal_form(p), nq = s->normal_form(q);
      CHECK(s->normal_form(p.scaled(a) + q) == np.scaled(a) + nq);
      CHECK(s->normal_form(np) == np);
      CHECK(s->is_normal(np));
      std::size_t steps = 0;
      bool descending = true;
      s->normal_form(p, [&](const Monomial& replaced, std::size_t, const Polynomial<RationalField>& replacement) {
        ++steps;
        for (const auto& [m, c] : replacement.terms())
          if (!lex_less(m, replaced)) descending = false;
      });
      CHECK(descending);
      CHECK(steps < 100000);
    }
  }
}

TEST_CASE("property: presented multiplication is associative") {
  Gen g(17);
  auto k = sl2_pair_system(Q);
  for (int i = 0; i < kCases / 2; ++i) {
    auto p = k.normal_form(g.polynomial(k, 2, 2)), q = k.normal_form(g.polynomial(k, 2, 2)), r = k.normal_form(g.polynomial(k, 2, 2));
    CHECK(k.multiply(k.multiply(p, q), r) == k.multiply(p, k.multiply(q, r)));
  }
}

TEST_CASE("property: polynomials survive format and parse") {
  Gen g(18);
  auto k = sl2_pair_system(Q);
  ReductionSystem<PrimeField> multi(PrimeField(7), {"x", "x1", "y"});
  for (int i = 0; i < kCases; ++i) {
    auto p = g.polynomial(k, 4, 5);
    CHECK(k.parse(k.format(p)) == p);
    auto m = g.polynomial(multi, 4, 5);
    CHECK(multi.parse(multi.format(m)) == m);
  }
}

TEST_CASE("property: inclusions over the ground field are pure") {
  Gen g(19);
  PrimeField f(3);
  auto b = fixtures::cyclic_group_algebra(f, 4);
  for (int i = 0; i < kCases; ++i) {
    auto s = g.subspace(f, 4);
    for (auto side : {Side::left, Side::right})
      for (auto tensorand : {Side::left, Side::right}) CHECK(purity_check(b, s, side, tensorand));
  }
}

TEST_CASE("property: gamma' implies the translation-map condition") {
  PrimeField f(3);
  for (auto b : {fixtures::cyclic_group_algebra(f, 4), fixtures::sweedler(f), fixtures::pair_groupoid(f), fixtures::enveloping_split(f)}) {
    HopfData<PrimeField> h(b);
    std::vector<Subspace<PrimeField>> ideals, subrings;
    enumerate_lattices(h.bialgebroid(), ideals, subrings);
    for (const auto& s : subrings)
      if (gamma_prime_exists(h, s)) CHECK(check_bbeta_condition(h, s));
  }
}

TEST_CASE("property: Galois connection laws on random sublattices") {
  Gen g(20);
  PrimeField f(3);
  HopfData<PrimeField> h(fixtures::sweedler(f));
  std::vector<Subspace<PrimeField>> ideals, subrings;
  enumerate_lattices(h.bialgebroid(), ideals, subrings);
  for (int i = 0; i < 20; ++i) {
    std::vector<Subspace<PrimeField>> is, ss;
    for (const auto& x : ideals)
      if (g.coin()) is.push_back(x);
    for (const auto& x : subrings)
      if (g.coin()) ss.push_back(x);
    auto rep = check_connection(h, is, ss);
    CHECK(rep.ok());
    for (const auto& e : rep.ideals) CHECK(e.phi_psi->is_subspace_of(e.ideal));
    for (const auto& e : rep.subrings) CHECK(e.subring.is_subspace_of(*e.psi_phi));
  }
}
