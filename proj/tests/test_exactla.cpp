#include "catch_amalgamated.hpp"

#include "hopfgal/exactla/enumerate.hpp"

using namespace hopfgal;

namespace {

RationalField Q;

Vector<RationalField> qv(std::initializer_list<long> xs) {
  Vector<RationalField> v;
  for (auto x : xs) v.push_back(Rational(x));
  return v;
}

// number of k-dimensional subspaces of GF(p)^n
std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    std::uint64_t a = 1, b = 1;
    for (std::uint64_t j = 0; j < n - i; ++j) a *= p;
    for (std::uint64_t j = 0; j < i + 1; ++j) b *= p;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

}  // namespace

TEST_CASE("rationals stay in lowest terms") {
  auto a = Rational::parse("6/-4");
  CHECK(a.str() == "-3/2");
  CHECK(a.denominator() > 0);
  CHECK((Rational::parse("1/3") + Rational::parse("1/6")).str() == "1/2");
  CHECK((Rational::parse("2/3") * Rational::parse("3/2")) == Rational(1));
  CHECK(Rational::parse("-5/7").inverse().str() == "-7/5");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS(Rational(0).inverse());
}

TEST_CASE("residues reduce into [0, p)") {
  PrimeField f(7);
  CHECK(f.parse("-1").value() == 6);
  CHECK(f.parse("1/3").value() == 5);
  CHECK((f.from_int(-15)).value() == 6);
  CHECK((Residue(3, 7) * Residue(5, 7)).value() == 1);
  CHECK(Residue(3, 7).inverse() == Residue(5, 7));
  CHECK_THROWS_AS(f.parse("1/7"), ParseError);
  CHECK_THROWS_AS(PrimeField(8), InvalidArgument);
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("linear maps compose and apply by columns") {
  auto a = LinMap<RationalField>::from_columns(Q, 2, {qv({1, 2}), qv({3, 4})});
  CHECK(a(0, 1) == Rational(3));
  CHECK(a.apply(qv({1, 1})) == qv({4, 6}));
  auto id = LinMap<RationalField>::identity(Q, 2);
  CHECK(a * id == a);
  CHECK(a.transpose().transpose() == a);
  CHECK(a.transpose()(0, 1) == Rational(2));
  auto k = kron(a, id);
  CHECK(k.codomain_dim() == 4);
  CHECK(k.apply(tensor(qv({1, 0}), qv({0, 1}))) == tensor(qv({1, 2}), qv({0, 1})));
  CHECK_THROWS_AS(a * LinMap<RationalField>::identity(Q, 3), DimensionMismatch);
}

TEST_CASE("rref and rank") {
  auto m = LinMap<RationalField>::from_rows(Q, 3, {qv({2, 4, 6}), qv({1, 2, 4}), qv({3, 6, 10})});
  auto r = rref(m);
  CHECK(r.row(0) == qv({1, 2, 0}));
  CHECK(r.row(1) == qv({0, 0, 1}));
  CHECK(all_zero(r.row(2)));
  CHECK(rank(m) == 2);
}

TEST_CASE("kernel, image, intersection and sum") {
  auto m = LinMap<RationalField>::from_rows(Q, 3, {qv({1, 1, 0}), qv({0, 1, 1})});
  auto ker = kernel(m);
  REQUIRE(ker.dim() == 1);
  CHECK(ker.contains(qv({1, -1, 1})));
  CHECK(image(m) == Subspace<RationalField>::full(Q, 2));

  auto u = Subspace<RationalField>::span(Q, 3, {qv({1, 0, 0}), qv({0, 1, 0})});
  auto w = Subspace<RationalField>::span(Q, 3, {qv({0, 1, 0}), qv({0, 0, 1})});
  CHECK(intersect(u, w) == Subspace<RationalField>::span(Q, 3, {qv({0, 1, 0})}));
  CHECK((u + w).dim() == 3);
  CHECK(u.annihilator() == Subspace<RationalField>::span(Q, 3, {qv({0, 0, 1})}));
  CHECK(u.coordinates(qv({2, 3, 0})) == qv({2, 3}));
}

TEST_CASE("subspace representation is canonical") {
  auto a = Subspace<RationalField>::span(Q, 3, {qv({1, 1, 0}), qv({1, -1, 0})});
  auto b = Subspace<RationalField>::span(Q, 3, {qv({0, 5, 0}), qv({3, 0, 0}), qv({1, 1, 0})});
  CHECK(a == b);
  CHECK(a.key() == b.key());
  CHECK(a.basis()[0] == qv({1, 0, 0}));
}

TEST_CASE("solve and inverse") {
  auto m = LinMap<RationalField>::from_rows(Q, 2, {qv({2, 1}), qv({1, 1})});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == LinMap<RationalField>::identity(Q, 2));
  auto x = solve(m, qv({3, 2}));
  REQUIRE(x);
  CHECK(*x == qv({1, 1}));
  auto singular = LinMap<RationalField>::from_rows(Q, 2, {qv({1, 2}), qv({2, 4})});
  CHECK_FALSE(inverse(singular));
  CHECK_FALSE(solve(singular, qv({1, 0})));
}

TEST_CASE("quotients: projection after section is the identity") {
  auto killed = Subspace<RationalField>::span(Q, 4, {qv({1, -1, 0, 0}), qv({0, 0, 1, 1})});
  QuotientSpace<RationalField> q(killed);
  CHECK(q.dim() == 2);
  CHECK(q.projection() * q.section() == LinMap<RationalField>::identity(Q, 2));
  CHECK(kernel(q.projection()) == killed);
  CHECK(q.project(qv({1, 0, 0, 0})) == q.project(qv({0, 1, 0, 0})));
}

TEST_CASE("equalizer and coequalizer of a parallel pair") {
  auto f = LinMap<RationalField>::from_rows(Q, 2, {qv({1, 0}), qv({0, 1})});
  auto g = LinMap<RationalField>::from_rows(Q, 2, {qv({1, 0}), qv({0, 2})});
  auto eq = equalizer(f, g);
  CHECK(eq == Subspace<RationalField>::span(Q, 2, {qv({1, 0})}));
  auto co = coequalizer(f, g);
  CHECK(co.dim() == 1);
  CHECK(co.project(f.column(1)) == co.project(g.column(1)));
}

TEST_CASE("descend refuses maps that do not kill the relations") {
  QuotientSpace<RationalField> from(Subspace<RationalField>::span(Q, 2, {qv({1, -1})}));
  QuotientSpace<RationalField> to(Subspace<RationalField>::zero(Q, 2));
  auto swap = LinMap<RationalField>::from_rows(Q, 2, {qv({0, 1}), qv({1, 0})});
  CHECK_THROWS_AS(descend(from, LinMap<RationalField>::identity(Q, 2), to, "identity"), IllDefined);
  QuotientSpace<RationalField> sym(Subspace<RationalField>::span(Q, 2, {qv({1, -1})}));
  CHECK(descend(from, swap, sym, "swap").domain_dim() == 1);
}

TEST_CASE("subspace enumeration counts match Gaussian binomials") {
  auto total = [](std::uint64_t n, std::uint64_t p) {
    std::uint64_t s = 0;
    for (std::uint64_t k = 0; k <= n; ++k) s += gaussian_binomial(n, k, p);
    return s;
  };
  CHECK(enumerate_subspaces(1, 2).size() == 2);
  CHECK(enumerate_subspaces(2, 2).size() == 5);
  CHECK(enumerate_subspaces(4, 3).size() == 212);
  CHECK(total(4, 3) == 212);
  CHECK(enumerate_subspaces(4, 5).size() == total(4, 5));
  CHECK(enumerate_subspaces(3, 7).size() == total(3, 7));
}

TEST_CASE("enumeration yields distinct canonical subspaces") {
  auto all = enumerate_subspaces(4, 2);
  std::set<std::string> keys;
  for (const auto& s : all) {
    keys.insert(s.key());
    CHECK(Subspace<PrimeField>::span(PrimeField(2), 4, s.basis()) == s);
  }
  CHECK(keys.size() == all.size());
}

TEST_CASE("enumeration respects the cap") {
  CHECK_THROWS_AS(enumerate_subspaces(4, 3, 80), CapExceeded);
  CHECK_NOTHROW(enumerate_subspaces(4, 3, 81));
}
