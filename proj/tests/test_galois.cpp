#include "catch_amalgamated.hpp"

#include <algorithm>
#include <array>

#include "hopfgal/fixtures.hpp"
#include "hopfgal/galois/galois.hpp"

using namespace hopfgal;

namespace {

RationalField Q;

template <ExactField F>
Subspace<F> span(const F& f, std::size_t n, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector<F>> vs;
  for (auto r : rows) {
    Vector<F> v;
    for (auto x : r) v.push_back(f.from_int(x));
    vs.push_back(std::move(v));
  }
  return Subspace<F>::span(f, n, vs);
}

using Table = std::vector<std::vector<std::size_t>>;

// brute force over all subsets containing the identity
std::size_t count_subgroups(const Table& t) {
  const auto n = t.size();
  std::size_t count = 0;
  for (std::uint64_t mask = 1; mask < (1ull << n); mask += 2) {
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i)
      for (std::size_t j = 0; j < n && closed; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && !(mask >> t[i][j] & 1)) closed = false;
    count += closed;
  }
  return count;
}

Table s3_table() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  Table t(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      t[i][j] = std::find(perms.begin(), perms.end(), c) - perms.begin();
    }
  return t;
}

Table klein_table() {
  Table t(4, std::vector<std::size_t>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return t;
}

Table cyclic_table(std::size_t n) {
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

}  // namespace

TEST_CASE("Phi and Psi on the lattice of kC4") {
  auto b = fixtures::cyclic_group_algebra(Q, 4);
  auto g2 = span(Q, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}});
  auto i2 = span(Q, 4, {{-1, 0, 1, 0}, {0, -1, 0, 1}});
  auto k1 = span(Q, 4, {{1, 0, 0, 0}});
  auto zero = Subspace<RationalField>::zero(Q, 4);
  CHECK(phi(b, g2) == i2);
  CHECK(psi(b, i2) == g2);
  CHECK(phi(b, k1) == zero);
  CHECK(psi(b, zero) == k1);
  CHECK(phi(b, b.whole()) == b.augmentation_ideal());
  CHECK(psi(b, b.augmentation_ideal()) == b.whole());
}

TEST_CASE("Phi and Psi reject objects of the wrong kind") {
  auto b = fixtures::cyclic_group_algebra(Q, 4);
  CHECK_THROWS_AS(phi(b, span(Q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}})), InvalidSubring);
  CHECK_THROWS_AS(psi(b, span(Q, 4, {{1, 0, 0, 0}})), InvalidIdealCoideal);
  CHECK_THROWS_AS(psi(b, span(Q, 4, {{-1, 1, 0, 0}})), InvalidIdealCoideal);
}

TEST_CASE("cotensor squares of kC4") {
  auto b = fixtures::cyclic_group_algebra(Q, 4);
  CHECK(cotensor_square(b, b.augmentation_ideal()).subspace.dim() == 16);
  CHECK(cotensor_square(b, Subspace<RationalField>::zero(Q, 4)).subspace.dim() == 4);
  // g (x) h lies in the cotensor over k[C4/C2] iff g and h share a coset
  std::size_t same_coset = 0;
  for (std::size_t g = 0; g < 4; ++g)
    for (std::size_t h = 0; h < 4; ++h) same_coset += g % 2 == h % 2;
  CHECK(cotensor_square(b, span(Q, 4, {{-1, 0, 1, 0}, {0, -1, 0, 1}})).subspace.dim() == same_coset);
}

TEST_CASE("equalizer and coequalizer conditions") {
  auto b = fixtures::cyclic_group_algebra(Q, 4);
  auto g2 = span(Q, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}});
  CHECK(check_equalizer_condition(b, g2));
  CHECK(check_equalizer_condition(b, b.whole()));
  CHECK(check_equalizer_condition(b, span(Q, 4, {{1, 0, 0, 0}})));
  CHECK(check_coequalizer_condition(b, span(Q, 4, {{-1, 0, 1, 0}, {0, -1, 0, 1}})));
  CHECK(check_coequalizer_condition(b, b.augmentation_ideal()));
  CHECK(equalizer_persistence(b, phi(b, g2), g2));
}

TEST_CASE("zeta is an isomorphism for kC4 over k[g^2]") {
  HopfData<RationalField> h(fixtures::cyclic_group_algebra(Q, 4));
  auto z = build_zeta(h, span(Q, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}}));
  CHECK(z.domain.dim() == 8);
  CHECK(z.cotensor.subspace.dim() == 8);
  CHECK(z.iso_expected);
  CHECK(z.injective);
  CHECK(z.surjective);

  HopfData<RationalField> c2(fixtures::cyclic_group_algebra(Q, 2));
  auto whole = build_zeta(c2, c2.bialgebroid().whole());
  CHECK(whole.rank == 4);
}

TEST_CASE("xi is bijective under the translation-map condition") {
  HopfData<RationalField> c4(fixtures::cyclic_group_algebra(Q, 4));
  auto x = build_xi(c4, span(Q, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}}));
  CHECK(x.domain_dim == 8);
  CHECK(x.codomain_dim == 8);
  CHECK(x.bbeta);
  CHECK(x.bijective());

  HopfData<RationalField> sw(fixtures::sweedler(Q));
  auto y = build_xi(sw, span(Q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(y.rank == 8);
  CHECK(y.bijective());
}

TEST_CASE("connection laws on hand-picked objects") {
  HopfData<RationalField> h(fixtures::cyclic_group_algebra(Q, 4));
  auto i2 = span(Q, 4, {{-1, 0, 1, 0}, {0, -1, 0, 1}});
  auto g2 = span(Q, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}});
  const auto& b = h.bialgebroid();
  auto rep = check_connection(h, {Subspace<RationalField>::zero(Q, 4), i2, b.augmentation_ideal(), i2},
                              {span(Q, 4, {{1, 0, 0, 0}}), g2, b.whole()});
  CHECK(rep.ok());
  CHECK(rep.ideals.size() == 3);
  CHECK(rep.nested_ideal_pairs == 3);
  CHECK(rep.nested_subring_pairs == 3);
}

TEST_CASE("invalid inputs are reported, not admitted") {
  HopfData<RationalField> h(fixtures::cyclic_group_algebra(Q, 4));
  auto rep = verify_bijection(h, {span(Q, 4, {{1, 0, 0, 0}})}, {span(Q, 4, {{0, 1, 0, 0}})});
  CHECK_FALSE(rep.inputs_valid());
  CHECK(rep.admitted_ideals == 0);
  CHECK(rep.admitted_subrings == 0);
}

TEST_CASE("kC2 over the rationals: a two-element bijection") {
  HopfData<RationalField> h(fixtures::cyclic_group_algebra(Q, 2));
  const auto& b = h.bialgebroid();
  auto rep = verify_bijection(h, {Subspace<RationalField>::zero(Q, 2), b.augmentation_ideal()}, {span(Q, 2, {{1, 0}}), b.whole()});
  check_comparison_maps(h, rep);
  CHECK(rep.ok());
  CHECK(rep.bijection());
  CHECK(rep.admitted_ideals == 2);
  CHECK(rep.admitted_subrings == 2);
  for (const auto& e : rep.subrings) {
    CHECK(e.zeta_corestricts);
    CHECK(e.xi_bijective);
  }
}

TEST_CASE("enumerated lattices of group algebras match subgroup counts") {
  auto check_group = [](const Table& t, std::uint32_t p) {
    PrimeField f(p);
    HopfData<PrimeField> h(fixtures::group_algebra(f, t));
    std::vector<Subspace<PrimeField>> ideals, subrings;
    auto counts = enumerate_lattices(h.bialgebroid(), ideals, subrings);
    const auto expected = count_subgroups(t);
    CHECK(counts.ideals == expected);
    CHECK(counts.subrings == expected);
    auto rep = verify_bijection(h, ideals, subrings);
    check_comparison_maps(h, rep);
    CHECK(rep.ok());
    CHECK(rep.admitted_ideals == expected);
    CHECK(rep.admitted_subrings == expected);
  };
  check_group(cyclic_table(4), 3);
  check_group(cyclic_table(4), 2);
  check_group(klein_table(), 2);
  check_group(klein_table(), 3);
  check_group(s3_table(), 2);
}

TEST_CASE("enumerated lattices over a nontrivial base") {
  PrimeField f(3);
  for (auto b : {fixtures::pair_groupoid(f), fixtures::enveloping_split(f)}) {
    HopfData<PrimeField> h(b);
    std::vector<Subspace<PrimeField>> ideals, subrings;
    auto counts = enumerate_lattices(h.bialgebroid(), ideals, subrings);
    CHECK(counts.subspaces == 212);
    CHECK(counts.ideals >= 2);
    CHECK(counts.subrings >= 2);
    auto rep = verify_bijection(h, ideals, subrings);
    check_comparison_maps(h, rep);
    CHECK(rep.ok());
    CHECK(rep.admitted_ideals == rep.admitted_subrings);
  }
}
