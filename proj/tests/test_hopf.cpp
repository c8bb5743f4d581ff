#include "catch_amalgamated.hpp"

#include "hopfgal/fixtures.hpp"
#include "hopfgal/hopf/hopf.hpp"

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

template <ExactField F>
Vector<F> pure_tensor(const HopfData<F>& h, std::size_t i, std::size_t j) {
  const auto& b = h.bialgebroid();
  return h.tensor_op().project(tensor(b.basis_vector(i), b.basis_vector(j)));
}

}  // namespace

TEST_CASE("canonical map of kC4 is invertible") {
  HopfData<RationalField> h(fixtures::cyclic_group_algebra(Q, 4));
  CHECK(h.beta().domain_dim() == 16);
  CHECK(h.beta() * h.beta_inverse() == LinMap<RationalField>::identity(Q, 16));
  CHECK(h.beta_inverse() * h.beta() == LinMap<RationalField>::identity(Q, 16));
}

TEST_CASE("translation map of a group algebra is g -> g (x) g^-1") {
  HopfData<RationalField> h(fixtures::cyclic_group_algebra(Q, 4));
  const auto& b = h.bialgebroid();
  for (std::size_t g = 0; g < 4; ++g) CHECK(translation_map(h, b.basis_vector(g)) == pure_tensor(h, g, (4 - g) % 4));
  CHECK(check_translation_map(h).ok());
}

TEST_CASE("translation map of Sweedler's algebra") {
  HopfData<RationalField> h(fixtures::sweedler(Q));
  const auto& b = h.bialgebroid();
  // basis 1, g, x, gx
  auto expected = pure_tensor(h, 0, 3) + pure_tensor(h, 2, 1);
  CHECK(translation_map(h, b.basis_vector(2)) == expected);
  CHECK(translation_map(h, b.one()) == pure_tensor(h, 0, 0));
  CHECK(check_translation_map(h).ok());
}

TEST_CASE("translation map identities hold on every Hopf fixture") {
  auto ok = [](auto b) {
    HopfData h(std::move(b));
    auto rep = check_translation_map(h);
    CHECK(rep.ok());
    CHECK(rep.witness.empty());
  };
  ok(fixtures::trivial_hopf(Q));
  ok(fixtures::cyclic_group_algebra(Q, 2));
  ok(fixtures::symmetric_group_s3(Q));
  ok(fixtures::sweedler(PrimeField(5)));
  ok(fixtures::pair_groupoid(Q));
  ok(fixtures::enveloping_split(Q));
}

TEST_CASE("an idempotent bialgebra is not left Hopf") {
  auto b = fixtures::idempotent_bialgebra(Q);
  CHECK(rank(beta_map(b)) < b.dim() * b.dim());
  CHECK_THROWS_AS(HopfData<RationalField>(b), NotLeftHopf);
  CHECK_THROWS_AS(invert_beta(b), NotLeftHopf);
}

TEST_CASE("pair groupoid: beta is an isomorphism between four-dimensional squares") {
  HopfData<RationalField> h(fixtures::pair_groupoid(Q));
  CHECK(h.tensor_op().dim() == 8);
  CHECK(h.tensor_base().dim() == 8);
  CHECK(rank(h.beta()) == 8);
  CHECK(h.distinguished().dim() == 4);
}

TEST_CASE("translation-map condition on comodule subrings") {
  HopfData<RationalField> c4(fixtures::cyclic_group_algebra(Q, 4));
  auto g2 = span(Q, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}});
  CHECK(check_bbeta_condition(c4, g2));
  CHECK(gamma_prime_exists(c4, g2));
  CHECK(check_bbeta_condition(c4, c4.bialgebroid().whole()));
  CHECK(check_bbeta_condition(c4, span(Q, 4, {{1, 0, 0, 0}})));

  HopfData<RationalField> sw(fixtures::sweedler(Q));
  auto kg = span(Q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(check_bbeta_condition(sw, kg));
  CHECK(gamma_prime_exists(sw, kg));
}

TEST_CASE("tensored inclusions over the ground field are injective") {
  auto b = fixtures::cyclic_group_algebra(Q, 4);
  auto g2 = span(Q, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}});
  for (auto side : {Side::left, Side::right})
    for (auto tensorand : {Side::left, Side::right}) {
      INFO(to_string(side) << " " << to_string(tensorand));
      CHECK(purity_check(b, g2, side, tensorand));
      CHECK(purity_check(b, b.whole(), side, tensorand));
    }
}

TEST_CASE("purity over a nontrivial base") {
  auto b = fixtures::pair_groupoid(Q);
  for (auto side : {Side::left, Side::right})
    for (auto tensorand : {Side::left, Side::right}) CHECK(purity_check(b, b.whole(), side, tensorand));
  auto e = fixtures::enveloping_split(Q);
  CHECK(purity_check(e, e.whole(), Side::left, Side::left));
  CHECK(purity_check(e, e.whole(), Side::right, Side::right));
}
