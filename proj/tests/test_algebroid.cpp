#include "catch_amalgamated.hpp"

#include "hopfgal/fixtures.hpp"
#include "hopfgal/algebroid/validate.hpp"

using namespace hopfgal;

namespace {

RationalField Q;

template <ExactField F>
Vector<F> vec(const F& f, std::initializer_list<long> xs) {
  Vector<F> v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return v;
}

template <ExactField F>
Subspace<F> span(const F& f, std::size_t n, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector<F>> vs;
  for (auto r : rows) vs.push_back(vec(f, r));
  return Subspace<F>::span(f, n, vs);
}

}  // namespace

TEST_CASE("structure constants: unit derivation and opposite algebra") {
  auto h = fixtures::sweedler(Q).total();
  auto derived = BasedAlgebra<RationalField>::with_derived_unit(Q, 4, h.structure());
  REQUIRE(derived);
  CHECK(derived->unit() == vec(Q, {1, 0, 0, 0}));
  // x g = -g x
  CHECK(h.basis_product(2, 1) == vec(Q, {0, 0, 0, -1}));
  CHECK(h.opposite().basis_product(1, 2) == vec(Q, {0, 0, 0, -1}));
  CHECK_FALSE(h.associativity_witness());
  CHECK_FALSE(h.unitality_witness());
}

TEST_CASE("algebra without unit is rejected") {
  std::vector<Rational> zero(8, Rational(0));
  CHECK_FALSE(BasedAlgebra<RationalField>::with_derived_unit(Q, 2, zero));
}

TEST_CASE("tensor over the ground field has no relations") {
  auto b = fixtures::cyclic_group_algebra(Q, 4);
  CHECK(tensor_over_base(b).dim() == 16);
  CHECK(tensor_over_base_op(b).dim() == 16);
  CHECK(takeuchi_subspace(b, tensor_over_base_op(b)).dim() == 16);
  CHECK(takeuchi_subspace(b, tensor_over_base(b)).dim() == 16);
}

TEST_CASE("tensor over a subring") {
  auto c4 = fixtures::cyclic_group_algebra(Q, 4);
  auto g2 = span(Q, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}});
  CHECK(tensor_over_subring(c4, g2).dim() == 8);
  auto c2 = fixtures::cyclic_group_algebra(Q, 2);
  CHECK(tensor_over_subring(c2, c2.whole()).dim() == 2);
  CHECK(tensor_over_subring(c4, span(Q, 4, {{1, 0, 0, 0}})).dim() == 16);
  CHECK_THROWS_AS(tensor_over_subring(c4, span(Q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}})), InvalidSubring);
}

TEST_CASE("tensor squares of the pair groupoid") {
  auto b = fixtures::pair_groupoid(Q);
  // e_ij (x) e_kl survives over A iff i = k; Takeuchi condition additionally forces j = l
  std::size_t over_a = 0, takeuchi = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          over_a += i == k;
          takeuchi += i == k && j == l;
        }
  auto t = tensor_over_base(b);
  CHECK(t.dim() == over_a);
  auto tk = takeuchi_subspace(b, t);
  CHECK(tk.dim() == takeuchi);
  for (std::size_t x = 0; x < 4; ++x) CHECK(tk.contains(t.project(b.coproduct(b.basis_vector(x)))));
}

TEST_CASE("tensor squares of the enveloping algebra") {
  auto b = fixtures::enveloping_split(Q);
  // (e_i (x) e_j) (x) (e_k (x) e_l) survives over A iff j = k; H is commutative so the Takeuchi condition is automatic
  std::size_t over_a = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) over_a += j == k;
  auto t = tensor_over_base(b);
  CHECK(t.dim() == over_a);
  CHECK(takeuchi_subspace(b, t).dim() == over_a);
  for (std::size_t x = 0; x < 4; ++x) CHECK(takeuchi_subspace(b, t).contains(t.project(b.coproduct(b.basis_vector(x)))));
}

TEST_CASE("takeuchi subspace rejects other balancings") {
  auto b = fixtures::cyclic_group_algebra(Q, 4);
  auto g2 = span(Q, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}});
  CHECK_THROWS_AS(takeuchi_subspace(b, tensor_over_subring(b, g2)), InvalidArgument);
}

TEST_CASE("every shipped bialgebroid passes validation") {
  auto expect_ok = [](const auto& b) {
    auto rep = validate_bialgebroid(b);
    INFO(rep.failed().size());
    CHECK(rep.ok());
    CHECK(rep.checks.size() >= 15);
  };
  expect_ok(fixtures::trivial_hopf(Q));
  expect_ok(fixtures::cyclic_group_algebra(Q, 2));
  expect_ok(fixtures::cyclic_group_algebra(Q, 4));
  expect_ok(fixtures::symmetric_group_s3(Q));
  expect_ok(fixtures::sweedler(Q));
  expect_ok(fixtures::sweedler(PrimeField(3)));
  expect_ok(fixtures::pair_groupoid(Q));
  expect_ok(fixtures::enveloping_split(Q));
  expect_ok(fixtures::idempotent_bialgebra(Q));
}

TEST_CASE("corrupted comultiplication fails exactly the counit check") {
  auto rep = validate_bialgebroid(fixtures::corrupted_c2(Q));
  CHECK(rep.failed() == std::vector<std::string>{"counit"});
  REQUIRE(rep.find("counit"));
  CHECK_FALSE(rep.find("counit")->witness.empty());
}

TEST_CASE("counit with eps(1) = 0 fails the unital check") {
  auto rep = validate_bialgebroid(fixtures::counit_broken_c2(Q));
  auto failed = rep.failed();
  CHECK(std::find(failed.begin(), failed.end(), "counit_unital") != failed.end());
  CHECK_THROWS_AS(require_valid(rep), AxiomError);
  try {
    require_valid(rep);
  } catch (const AxiomError& e) {
    CHECK(std::string(e.what()).find("eps(1_H) = 1_A") != std::string::npos);
  }
}

TEST_CASE("augmentation parts") {
  auto c2 = fixtures::cyclic_group_algebra(Q, 2);
  CHECK(bplus(c2, span(Q, 2, {{1, 0}})).dim() == 0);
  CHECK(bplus(c2, c2.whole()) == span(Q, 2, {{-1, 1}}));
  CHECK(c2.augmentation_ideal() == span(Q, 2, {{-1, 1}}));
  CHECK_THROWS_AS(bplus(c2, Subspace<RationalField>::full(Q, 3)), DimensionMismatch);
}

TEST_CASE("coideals, left ideals and comodule subrings of kC4") {
  auto b = fixtures::cyclic_group_algebra(Q, 4);
  auto i2 = span(Q, 4, {{-1, 0, 1, 0}, {0, -1, 0, 1}});
  auto g_minus_1 = span(Q, 4, {{-1, 1, 0, 0}});
  CHECK(is_left_ideal_coideal(b, i2));
  CHECK(is_left_ideal_coideal(b, b.augmentation_ideal()));
  CHECK(is_left_ideal_coideal(b, Subspace<RationalField>::zero(Q, 4)));
  CHECK(is_coideal(b, g_minus_1));
  CHECK_FALSE(is_left_ideal(b, g_minus_1));
  CHECK_FALSE(is_coideal(b, span(Q, 4, {{1, 0, 0, 0}})));

  auto g2 = span(Q, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}});
  CHECK(is_comodule_subring(b, g2));
  CHECK(is_comodule_subring(b, b.whole()));
  CHECK(is_comodule_subring(b, span(Q, 4, {{1, 0, 0, 0}})));
  CHECK_FALSE(is_subring(b, span(Q, 4, {{1, 0, 0, 0}, {0, 1, 0, 1}})));
  CHECK_FALSE(is_comodule_subring(b, span(Q, 4, {{0, 0, 1, 0}})));
  CHECK(corestricted_coaction(b, g2));
}

TEST_CASE("comodule subrings of Sweedler's algebra") {
  auto b = fixtures::sweedler(Q);
  // basis 1, g, x, gx
  CHECK(is_comodule_subring(b, span(Q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}})));
  CHECK(is_comodule_subring(b, span(Q, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}})));
  CHECK_FALSE(is_comodule_subring(b, span(Q, 4, {{1, 0, 0, 0}, {0, 0, 0, 1}})));
}

TEST_CASE("counit legs agree with the identity on the coproduct") {
  auto b = fixtures::pair_groupoid(Q);
  auto left = counit_left_leg(b), right = counit_right_leg(b);
  for (std::size_t x = 0; x < b.dim(); ++x) {
    CHECK(left.apply(b.coproduct(b.basis_vector(x))) == b.basis_vector(x));
    CHECK(right.apply(b.coproduct(b.basis_vector(x))) == b.basis_vector(x));
  }
}
