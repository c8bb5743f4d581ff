#include "catch_amalgamated.hpp"

#include <string>

#include "hopfgal/hopfgal.hpp"

using namespace hopfgal;
using io::json;

namespace {

RationalField Q;

std::string fixture(const std::string& name) { return std::string(HOPFGAL_FIXTURE_DIR) + "/" + name + ".json"; }

json kc2_json() {
  return json::parse(R"({
    "field": {"type": "Q"},
    "total": {"dim": 2, "mult": [[["1", "0"], ["0", "1"]], [["0", "1"], ["1", "0"]]]},
    "comult": [[[0, 0, "1"]], [[1, 1, 1]]],
    "counit": [["1"], ["1"]]
  })");
}

}  // namespace

TEST_CASE("field specs and the override flag") {
  CHECK(io::field_spec_from_json(json{{"type", "Q"}}).rational());
  CHECK(io::field_spec_from_json(json{{"type", "GF"}, {"p", 7}}).p == 7);
  CHECK_THROWS_AS(io::field_spec_from_json(json{{"type", "GF"}, {"p", 9}}), ParseError);
  CHECK_THROWS_AS(io::field_spec_from_json(json{{"type", "R"}}), ParseError);
  CHECK_THROWS_AS(io::field_spec_from_json(json{{"type", "GF"}, {"p", -3}}), ParseError);
  CHECK(io::parse_field_flag("gf:5").p == 5);
  CHECK(io::parse_field_flag("q").rational());
  CHECK_THROWS_AS(io::parse_field_flag("gf:4"), ParseError);
  CHECK_THROWS_AS(io::parse_field_flag("gf:5x"), ParseError);
  CHECK_THROWS_AS(io::parse_field_flag("real"), ParseError);

  io::FieldSpec q{}, gf3{3}, gf5{5};
  CHECK(io::resolve_field(q, std::nullopt) == q);
  CHECK(io::resolve_field(q, gf5) == gf5);
  CHECK(io::resolve_field(gf3, gf3) == gf3);
  CHECK_THROWS_AS(io::resolve_field(gf3, gf5), ParseError);
  CHECK_THROWS_AS(io::resolve_field(gf3, q), ParseError);
}

TEST_CASE("a hand-written algebroid file loads") {
  auto b = io::load_bialgebroid(kc2_json(), Q);
  CHECK(b.dim() == 2);
  CHECK(b.over_ground_field());
  CHECK(b.one() == Vector<RationalField>{Rational(1), Rational(0)});
  CHECK(validate_bialgebroid(b).ok());
}

TEST_CASE("algebroids round-trip through JSON") {
  auto check = [](const auto& b) {
    auto j = io::bialgebroid_to_json(b, "x");
    auto back = io::load_bialgebroid(j, b.field());
    CHECK(io::bialgebroid_to_json(back, "x") == j);
    CHECK(back.comult() == b.comult());
    CHECK(back.counit() == b.counit());
  };
  check(fixtures::pair_groupoid(Q));
  check(fixtures::enveloping_split(Q));
  check(fixtures::sweedler(PrimeField(3)));
  check(fixtures::symmetric_group_s3(Q));
}

TEST_CASE("shipped fixture files load and validate") {
  for (auto name : {"trivial", "kc2", "kc4", "ks3", "sweedler", "pair_groupoid", "enveloping", "idempotent"}) {
    INFO(name);
    CHECK_NOTHROW(io::load_bialgebroid(fixture(name), Q));
  }
  CHECK_NOTHROW(io::load_bialgebroid(fixture("sweedler_gf5"), PrimeField(5)));
  CHECK_THROWS_AS(io::load_bialgebroid(fixture("corrupted_comult_c2"), Q), AxiomError);
  CHECK_THROWS_AS(io::load_bialgebroid(fixture("counit_broken_c2"), Q), AxiomError);
  CHECK_THROWS_AS(io::read_file(fixture("does_not_exist")), ParseError);
}

TEST_CASE("rational data reduces mod p") {
  auto b = io::load_bialgebroid(fixture("sweedler"), PrimeField(5));
  CHECK(b.field().modulus() == 5);
  CHECK(validate_bialgebroid(b).ok());
}

TEST_CASE("malformed algebroid files are parse errors") {
  auto bad = [](auto mutate) {
    auto j = kc2_json();
    mutate(j);
    CHECK_THROWS_AS(io::load_bialgebroid(j, Q), ParseError);
  };
  bad([](json& j) { j.erase("total"); });
  bad([](json& j) { j.erase("counit"); });
  bad([](json& j) { j["comult"] = json::array({json::array()}); });
  bad([](json& j) { j["comult"][0][0] = json::array({0, 5, "1"}); });
  bad([](json& j) { j["comult"][0][0] = json::array({0, 0, "1/x"}); });
  bad([](json& j) { j["total"]["dim"] = -1; });
  bad([](json& j) { j["total"]["mult"] = json::array(); });
  bad([](json& j) { j["base"] = j["total"]; });
  CHECK_THROWS_AS(io::load_bialgebroid(json::array(), Q), ParseError);
}

TEST_CASE("subspace lists") {
  auto ideals = io::subspaces_from_json(io::read_file(fixture("kc4_ideals")), Q);
  REQUIRE(ideals.size() == 3);
  CHECK(ideals[0].dim() == 0);
  CHECK(ideals[1].dim() == 2);
  CHECK(ideals[2].dim() == 3);
  auto single = io::subspaces_from_json(json::parse(R"({"ambient": 2, "basis": [["1", 1]]})"), Q);
  REQUIRE(single.size() == 1);
  CHECK(single[0].dim() == 1);
  auto arr = io::subspaces_from_json(json::parse(R"([{"ambient": 2, "basis": []}, {"ambient": 2, "basis": [[1, 0], [0, 1]]}])"), Q);
  CHECK(arr.size() == 2);
  CHECK(io::to_json(arr[1])["dim"] == 2);
  CHECK_THROWS_AS(io::subspaces_from_json(json::parse(R"({"ambient": 2, "basis": [[1]]})"), Q), ParseError);
  CHECK_THROWS_AS(io::subspaces_from_json(json::parse(R"({"basis": []})"), Q), ParseError);
}

TEST_CASE("reduction systems round-trip through JSON") {
  auto k = rewrite::sl2_pair_system(Q);
  auto back = io::reduction_system_from_json(io::to_json(k), Q);
  CHECK(back.variables() == k.variables());
  REQUIRE(back.rules().size() == k.rules().size());
  for (std::size_t i = 0; i < k.rules().size(); ++i) {
    CHECK(back.rules()[i].lhs == k.rules()[i].lhs);
    CHECK(back.rules()[i].rhs == k.rules()[i].rhs);
  }
}

TEST_CASE("reports serialize deterministically") {
  HopfData<RationalField> h(fixtures::cyclic_group_algebra(Q, 4));
  auto ideals = io::subspaces_from_json(io::read_file(fixture("kc4_ideals")), Q);
  auto subrings = io::subspaces_from_json(io::read_file(fixture("kc4_subrings")), Q);
  auto once = [&] {
    auto rep = verify_bijection(h, ideals, subrings);
    check_comparison_maps(h, rep);
    return io::to_json(rep).dump();
  };
  CHECK(once() == once());
  auto j = json::parse(once());
  CHECK(j["ideals"].size() == 3);
  CHECK(j["subrings"].size() == 3);
  CHECK(j["violations"].empty());

  auto l = io::to_json(rewrite::laurent_case_study(Q, 2));
  CHECK(l.contains("equalizer_certificates"));
  auto s = io::to_json(rewrite::sl2_case_study(Q, 2));
  CHECK(s.contains("equalizer_basis"));
}
