#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "hopfgal/hopfgal.hpp"

namespace {

using hopfgal::io::json;
namespace fx = hopfgal::fixtures;

void write(const std::filesystem::path& dir, const std::string& name, const json& j) {
  std::ofstream out(dir / (name + ".json"), std::ios::binary);
  out << j.dump(1) << "\n";
  if (!out) throw std::runtime_error("cannot write " + name);
}

/// Each entry lists the rows of one spanning set, flattened.
template <hopfgal::ExactField F>
json subspaces(const F& f, std::size_t n, const std::vector<std::vector<std::string>>& rows_per_space) {
  std::vector<hopfgal::Subspace<F>> v;
  for (const auto& rows : rows_per_space) {
    std::vector<hopfgal::Vector<F>> vs;
    for (std::size_t i = 0; i + n <= rows.size(); i += n) {
      hopfgal::Vector<F> x;
      for (std::size_t k = 0; k < n; ++k) x.push_back(f.parse(rows[i + k]));
      vs.push_back(std::move(x));
    }
    v.push_back(hopfgal::Subspace<F>::span(f, n, vs));
  }
  return hopfgal::io::subspace_list_to_json(v, n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Write the shipped fixture files"};
  std::string dir = "fixtures";
  app.add_option("dir", dir, "output directory");
  CLI11_PARSE(app, argc, argv);
  std::filesystem::create_directories(dir);

  hopfgal::RationalField q;
  const hopfgal::PrimeField gf2(2), gf3(3), gf5(5);
  using hopfgal::io::bialgebroid_to_json;

  write(dir, "trivial", bialgebroid_to_json(fx::trivial_hopf(q), "k"));
  write(dir, "kc2", bialgebroid_to_json(fx::cyclic_group_algebra(q, 2), "kC2"));
  write(dir, "kc2_gf3", bialgebroid_to_json(fx::cyclic_group_algebra(gf3, 2), "kC2 over GF(3)"));
  write(dir, "kc4", bialgebroid_to_json(fx::cyclic_group_algebra(q, 4), "kC4"));
  write(dir, "kc4_gf2", bialgebroid_to_json(fx::cyclic_group_algebra(gf2, 4), "kC4 over GF(2)"));
  write(dir, "kc4_gf3", bialgebroid_to_json(fx::cyclic_group_algebra(gf3, 4), "kC4 over GF(3)"));
  write(dir, "ks3", bialgebroid_to_json(fx::symmetric_group_s3(q), "kS3"));
  write(dir, "sweedler", bialgebroid_to_json(fx::sweedler(q), "Sweedler H4"));
  write(dir, "sweedler_gf3", bialgebroid_to_json(fx::sweedler(gf3), "Sweedler H4 over GF(3)"));
  write(dir, "sweedler_gf5", bialgebroid_to_json(fx::sweedler(gf5), "Sweedler H4 over GF(5)"));
  write(dir, "pair_groupoid", bialgebroid_to_json(fx::pair_groupoid(q), "pair groupoid on two objects"));
  write(dir, "pair_groupoid_gf3", bialgebroid_to_json(fx::pair_groupoid(gf3), "pair groupoid on two objects over GF(3)"));
  write(dir, "enveloping", bialgebroid_to_json(fx::enveloping_split(q), "A^e for A = k x k"));
  write(dir, "idempotent", bialgebroid_to_json(fx::idempotent_bialgebra(q), "k[X]/(X^2 - X), not Hopf"));
  write(dir, "corrupted_comult_c2", bialgebroid_to_json(fx::corrupted_c2(q), "kC2 with Delta g = g (x) 1"));
  write(dir, "counit_broken_c2", bialgebroid_to_json(fx::counit_broken_c2(q), "kC2 with eps(1) = 0"));

  // basis 1, g, g^2, g^3
  write(dir, "kc4_ideals", subspaces(q, 4, {{}, {"-1", "0", "1", "0", "0", "-1", "0", "1"}, {"-1", "1", "0", "0", "-1", "0", "1", "0", "-1", "0", "0", "1"}}));
  write(dir, "kc4_subrings", subspaces(q, 4, {{"1", "0", "0", "0"}, {"1", "0", "0", "0", "0", "0", "1", "0"}, {"1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "1"}}));
  write(dir, "kc4_not_coideal", subspaces(q, 4, {{"1", "0", "0", "0"}}));
  // basis 1, g, x, gx
  write(dir, "sweedler_subrings", subspaces(q, 4, {{"1", "0", "0", "0"}, {"1", "0", "0", "0", "0", "1", "0", "0"}}));
  std::cout << "fixtures written to " << dir << "\n";
  return 0;
}
