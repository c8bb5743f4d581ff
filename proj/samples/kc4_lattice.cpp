#include <iostream>

#include "hopfgal/hopfgal.hpp"

using namespace hopfgal;

// Enumerate kC4 over GF(3) and print Phi, Psi on every object.
int main() {
  PrimeField f(3);
  HopfData<PrimeField> h(fixtures::cyclic_group_algebra(f, 4));
  std::vector<Subspace<PrimeField>> ideals, subrings;
  auto counts = enumerate_lattices(h.bialgebroid(), ideals, subrings);
  std::cout << counts.subspaces << " subspaces, " << counts.ideals << " left ideal coideals, " << counts.subrings << " comodule subrings\n";

  auto rep = verify_bijection(h, ideals, subrings);
  for (const auto& e : rep.subrings) std::cout << "B = " << e.subring.key() << "  ->  Phi(B) = " << e.phi->key() << "\n";
  for (const auto& e : rep.ideals) std::cout << "I = " << e.ideal.key() << "  ->  Psi(I) = " << e.psi->key() << "\n";
  std::cout << (rep.bijection() ? "Phi and Psi are mutually inverse" : "violations found") << "\n";
  return rep.bijection() ? 0 : 1;
}
