#include <iostream>

#include "hopfgal/rewrite/case_studies.hpp"

using namespace hopfgal;
using namespace hopfgal::rewrite;

int main(int argc, char** argv) {
  RationalField q;
  auto k = sl2_pair_system(q);
  const char* input = argc > 1 ? argv[1] : "s^2*v*z";
  auto p = k.parse(input);
  std::cout << input << "\n";
  k.normal_form(p, [&](const Monomial& m, std::size_t rule, const Polynomial<RationalField>& by) {
    std::cout << "  " << k.format(m) << " -> " << k.format(by) << "   (rule " << rule << ")\n";
  });
  std::cout << "= " << k.format(k.normal_form(p)) << "\n";
  return 0;
}
