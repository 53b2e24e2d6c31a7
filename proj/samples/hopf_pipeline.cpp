// Decide whether the groupoid algebra on two objects is Hopf, and print its antipode.
#include <iostream>

#include "wbh/wbh.hpp"

int main() {
  auto B = wbh::g2();
  auto P = wbh::build_pipeline(B);
  std::cout << B.name << ": n = " << B.dim() << ", base dim = " << P.base.r() << ", t = " << P.galois.t() << "\n";

  auto v = wbh::fundamental_verdict(P);
  std::cout << "Hopf: " << (v.hopf() ? "yes" : "no") << "\n";
  if (!v.antipode) return 1;

  const auto& S = v.antipode->S.matrix();
  for (std::size_t j = 0; j < S.cols(); ++j)
    for (std::size_t i = 0; i < S.rows(); ++i)
      if (!S(i, j).is_zero()) std::cout << "S(b" << j << ") has b" << i << " with coefficient " << S(i, j) << "\n";

  // every identity in the report holds exactly
  std::cout << v.report.entries.size() << " checks, all pass: " << std::boolalpha << v.report.all_pass() << "\n";
}
