// Build the group algebra of Z3 by hand, verify it, and save it as an instance file.
#include <iostream>

#include "wbh/wbh.hpp"

using wbh::Mat;

int main(int argc, char** argv) {
  const std::size_t n = 3;
  Mat m(n, n * n), e(n, 1), delta(n * n, n), eps(1, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m((i + j) % n, i * n + j) = 1;
    delta(i * n + i, i) = 1;  // grouplike
    eps(0, i) = 1;
  }
  e(0, 0) = 1;
  auto B = wbh::make_bimonad<wbh::Rational>("Z3", m, e, delta, eps, wbh::flip<wbh::Rational>(n));

  auto rep = wbh::check_all_axioms(B);
  for (const auto& entry : rep.entries) std::cout << (entry.holds ? "PASS " : "FAIL ") << entry.id << "\n";

  auto E = wbh::compute_entwining_maps(B);
  // ordinary Hopf algebra: ξ = e·ε
  std::cout << "xi = e.eps: " << std::boolalpha << (E.xi == wbh::compose({B.eps(), B.e()})) << "\n";

  if (argc > 1) wbh::save(B, argv[1]);
  return rep.all_pass() ? 0 : 1;
}
