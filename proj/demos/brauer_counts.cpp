// Diagram and rank counts, and a few products of Brauer diagrams.

#include <cbmw/cbmw.hpp>

#include <iostream>

int main() {
  using namespace cbmw;
  std::cout << "n  diagrams  b'(n)  regular(r=2)  rank(r=3,d=1)\n";
  for (unsigned n = 0; n <= 4; ++n) {
    std::cout << n << "  " << odd_double_factorial(n).get_str() << "  "
              << b_prime(n).get_str() << "  " << count_regular(n, 2).get_str() << "  "
              << rank_formula(n, 3, 1).get_str() << "\n";
  }

  auto const e0 = BrauerDiagram::e(3, 0), e1 = BrauerDiagram::e(3, 1);
  auto const [sq, loops] = compose(e0, e0);
  std::cout << "e_1 e_1 = e_1 with " << loops << " loop(s): " << (sq == e0) << "\n";
  auto const m = compose(compose(e0, e1).first, e0);
  std::cout << "e_1 e_2 e_1 = e_1: " << (m.first == e0 && m.second == 0) << "\n";

  auto const x = factorize(compose(BrauerDiagram::s(4, 1), BrauerDiagram::e(4, 0)).first);
  std::cout << "s_2 e_1 has f = " << x.f << ", round trip "
            << (recompose(x) == compose(BrauerDiagram::s(4, 1), BrauerDiagram::e(4, 0)).first)
            << "\n";
}
