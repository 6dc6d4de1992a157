// The omega sequence of one nondegenerate parameter set: its prefix, the
// rational function w^+, the negative part and the w^+ w^- identity.

#include <cbmw/cbmw.hpp>

#include <iostream>

int main() {
  using namespace cbmw;
  Field const             F = Field::rational();
  std::vector<FieldValue> u{F.from_int(3)};
  FieldValue const        rho = F.from_int(3), q = F.from_int(2);

  OmegaSeq const w = omega_from_u_nondegenerate(F, rho, q, u, 8);
  for (std::size_t a = 0; a < w.size(); ++a) {
    std::cout << "w_" << a << " = " << w[static_cast<long>(a)].to_string() << "\n";
  }
  std::cout << "w^+(t) = " << wplus_ratfunc(w).to_string() << "\n";

  ParamSet const p   = ParamSet::nondegenerate(u, rho, q, w);
  OmegaSeq const neg = omega_negative(p, 4);
  for (long a = 1; a <= 4; ++a) {
    std::cout << "w_-" << a << " = " << neg[-a].to_string() << "\n";
  }
  std::cout << verify_pm_identity(p).to_string();
  std::cout << rui_xu_check(p).to_string();

  // The degenerate sequence for the same root.
  std::cout << "degenerate:";
  for (auto const& x : omega_from_u_degenerate(F, u, 6).prefix()) {
    std::cout << " " << x.to_string();
  }
  std::cout << "\n";
}
