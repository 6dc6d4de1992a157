// One parameter set per rationality case, classified and certified.

#include <cbmw/cbmw.hpp>

#include <iostream>

int main() {
  using namespace cbmw;
  Field const      F = Field::rational();
  FieldValue const q = F.from_int(3);
  auto             I = [&](std::initializer_list<long> xs) {
    std::vector<FieldValue> v;
    for (long x : xs) {
      v.push_back(F.from_int(x));
    }
    return v;
  };

  struct Input {
    int                     alpha;
    std::vector<FieldValue> u;
  };
  for (auto const& in : {Input{0, I({2, 5, 7})}, Input{1, I({2, 5, 7})}, Input{0, I({2, 5})},
                         Input{1, I({2, 5})}}) {
    ParamSet const p = affine_params_from_form(F, in.alpha, in.u, q);
    auto const     c = affine_classify(p);
    std::cout << "case " << c.case_tag << ": rho = " << c.rho_recovered.to_string()
              << ", admissible for [";
    for (std::size_t i = 0; i < c.admissible_roots.size(); ++i) {
      std::cout << (i ? ", " : "") << c.admissible_roots[i].to_string();
    }
    std::cout << "]: " << (c.certificate.pass() ? "certified" : "NOT certified") << "\n";
  }

  // Characteristic 2: roots from power sums over GF(8).
  Field const             F8 = Field::binary(3);
  std::vector<FieldValue> u{F8.from_residue(2), F8.from_residue(5)};
  auto const              rec = char2_recover(power_sum_sequence(u, 12, F8), F8);
  std::cout << "GF(8) roots:";
  for (auto const& x : rec.admissible_roots) {
    std::cout << " " << x.to_string();
  }
  std::cout << "\n";
}
