// Builds degenerate parameters that are semi-admissible for a base set of
// roots and recovers the base set from the omega prefix alone.

#include <cbmw/cbmw.hpp>

#include <iostream>

namespace {

  std::string join(std::vector<cbmw::FieldValue> const& v) {
    std::string s;
    for (auto const& x : v) {
      s += (s.empty() ? "" : ", ") + x.to_string();
    }
    return s;
  }

}  // namespace

int main() {
  using namespace cbmw;
  Field const F = Field::rational();
  auto        I = [&](std::initializer_list<long> xs) {
    std::vector<FieldValue> v;
    for (long x : xs) {
      v.push_back(F.from_int(x));
    }
    return v;
  };

  struct Example {
    std::size_t             d;
    std::vector<FieldValue> base, extra;
  };
  for (auto const& ex : {Example{1, I({2}), I({3})}, Example{2, I({2, 5}), I({3, 7})},
                         Example{1, I({4}), I({-3, 6})}}) {
    ParamSet const p   = construct_example(F, ex.d, ex.extra, ex.base);
    auto const     res = detect(p);
    std::cout << "u = [" << join(p.u()) << "]: " << to_string(res.outcome) << ", d=" << res.d;
    for (auto const& r : res.roots) {
      std::cout << ", subset [" << join(r) << "]";
    }
    std::cout << "\n";
  }
  std::cout << "rank for n=2, r=3, d=1: " << rank_formula(2, 3, 1).get_str() << "\n";

  // Rejected inputs name the constraint they break.
  for (auto const& v : construct_example_violations(F, I({2}), I({-2, 0}))) {
    std::cout << "rejected: " << v << "\n";
  }
}
