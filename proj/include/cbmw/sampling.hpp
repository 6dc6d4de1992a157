#ifndef CBMW_SAMPLING_HPP_
#define CBMW_SAMPLING_HPP_

// Seeded random field elements for the cross-validation harnesses.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "field.hpp"

namespace cbmw {

  using Rng = std::mt19937_64;

  //! Over Q: n/d with |n| <= 9, 1 <= d <= 4.  Over a finite field: uniform.
  inline FieldValue random_element(Field const& F, Rng& rng, bool nonzero = false) {
    while (true) {
      FieldValue x;
      if (F.is_rational()) {
        std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
        long const                          n = num(rng);
        long const                          d = den(rng);
        mpq_class                           v(n, d);
        v.canonicalize();
        x = F.from_rational(v);
      } else {
        std::uniform_int_distribution<std::uint64_t> pick(0, F.order() - 1);
        x = F.from_residue(pick(rng));
      }
      if (!nonzero || !x.is_zero()) {
        return x;
      }
    }
  }

  //! r elements; pairwise distinct when requested (the field must be large
  //! enough).
  inline std::vector<FieldValue> random_roots(Field const& F,
                                              std::size_t  r,
                                              Rng&         rng,
                                              bool         nonzero  = false,
                                              bool         distinct = false) {
    std::vector<FieldValue> u;
    while (u.size() < r) {
      FieldValue x = random_element(F, rng, nonzero);
      if (distinct && std::find(u.begin(), u.end(), x) != u.end()) {
        continue;
      }
      u.push_back(x);
    }
    return u;
  }

  inline std::size_t random_index(Rng& rng, std::size_t lo, std::size_t hi) {
    std::uniform_int_distribution<std::size_t> d(lo, hi);
    return d(rng);
  }

}  // namespace cbmw

#endif  // CBMW_SAMPLING_HPP_
