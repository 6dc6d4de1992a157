#ifndef CBMW_COUNTING_HPP_
#define CBMW_COUNTING_HPP_

#include <gmpxx.h>

#include <string>

#include "error.hpp"

namespace cbmw {

  inline mpz_class factorial(unsigned long n) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
  }

  //! (2n-1)!! = 1 * 3 * ... * (2n-1), the number of Brauer diagrams on 2n
  //! points; 1 for n = 0.
  inline mpz_class odd_double_factorial(unsigned long n) {
    mpz_class out = 1;
    for (unsigned long k = 1; k <= n; ++k) {
      out *= 2 * k - 1;
    }
    return out;
  }

  //! Diagrams with at least one horizontal strand: (2n-1)!! - n!.
  inline mpz_class b_prime(unsigned long n) {
    return odd_double_factorial(n) - factorial(n);
  }

  inline mpz_class power(unsigned long base, unsigned long e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, e);
    return out;
  }

  //! d^n b'(n) + r^n n!, for 0 < d <= r.
  inline mpz_class rank_formula(unsigned long n, unsigned long r, unsigned long d) {
    if (d == 0 || d > r) {
      throw Error(ErrorCode::invalid_argument,
                  "rank formula needs 0 < d <= r, got d = " + std::to_string(d)
                      + ", r = " + std::to_string(r));
    }
    return power(d, n) * b_prime(n) + power(r, n) * factorial(n);
  }

}  // namespace cbmw

#endif  // CBMW_COUNTING_HPP_
