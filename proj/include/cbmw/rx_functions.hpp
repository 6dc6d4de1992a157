#ifndef CBMW_RX_FUNCTIONS_HPP_
#define CBMW_RX_FUNCTIONS_HPP_

// The rational functions G, A, Z attached to (u, rho, q) in the
// nondegenerate case, and the constraint tying rho to prod u_j.

#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "ratfunc.hpp"
#include "report.hpp"

namespace cbmw {

  //! G(t) = prod (t - u)/(t u - 1);
  //! A(t) = rho^{-1} P + c t/(t^2 - 1)      (r odd),
  //!        rho^{-1} P - c t^2/(t^2 - 1)    (r even);
  //! Z(t) = -rho^{-1} + c t^2/(t^2 - 1) + A(t) G(1/t),
  //! where P = prod u_j and c = q - q^{-1}.
  struct RXFunctions {
    RatFunc G;
    RatFunc A;
    RatFunc Z;
  };

  //! q - q^{-1}, rejecting zero.
  inline FieldValue nonzero_q_diff(FieldValue const& q) {
    if (q.is_zero()) {
      throw Error(ErrorCode::precondition, "q must be invertible");
    }
    FieldValue c = q - q.inverse();
    if (c.is_zero()) {
      throw Error(ErrorCode::precondition,
                  "q - q^{-1} = 0 is outside the supported range");
    }
    return c;
  }

  inline RXFunctions rx_functions(Field const&                F,
                                  std::span<FieldValue const> u,
                                  FieldValue const&           rho,
                                  FieldValue const&           q) {
    FieldValue const c    = nonzero_q_diff(q);
    FieldValue const rinv = rho.inverse();
    RatFunc const    t    = RatFunc::t(F);
    RatFunc const    one  = RatFunc::constant(F.one());
    RatFunc const    t2m1 = t * t - one;

    RatFunc    G   = one;
    FieldValue P   = F.one();
    for (auto const& x : u) {
      G = G * (t - RatFunc::constant(x)) / (t * x - one);
      P *= x;
    }
    RatFunc A = u.size() % 2 == 1
                    ? RatFunc::constant(rinv * P) + t / t2m1 * c
                    : RatFunc::constant(rinv * P) - t * t / t2m1 * c;
    RatFunc Z = RatFunc::constant(-rinv) + t * t / t2m1 * c
                + A * substitute_inverse_t(G);
    return {G, A, Z};
  }

  //! The admissible values of rho: +-P for r odd, {q^{-1} P, -q P} for r
  //! even, with P = prod u_j (equivalently a_0 up to the sign (-1)^r).
  inline std::vector<FieldValue> allowed_rho(std::span<FieldValue const> u,
                                             FieldValue const&           q) {
    FieldValue P = q.field().one();
    for (auto const& x : u) {
      P *= x;
    }
    if (u.size() % 2 == 1) {
      return {P, -P};
    }
    return {q.inverse() * P, -q * P};
  }

  inline CriterionResult rho_constraint(std::span<FieldValue const> u,
                                        FieldValue const&           rho,
                                        FieldValue const&           q) {
    auto const  allowed = allowed_rho(u, q);
    std::string set;
    for (auto const& v : allowed) {
      if (v == rho) {
        return CriterionResult::passed("rho");
      }
      set += (set.empty() ? "{" : ", ") + v.to_string();
    }
    return CriterionResult::failed(
        "rho", Witness{"rho constraint", 0, rho.to_string(), set + "}"},
        u.size() % 2 == 1 ? "r odd" : "r even");
  }

}  // namespace cbmw

#endif  // CBMW_RX_FUNCTIONS_HPP_
