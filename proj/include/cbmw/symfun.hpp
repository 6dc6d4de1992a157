#ifndef CBMW_SYMFUN_HPP_
#define CBMW_SYMFUN_HPP_

// Symmetric functions of the roots u_1..u_r: elementary symmetric functions,
// power sums, Schur q-functions, the eta^{+/-} family and the polynomials H_a
// obtained from the degenerate admissibility relations.
//
// Every function comes in two flavours: symbolic (an MPoly in r variables,
// selected by passing a Symbolic tag) and evaluated (a FieldValue, given the
// roots in some field).

#include <gmpxx.h>

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "mpoly.hpp"
#include "poly.hpp"

namespace cbmw {

  enum class Sign { plus, minus };

  inline char const* to_string(Sign s) noexcept {
    return s == Sign::plus ? "+" : "-";
  }

  //! Symbolic mode with r variables.  Growth is polynomial but steep, so
  //! r and the largest index are capped (adjustable per call).
  struct Symbolic {
    std::size_t r;
    std::size_t max_r     = 6;
    std::size_t max_index = 24;
  };

  namespace detail {
    inline void check_caps(Symbolic const& s, std::size_t index) {
      if (s.r > s.max_r || index > s.max_index) {
        throw Error(ErrorCode::cap_exceeded,
                    "symbolic computation with r = " + std::to_string(s.r)
                        + ", index " + std::to_string(index) + " (caps r <= "
                        + std::to_string(s.max_r) + ", index <= "
                        + std::to_string(s.max_index) + ")");
      }
    }

    inline int parity_sign(std::size_t r) {
      return (r % 2 == 1) ? 1 : -1;  // (-1)^{r-1}
    }

    // MPoly divided by 2, asserting integrality of the result.
    inline MPoly halve_integral(MPoly const& p, std::string const& what) {
      MPoly h = p * mpq_class(1, 2);
      if (!h.is_integral()) {
        throw Error(ErrorCode::integrality, what + " is not integral");
      }
      return h;
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Elementary symmetric functions and power sums
  ////////////////////////////////////////////////////////////////////////

  //! All e_0..e_r as polynomials.
  inline std::vector<MPoly> elem_sym_all(Symbolic const& s) {
    detail::check_caps(s, 0);
    std::vector<MPoly> e(s.r + 1, MPoly(s.r));
    e[0] = MPoly::constant(s.r, 1);
    for (std::size_t i = 0; i < s.r; ++i) {
      MPoly const x = MPoly::variable(s.r, i);
      for (std::size_t k = i + 1; k >= 1; --k) {
        e[k] += x * e[k - 1];
      }
    }
    return e;
  }

  inline MPoly elem_sym(std::size_t k, Symbolic const& s) {
    if (k > s.r) {
      throw Error(ErrorCode::index_out_of_range,
                  "e_" + std::to_string(k) + " with r = " + std::to_string(s.r));
    }
    return elem_sym_all(s)[k];
  }

  inline std::vector<FieldValue> elem_sym_all(std::span<FieldValue const> u,
                                              Field const&                F) {
    std::vector<FieldValue> e(u.size() + 1, F.zero());
    e[0] = F.one();
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t k = i + 1; k >= 1; --k) {
        e[k] += u[i] * e[k - 1];
      }
    }
    return e;
  }

  inline FieldValue elem_sym(std::size_t                 k,
                             std::span<FieldValue const> u,
                             Field const&                F) {
    if (k > u.size()) {
      throw Error(ErrorCode::index_out_of_range,
                  "e_" + std::to_string(k) + " with r = "
                      + std::to_string(u.size()));
    }
    return elem_sym_all(u, F)[k];
  }

  inline MPoly power_sum(std::size_t a, Symbolic const& s) {
    detail::check_caps(s, a);
    MPoly out(s.r);
    for (std::size_t i = 0; i < s.r; ++i) {
      MPoly::Exponent e(s.r, 0);
      e[i] = static_cast<std::uint32_t>(a);
      out.add_term(e, 1);
    }
    return out;
  }

  inline FieldValue power_sum(std::size_t                 a,
                              std::span<FieldValue const> u,
                              Field const&                F) {
    FieldValue out = F.zero();
    for (auto const& x : u) {
      out += x.pow(static_cast<long long>(a));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Schur q-functions: prod (1 + u_i t)/(1 - u_i t) = sum q_a t^a
  ////////////////////////////////////////////////////////////////////////

  //! q_0..q_N by truncated multiplication of the factors
  //! 1 + 2 u t + 2 u^2 t^2 + ...
  inline std::vector<MPoly> schur_q_all(std::size_t N, Symbolic const& s) {
    detail::check_caps(s, N);
    std::vector<MPoly> q(N + 1, MPoly(s.r));
    q[0] = MPoly::constant(s.r, 1);
    for (std::size_t i = 0; i < s.r; ++i) {
      std::vector<MPoly> factor(N + 1, MPoly(s.r));
      factor[0] = MPoly::constant(s.r, 1);
      for (std::size_t k = 1; k <= N; ++k) {
        MPoly::Exponent e(s.r, 0);
        e[i] = static_cast<std::uint32_t>(k);
        factor[k].add_term(e, 2);
      }
      std::vector<MPoly> next(N + 1, MPoly(s.r));
      for (std::size_t a = 0; a <= N; ++a) {
        for (std::size_t k = 0; k + a <= N; ++k) {
          next[a + k] += q[a] * factor[k];
        }
      }
      q = std::move(next);
    }
    return q;
  }

  inline MPoly schur_q(std::size_t a, Symbolic const& s) {
    return schur_q_all(a, s)[a];
  }

  //! q_a / 2 for 1 <= a <= N (entry 0 unused and zero), computed through the
  //! integral recursion Q <- Q + X + 2 Q X with X = sum_{k>=1} u^k t^k, which
  //! is valid over any field, characteristic 2 included.
  inline std::vector<FieldValue> half_q_all(std::size_t                 N,
                                            std::span<FieldValue const> u,
                                            Field const&                F) {
    std::vector<FieldValue> Q(N + 1, F.zero());
    FieldValue const        two = F.from_int(2);
    for (auto const& x : u) {
      std::vector<FieldValue> X(N + 1, F.zero());
      FieldValue              p = F.one();
      for (std::size_t k = 1; k <= N; ++k) {
        p *= x;
        X[k] = p;
      }
      std::vector<FieldValue> next(N + 1, F.zero());
      for (std::size_t a = 1; a <= N; ++a) {
        next[a] = Q[a] + X[a];
        for (std::size_t b = 1; b < a; ++b) {
          next[a] += two * Q[b] * X[a - b];
        }
      }
      Q = std::move(next);
    }
    return Q;
  }

  //! q_0..q_N evaluated at u.
  inline std::vector<FieldValue> schur_q_all(std::size_t                 N,
                                             std::span<FieldValue const> u,
                                             Field const&                F) {
    auto             q   = half_q_all(N, u, F);
    FieldValue const two = F.from_int(2);
    q[0]                 = F.one();
    for (std::size_t a = 1; a <= N; ++a) {
      q[a] *= two;
    }
    return q;
  }

  inline FieldValue schur_q(std::size_t                 a,
                            std::span<FieldValue const> u,
                            Field const&                F) {
    return schur_q_all(a, u, F)[a];
  }

  //! The integral polynomial q_a / 2, a >= 1.
  inline MPoly half_q(std::size_t a, Symbolic const& s) {
    if (a == 0) {
      throw Error(ErrorCode::invalid_argument,
                  "q_0 / 2 is not an integral polynomial");
    }
    return detail::halve_integral(schur_q(a, s),
                                  "q_" + std::to_string(a) + " / 2");
  }

  inline FieldValue half_q(std::size_t                 a,
                           std::span<FieldValue const> u,
                           Field const&                F) {
    if (a == 0) {
      throw Error(ErrorCode::invalid_argument,
                  "q_0 / 2 is not an integral polynomial");
    }
    return half_q_all(a, u, F)[a];
  }

  ////////////////////////////////////////////////////////////////////////
  // eta^{+/-}_a = q_{a+1} +/- (-1)^{r-1} q_a / 2 + delta_{a,0} / 2
  ////////////////////////////////////////////////////////////////////////

  //! eta_0..eta_N computed in Q[u] and certified integral.
  inline std::vector<MPoly> eta_all(Sign sign, std::size_t N, Symbolic const& s) {
    detail::check_caps(s, N + 1);
    auto const      q = schur_q_all(N + 1, s);
    mpq_class const c(detail::parity_sign(s.r) * (sign == Sign::plus ? 1 : -1),
                      2);
    std::vector<MPoly> out;
    out.reserve(N + 1);
    for (std::size_t a = 0; a <= N; ++a) {
      MPoly e = q[a + 1] + q[a] * c;
      if (a == 0) {
        e += MPoly::constant(s.r, mpq_class(1, 2));
      }
      if (!e.is_integral()) {
        throw Error(ErrorCode::integrality,
                    std::string("eta^") + to_string(sign) + "_"
                        + std::to_string(a) + " has a non-integral coefficient");
      }
      out.push_back(std::move(e));
    }
    return out;
  }

  inline MPoly eta(Sign sign, std::size_t a, Symbolic const& s) {
    return eta_all(sign, a, s)[a];
  }

  //! eta_0..eta_N evaluated at u, using only the integral quantities q_a / 2
  //! so the result is meaningful in characteristic 2.
  inline std::vector<FieldValue> eta_all(Sign                        sign,
                                         std::size_t                 N,
                                         std::span<FieldValue const> u,
                                         Field const&                F) {
    auto const       h   = half_q_all(N + 1, u, F);
    FieldValue const two = F.from_int(2);
    int const        eps = detail::parity_sign(u.size())
                    * (sign == Sign::plus ? 1 : -1);
    std::vector<FieldValue> out;
    out.reserve(N + 1);
    // a = 0: q_1 + (1 + eps) / 2.
    out.push_back(two * h[1] + (eps == 1 ? F.one() : F.zero()));
    for (std::size_t a = 1; a <= N; ++a) {
      out.push_back(two * h[a + 1] + (eps == 1 ? h[a] : -h[a]));
    }
    return out;
  }

  inline FieldValue eta(Sign                        sign,
                        std::size_t                 a,
                        std::span<FieldValue const> u,
                        Field const&                F) {
    return eta_all(sign, a, u, F)[a];
  }

  ////////////////////////////////////////////////////////////////////////
  // Characteristic polynomial p(y) = prod (y - u_j) = sum a_j y^j
  ////////////////////////////////////////////////////////////////////////

  //! Coefficients a_0..a_r (a_r = 1) of prod (y - u_j), checked against
  //! a_j = (-1)^{r-j} e_{r-j}(u).
  class CharPolyCoeffs {
   public:
    CharPolyCoeffs(std::span<FieldValue const> u, Field const& F)
        : field_(F), a_(Poly::from_roots(F, u).coeffs()) {
      std::size_t const r = u.size();
      auto const        e = elem_sym_all(u, F);
      for (std::size_t j = 0; j <= r; ++j) {
        FieldValue expect = e[r - j];
        if ((r - j) % 2 == 1) {
          expect = -expect;
        }
        if (!(a_[j] == expect)) {
          throw Error(ErrorCode::verification_failed,
                      "characteristic polynomial coefficient a_"
                          + std::to_string(j));
        }
      }
    }

    std::size_t r() const noexcept {
      return a_.size() - 1;
    }

    Field const& field() const noexcept {
      return field_;
    }

    std::vector<FieldValue> const& coeffs() const& noexcept {
      return a_;
    }
    std::vector<FieldValue> coeffs() && {
      return std::move(a_);
    }

    FieldValue const& operator[](std::size_t j) const {
      if (j >= a_.size()) {
        throw Error(ErrorCode::index_out_of_range,
                    "a_" + std::to_string(j) + " with r = " + std::to_string(r()));
      }
      return a_[j];
    }

    Poly poly() const {
      return Poly(field_, a_);
    }

   private:
    Field                   field_;
    std::vector<FieldValue> a_;
  };

  //! a_0..a_r as polynomials: a_j = (-1)^{r-j} e_{r-j}.
  inline std::vector<MPoly> char_poly_coeffs(Symbolic const& s) {
    auto const         e = elem_sym_all(s);
    std::vector<MPoly> a;
    for (std::size_t j = 0; j <= s.r; ++j) {
      a.push_back((s.r - j) % 2 == 1 ? -e[s.r - j] : e[s.r - j]);
    }
    return a;
  }

  ////////////////////////////////////////////////////////////////////////
  // Universal polynomials H_a
  ////////////////////////////////////////////////////////////////////////

  //! Right-hand side of the j-th degenerate relation:
  //! -2 [r - j odd] a_j + [j even] a_{j+1}.
  template <typename T>
  T degenerate_relation_rhs(std::vector<T> const& a, std::size_t j, T zero) {
    std::size_t const r   = a.size() - 1;
    T                 out = zero;
    if ((r - j) % 2 == 1) {
      out -= a[j] + a[j];
    }
    if (j % 2 == 0) {
      out += a[j + 1];
    }
    return out;
  }

  //! Solves the degenerate relations
  //!   sum_{mu=0}^{r-j-1} w_mu a_{mu+j+1} = rhs_j,  j = r-1, ..., 0
  //! for w_0..w_{r-1} (the system is unitriangular since a_r = 1), then
  //! extends by sum_j a_j w_{j+l} = 0.  Returns w_0..w_N.
  template <typename T>
  std::vector<T> solve_degenerate_relations(std::vector<T> const& a,
                                            std::size_t           N,
                                            T                     zero) {
    std::size_t const r = a.size() - 1;
    std::vector<T>    w(std::max(N + 1, r), zero);
    for (std::size_t jj = r; jj-- > 0;) {
      // Unknown is w_{r-j-1}.
      std::size_t const top = r - jj - 1;
      T                 acc = degenerate_relation_rhs(a, jj, zero);
      for (std::size_t mu = 0; mu < top; ++mu) {
        acc -= w[mu] * a[mu + jj + 1];
      }
      w[top] = acc;
    }
    for (std::size_t k = r; k <= N; ++k) {
      T acc = zero;
      for (std::size_t j = 0; j < r; ++j) {
        acc -= a[j] * w[k - r + j];
      }
      w[k] = acc;
    }
    w.resize(N + 1, zero);
    return w;
  }

  //! H_0..H_N in r variables.
  inline std::vector<MPoly> universal_H_all(std::size_t N, Symbolic const& s) {
    detail::check_caps(s, N);
    return solve_degenerate_relations(char_poly_coeffs(s), N, MPoly(s.r));
  }

  inline MPoly universal_H(std::size_t a, Symbolic const& s) {
    return universal_H_all(a, s)[a];
  }

}  // namespace cbmw

#endif  // CBMW_SYMFUN_HPP_
