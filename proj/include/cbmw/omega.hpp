#ifndef CBMW_OMEGA_HPP_
#define CBMW_OMEGA_HPP_

// Generating, extending and analysing omega sequences.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "params.hpp"
#include "ratfunc.hpp"
#include "report.hpp"
#include "rx_functions.hpp"
#include "series.hpp"
#include "symfun.hpp"

namespace cbmw {

  //! Default largest index generated from roots: 2r + 8.
  inline std::size_t default_omega_order(std::size_t r) noexcept {
    return 2 * r + 8;
  }

  //! a_0..a_{r-1} of prod (y - u_j), the monic closing recursion.
  inline std::vector<FieldValue> closure_from_roots(std::span<FieldValue const> u,
                                                    Field const&                F) {
    auto a = CharPolyCoeffs(u, F).coeffs();
    a.pop_back();
    return a;
  }

  //! w_a = eta^+_a(u) for 0 <= a <= N, closed by prod (y - u_j).
  inline OmegaSeq omega_from_u_degenerate(Field const&                F,
                                          std::span<FieldValue const> u,
                                          std::optional<std::size_t>  N
                                          = std::nullopt) {
    std::size_t const n = N.value_or(default_omega_order(u.size()));
    return OmegaSeq(F, eta_all(Sign::plus, n, u, F), closure_from_roots(u, F));
  }

  //! Symbolic counterpart: w_a = eta^+_a as polynomials in r variables.
  inline std::vector<MPoly> omega_from_u_degenerate(Symbolic const& s,
                                                    std::size_t     N) {
    return eta_all(Sign::plus, N, s);
  }

  //! Coefficients of Z(t)/(q - q^{-1}) at infinity, w_0..w_N, closed by
  //! prod (y - u_j).  Rejects q - q^{-1} = 0 and rho outside the allowed set.
  inline OmegaSeq omega_from_u_nondegenerate(Field const&                F,
                                             FieldValue const&           rho,
                                             FieldValue const&           q,
                                             std::span<FieldValue const> u,
                                             std::optional<std::size_t>  N
                                             = std::nullopt) {
    std::size_t const n = N.value_or(default_omega_order(u.size()));
    FieldValue const  c = nonzero_q_diff(q);
    for (auto const& x : u) {
      if (x.is_zero()) {
        throw Error(ErrorCode::precondition, "roots must be invertible");
      }
    }
    auto const rc = rho_constraint(u, rho, q);
    if (!rc.pass) {
      throw Error(ErrorCode::constraint_violation,
                  "rho = " + rc.witness->lhs + " is not in the allowed set "
                      + rc.witness->rhs + " (" + rc.detail + ")");
    }
    auto const rx = rx_functions(F, u, rho, q);
    auto       s  = series_expand(rx.Z * c.inverse(), n);
    return OmegaSeq(F, s.coeffs(), closure_from_roots(u, F));
  }

  //! Extends the prefix to w_0..w_N with w_{r+l} = -sum_{j<r} a_j w_{j+l}
  //! and records the closure.
  inline OmegaSeq extend_by_recursion(OmegaSeq const&                seq,
                                      std::vector<FieldValue> const& a,
                                      std::size_t                    N) {
    std::size_t const r = a.size();
    if (seq.size() < r) {
      throw Error(ErrorCode::insufficient_prefix,
                  "need " + std::to_string(r) + " initial terms, have "
                      + std::to_string(seq.size()));
    }
    std::vector<FieldValue> w = seq.prefix();
    while (w.size() <= N) {
      std::size_t const l   = w.size() - r;
      FieldValue        acc = seq.field().zero();
      for (std::size_t j = 0; j < r; ++j) {
        acc -= a[j] * w[l + j];
      }
      w.push_back(acc);
    }
    return OmegaSeq(seq.field(), std::move(w), a, seq.negative());
  }

  //! Solves
  //!   -w_a + w_{-a} + rho c sum_{i=1}^{a} (w_{a-i} w_{-i} - w_{a-2i}) = 0
  //! for w_{-1}..w_{-M}, c = q - q^{-1}.  The unknown w_{-a} carries the
  //! coefficient 1 + rho c (w_0 - 1) = rho^2.  The closure is kept only if
  //! the enlarged window still satisfies it.
  inline OmegaSeq omega_negative(ParamSet const& params, std::size_t M) {
    if (params.is_degenerate()) {
      throw Error(ErrorCode::precondition,
                  "negative indices need nondegenerate parameters");
    }
    OmegaSeq const& w = params.omega();
    if (w.size() < M + 1) {
      throw Error(ErrorCode::insufficient_prefix,
                  "w_0..w_" + std::to_string(M) + " required");
    }
    Field const&      F    = params.field();
    FieldValue const  rc   = params.rho() * params.q_diff();
    FieldValue const  lead = F.one() + rc * (w[0] - F.one());
    FieldValue const  inv  = lead.inverse();
    std::vector<FieldValue> neg;  // neg[i-1] = w_{-i}
    auto get = [&](long k) -> FieldValue const& {
      return k >= 0 ? w[k] : neg[static_cast<std::size_t>(-k - 1)];
    };
    for (long a = 1; a <= static_cast<long>(M); ++a) {
      // Everything except the w_{-a} terms (i = a in both products).
      FieldValue known = -w[a];
      FieldValue sum   = F.zero();
      for (long i = 1; i < a; ++i) {
        sum += get(a - i) * get(-i) - get(a - 2 * i);
      }
      known += rc * sum;
      neg.push_back(-known * inv);
    }
    if (w.has_closure()) {
      OmegaSeq probe(F, w.prefix(), std::nullopt, neg);
      // Re-attach the closure only when it holds on the negative window too.
      std::vector<FieldValue> const& a = *w.closure();
      long const r = static_cast<long>(a.size());
      bool       ok = true;
      for (long l = -static_cast<long>(neg.size()); ok && l < 0; ++l) {
        if (l + r >= static_cast<long>(w.size())) {
          break;
        }
        FieldValue acc = probe[l + r];
        for (long j = 0; j < r; ++j) {
          acc += a[static_cast<std::size_t>(j)] * probe[l + j];
        }
        ok = acc.is_zero();
      }
      if (ok) {
        return OmegaSeq(F, w.prefix(), a, neg);
      }
      return probe;
    }
    return OmegaSeq(F, w.prefix(), std::nullopt, neg);
  }

  //! w^+(t) = sum_{a>=0} w_a t^{-a} as p(t)^{-1} q_1(t), where
  //! q_1(t) = sum_{k=1}^{r} (sum_{j=k}^{r} a_j w_{j-k}) t^k.
  inline RatFunc wplus_ratfunc(OmegaSeq const& seq) {
    if (!seq.has_closure()) {
      throw Error(ErrorCode::closure_absent,
                  "w^+ is rational only for a closed sequence");
    }
    Field const& F = seq.field();
    auto         a = *seq.closure();
    a.push_back(F.one());
    std::size_t const r = a.size() - 1;
    if (seq.size() < r) {
      throw Error(ErrorCode::insufficient_prefix,
                  "need w_0..w_" + std::to_string(r - 1));
    }
    std::vector<FieldValue> num(r + 1, F.zero());
    for (std::size_t k = 1; k <= r; ++k) {
      for (std::size_t j = k; j <= r; ++j) {
        num[k] += a[j] * seq[static_cast<long>(j - k)];
      }
    }
    return RatFunc(Poly(F, std::move(num)), Poly(F, std::move(a)));
  }

  //! w^-(t) = -w^+(1/t) = sum_{a>=1} w_{-a} t^{-a}.
  inline RatFunc wminus_ratfunc(OmegaSeq const& seq) {
    return -substitute_inverse_t(wplus_ratfunc(seq));
  }

  namespace detail {
    // Left factor w^+ - t^2/(t^2-1) + rho^{-1}/c, right factor
    // w^- - 1/(t^2-1) - rho^{-1}/c, target t^2/(t^2-1)^2 - 1/c^2.
    struct PmPieces {
      RatFunc t2;    // t^2/(t^2-1)
      RatFunc inv;   // 1/(t^2-1)
      RatFunc k;     // rho^{-1}/c
      RatFunc rhs;
    };

    inline PmPieces pm_pieces(ParamSet const& p) {
      Field const&     F   = p.field();
      FieldValue const c   = nonzero_q_diff(p.q());
      RatFunc const    t   = RatFunc::t(F);
      RatFunc const    one = RatFunc::constant(F.one());
      RatFunc const    d   = t * t - one;
      PmPieces         out{t * t / d, one / d,
                   RatFunc::constant(p.rho().inverse() / c), RatFunc(F)};
      out.rhs = t * t / (d * d) - RatFunc::constant((c * c).inverse());
      return out;
    }

    inline std::optional<std::size_t> first_difference(SeriesInvT const& x,
                                                       SeriesInvT const& y) {
      auto const n = static_cast<std::size_t>(std::min(x.order(), y.order()) + 1);
      for (std::size_t i = 0; i < n; ++i) {
        if (!(x[i] == y[i])) {
          return i;
        }
      }
      return std::nullopt;
    }
  }  // namespace detail

  //! Checks
  //!   [w^+ - t^2/(t^2-1) + rho^{-1}/c][w^- - 1/(t^2-1) - rho^{-1}/c]
  //!     = t^2/(t^2-1)^2 - 1/c^2.
  //! With a closure both sides are compared as rational functions, using
  //! w^- = -w^+(1/t).  Otherwise the t^{-1} expansions are compared as far
  //! as the data reaches; the negative part is taken from the stored
  //! w_{-a} when present, else from the iterative solve.
  inline AdmissibilityReport verify_pm_identity(ParamSet const& params) {
    if (params.is_degenerate()) {
      throw Error(ErrorCode::precondition,
                  "the w^+ w^- identity needs nondegenerate parameters");
    }
    Field const&        F  = params.field();
    auto const          pc = detail::pm_pieces(params);
    AdmissibilityReport report;
    OmegaSeq const&     w  = params.omega();

    if (w.has_closure()) {
      RatFunc const wp  = wplus_ratfunc(w);
      RatFunc const wm  = wminus_ratfunc(w);
      RatFunc const lhs = (wp - pc.t2 + pc.k) * (wm - pc.inv - pc.k);
      if (lhs == pc.rhs) {
        report.add(CriterionResult::passed("pm-identity", "exact"));
        return report;
      }
      std::size_t const n  = static_cast<std::size_t>(
          lhs.den().degree() + pc.rhs.den().degree()
          + std::max(lhs.num().degree(), pc.rhs.num().degree()) + 2);
      auto const sl = series_expand(lhs, n);
      auto const sr = series_expand(pc.rhs, n);
      auto const i  = detail::first_difference(sl, sr).value_or(0);
      report.add(CriterionResult::failed(
          "pm-identity",
          Witness{"coefficient of t^-k", static_cast<long>(i),
                  sl[i].to_string(), sr[i].to_string()},
          "exact"));
      return report;
    }

    std::vector<FieldValue> neg = w.negative();
    std::string             how = "truncated, stored negative part";
    if (neg.empty()) {
      neg = omega_negative(params, w.size() - 1).negative();
      // The solve is this identity read coefficientwise, so this path
      // cannot fail; only stored negative parts or a closure test anything.
      how = "truncated, negative part solved iteratively (holds by construction)";
    }
    std::size_t const N = std::min(w.size() - 1, neg.size());
    std::vector<FieldValue> wm(N + 1, F.zero());
    for (std::size_t a = 1; a <= N; ++a) {
      wm[a] = neg[a - 1];
    }
    std::vector<FieldValue> wp(w.prefix().begin(), w.prefix().begin() + N + 1);
    SeriesInvT const k   = series_expand(pc.k, N);
    SeriesInvT const L   = SeriesInvT(F, wp) - series_expand(pc.t2, N) + k;
    SeriesInvT const R   = SeriesInvT(F, wm) - series_expand(pc.inv, N) - k;
    SeriesInvT const lhs = L * R;
    SeriesInvT const rhs = series_expand(pc.rhs, N);
    if (auto i = detail::first_difference(lhs, rhs)) {
      report.add(CriterionResult::failed(
          "pm-identity",
          Witness{"coefficient of t^-k", static_cast<long>(*i),
                  lhs[*i].to_string(), rhs[*i].to_string()},
          how));
    } else {
      report.add(CriterionResult::passed("pm-identity",
                                         how + " to order " + std::to_string(N)));
    }
    return report;
  }

}  // namespace cbmw

#endif  // CBMW_OMEGA_HPP_
