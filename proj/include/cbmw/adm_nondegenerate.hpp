#ifndef CBMW_ADM_NONDEGENERATE_HPP_
#define CBMW_ADM_NONDEGENERATE_HPP_

// Admissibility of nondegenerate parameters, by the explicit relations on
// w_1..w_{r-1} and by the generating function Z(t).

#include <algorithm>
#include <string>
#include <vector>

#include "adm_degenerate.hpp"
#include "error.hpp"
#include "omega.hpp"
#include "params.hpp"
#include "report.hpp"
#include "rx_functions.hpp"
#include "sampling.hpp"

namespace cbmw {

  //! floor(n / 2) and ceil(n / 2) for n >= 0.
  constexpr long floor_half(long n) noexcept {
    return n >= 0 ? n / 2 : -((-n + 1) / 2);
  }
  constexpr long ceil_half(long n) noexcept {
    return -floor_half(-n);
  }

  //! sum_{j = lo}^{hi} a_{2j - l}; zero when lo > hi.
  inline FieldValue index_sum(std::vector<FieldValue> const& a,
                              long                           lo,
                              long                           hi,
                              long                           l,
                              Field const&                   F) {
    FieldValue acc = F.zero();
    for (long j = lo; j <= hi; ++j) {
      long const k = 2 * j - l;
      if (k < 0 || k >= static_cast<long>(a.size())) {
        throw Error(ErrorCode::index_out_of_range,
                    "a_" + std::to_string(k) + " in relation sum");
      }
      acc += a[static_cast<std::size_t>(k)];
    }
    return acc;
  }

  //! sum over max(l+1, ceil(r/2)) <= j <= floor((l+r)/2) of a_{2j-l}.
  inline FieldValue wy_upper_sum(std::vector<FieldValue> const& a,
                                 long                           l,
                                 Field const&                   F) {
    long const r = static_cast<long>(a.size()) - 1;
    return index_sum(a, std::max(l + 1, ceil_half(r)), floor_half(l + r), l, F);
  }

  //! sum over ceil(l/2) <= j <= min(l, ceil(r/2) - 1) of a_{2j-l}.
  inline FieldValue wy_lower_sum(std::vector<FieldValue> const& a,
                                 long                           l,
                                 Field const&                   F) {
    long const r = static_cast<long>(a.size()) - 1;
    return index_sum(a, ceil_half(l), std::min(l, ceil_half(r) - 1), l, F);
  }

  namespace detail {
    inline void require_nondegenerate(ParamSet const& p) {
      if (p.is_degenerate()) {
        throw Error(ErrorCode::precondition, "nondegenerate parameters expected");
      }
    }
  }  // namespace detail

  //! The relations
  //!   c sum_{j=1}^{r-l} a_{j+l} w_j
  //!     = -rho (a_l - a_{r-l}/a_0) + c (upper sum - lower sum),
  //! 1 <= l <= r-1, together with the recursion on the stored prefix, the
  //! basic relation for w_0 and the constraint on rho.
  inline AdmissibilityReport wilcox_yu_check(ParamSet const& params) {
    detail::require_nondegenerate(params);
    Field const&      F   = params.field();
    FieldValue const  c   = nonzero_q_diff(params.q());
    FieldValue const& rho = params.rho();
    auto const        a   = CharPolyCoeffs(params.u(), F).coeffs();
    long const        r   = static_cast<long>(params.r());
    OmegaSeq const&   w   = params.omega();
    if (a[0].is_zero()) {
      throw Error(ErrorCode::precondition, "a_0 must be invertible");
    }
    if (w.size() < static_cast<std::size_t>(r) + 1) {
      throw Error(ErrorCode::insufficient_prefix,
                  "need w_0..w_" + std::to_string(r));
    }
    AdmissibilityReport rep;

    FieldValue const blhs = rho.inverse() - rho;
    FieldValue const brhs = (params.q().inverse() - params.q()) * (w[0] - F.one());
    rep.add(blhs == brhs
                ? CriterionResult::passed("basic")
                : CriterionResult::failed(
                    "basic", Witness{"rho^{-1} - rho = (q^{-1} - q)(w_0 - 1)", 0,
                                     blhs.to_string(), brhs.to_string()}));

    rep.add(rho_constraint(params.u(), rho, params.q()));

    CriterionResult rel = CriterionResult::passed(
        "relations", std::to_string(std::max(r - 1, 0L)) + " relations");
    FieldValue const a0inv = a[0].inverse();
    for (long l = 1; l <= r - 1; ++l) {
      FieldValue lhs = F.zero();
      for (long j = 1; j <= r - l; ++j) {
        lhs += a[static_cast<std::size_t>(j + l)] * w[j];
      }
      lhs *= c;
      FieldValue rhs = -rho
                           * (a[static_cast<std::size_t>(l)]
                              - a[static_cast<std::size_t>(r - l)] * a0inv)
                       + c * (wy_upper_sum(a, l, F) - wy_lower_sum(a, l, F));
      if (!(lhs == rhs)) {
        rel = CriterionResult::failed(
            "relations", Witness{"relation l", l, lhs.to_string(), rhs.to_string()});
        break;
      }
    }
    rep.add(rel);

    std::size_t const bound = w.size() - 1 - static_cast<std::size_t>(r);
    rep.add(detail::recursion_result(a, w, bound));
    return rep;
  }

  //! (q - q^{-1}) w^+(t) = Z(t): exactly for a closed sequence, otherwise on
  //! the coefficients w_0..w_bound.  Also checks the constraint on rho.
  inline AdmissibilityReport rui_xu_check(ParamSet const& params,
                                          std::size_t     bound = default_bound) {
    detail::require_nondegenerate(params);
    Field const&     F  = params.field();
    FieldValue const c  = nonzero_q_diff(params.q());
    auto const       rx = rx_functions(F, params.u(), params.rho(), params.q());
    OmegaSeq const&  w  = params.omega();

    AdmissibilityReport rep;
    rep.add(rho_constraint(params.u(), params.rho(), params.q()));

    auto witness_at = [&](SeriesInvT const& lhs, SeriesInvT const& rhs,
                          std::string const& how) {
      for (std::size_t i = 0; i <= static_cast<std::size_t>(lhs.order()); ++i) {
        if (!(lhs[i] == rhs[i])) {
          return CriterionResult::failed(
              "generating-function",
              Witness{"(q - q^{-1}) w_a = [t^-a] Z", static_cast<long>(i),
                      lhs[i].to_string(), rhs[i].to_string()},
              how);
        }
      }
      return CriterionResult::passed("generating-function", how);
    };

    if (w.has_closure()) {
      RatFunc const lhs = wplus_ratfunc(w) * c;
      if (lhs == rx.Z) {
        rep.add(CriterionResult::passed("generating-function", "exact"));
      } else {
        // Distinct rational functions differ within this many coefficients.
        auto const n = static_cast<std::size_t>(
            lhs.den().degree() + rx.Z.den().degree()
            + std::max(lhs.num().degree(), rx.Z.num().degree()) + 1);
        rep.add(witness_at(series_expand(lhs, n), series_expand(rx.Z, n),
                           "exact"));
      }
      return rep;
    }
    if (w.size() < bound + 1) {
      throw Error(ErrorCode::insufficient_prefix,
                  "comparison up to a = " + std::to_string(bound) + " needs "
                      + std::to_string(bound + 1) + " terms");
    }
    std::vector<FieldValue> cw;
    for (std::size_t a = 0; a <= bound; ++a) {
      cw.push_back(c * w[static_cast<long>(a)]);
    }
    rep.add(witness_at(SeriesInvT(F, cw), series_expand(rx.Z, bound),
                       "to order " + std::to_string(bound)));
    return rep;
  }

  //! Random nondegenerate parameter set with w_0..w_bound and no closure.
  //! Perturbed samples shift some w_a (a >= 1), replace rho by a value
  //! outside the allowed set (w_0 re-solved from the basic relation), or
  //! continue random initial values by the recursion.
  inline ParamSet sample_nondegenerate(Field const& F,
                                       std::size_t  r,
                                       std::size_t  bound,
                                       SampleMix    mix,
                                       Rng&         rng) {
    auto const u = random_roots(F, r, rng, true);
    FieldValue q;
    do {
      q = random_element(F, rng, true);
    } while ((q - q.inverse()).is_zero());
    auto const       allowed = allowed_rho(u, q);
    FieldValue const rho     = allowed[rng() % allowed.size()];
    OmegaSeq w = omega_from_u_nondegenerate(F, rho, q, u, bound).without_closure();
    if (mix != SampleMix::perturbed) {
      return ParamSet::nondegenerate(u, rho, q, w);
    }
    switch (rng() % 3) {
      case 0:
        return ParamSet::nondegenerate(
            u, rho, q,
            w.perturbed(static_cast<long>(random_index(rng, 1, bound)),
                        random_element(F, rng, true)));
      case 1: {
        FieldValue bad;
        do {
          bad = random_element(F, rng, true);
        } while (std::find(allowed.begin(), allowed.end(), bad) != allowed.end());
        std::vector<FieldValue> pre = w.prefix();
        pre[0]                      = omega0_from_basic_relation(bad, q);
        return ParamSet::nondegenerate(u, bad, q, OmegaSeq(F, pre));
      }
      default: {
        std::vector<FieldValue> init{omega0_from_basic_relation(rho, q)};
        for (std::size_t k = 1; k < r; ++k) {
          init.push_back(random_element(F, rng));
        }
        OmegaSeq ext = extend_by_recursion(OmegaSeq(F, init),
                                           closure_from_roots(u, F), bound);
        return ParamSet::nondegenerate(u, rho, q, ext.without_closure());
      }
    }
  }

  //! Explicit relations  <=>  generating-function criterion, over random
  //! samples.
  inline HarnessReport equivalence_harness_nondegenerate(SampleSpec const& spec) {
    Rng           rng(spec.seed);
    HarnessReport out;
    for (std::size_t i = 0; i < spec.count; ++i) {
      std::size_t const r = random_index(rng, 1, spec.max_r);
      ParamSet const    p = sample_nondegenerate(spec.field, r, spec.bound,
                                              detail::pick_mix(spec.mix, i), rng);
      bool const left  = wilcox_yu_check(p).pass();
      bool const right = rui_xu_check(p, spec.bound).pass();
      ++out.samples;
      out.left_passes += left;
      out.right_passes += right;
      if (left == right) {
        ++out.agreements;
      } else {
        std::string d = "sample " + std::to_string(i) + " over "
                        + spec.field.name() + ", rho = " + p.rho().to_string()
                        + ", q = " + p.q().to_string() + ", u = (";
        for (std::size_t k = 0; k < r; ++k) {
          d += (k ? ", " : "") + p.u()[k].to_string();
        }
        out.discrepancies.push_back(d + ")");
      }
    }
    return out;
  }

}  // namespace cbmw

#endif  // CBMW_ADM_NONDEGENERATE_HPP_
