#ifndef CBMW_ADM_DEGENERATE_HPP_
#define CBMW_ADM_DEGENERATE_HPP_

// Admissibility of degenerate parameters: the recursion, the r linear
// relations, and agreement with eta^+(u).

#include <string>
#include <vector>

#include "error.hpp"
#include "omega.hpp"
#include "params.hpp"
#include "report.hpp"
#include "sampling.hpp"
#include "symfun.hpp"

namespace cbmw {

  //! Default number of recursion steps verified.
  inline constexpr std::size_t default_bound = 20;

  namespace detail {
    inline void require_degenerate(ParamSet const& p) {
      if (!p.is_degenerate()) {
        throw Error(ErrorCode::precondition, "degenerate parameters expected");
      }
    }

    inline std::vector<FieldValue> full_char_poly(ParamSet const& p) {
      return CharPolyCoeffs(p.u(), p.field()).coeffs();
    }

    // Checks sum_j a_j w_{j+l} = 0 for 0 <= l <= bound.
    inline CriterionResult recursion_result(std::vector<FieldValue> const& a,
                                            OmegaSeq const&                w,
                                            std::size_t                    bound) {
      std::size_t const r = a.size() - 1;
      if (w.size() < r + bound + 1) {
        throw Error(ErrorCode::insufficient_prefix,
                    "recursion up to l = " + std::to_string(bound)
                        + " needs w_0..w_" + std::to_string(r + bound)
                        + ", have " + std::to_string(w.size()) + " terms");
      }
      for (std::size_t l = 0; l <= bound; ++l) {
        FieldValue acc = w.field().zero();
        for (std::size_t j = 0; j <= r; ++j) {
          acc += a[j] * w[static_cast<long>(j + l)];
        }
        if (!acc.is_zero()) {
          return CriterionResult::failed(
              "recursion",
              Witness{"sum_j a_j w_{j+l} = 0", static_cast<long>(l),
                      acc.to_string(), "0"});
        }
      }
      return CriterionResult::passed(
          "recursion", "0 <= l <= " + std::to_string(bound));
    }
  }  // namespace detail

  inline AdmissibilityReport check_recursion(ParamSet const& params,
                                             std::size_t     bound = default_bound) {
    detail::require_degenerate(params);
    AdmissibilityReport rep;
    rep.add(detail::recursion_result(detail::full_char_poly(params),
                                     params.omega(), bound));
    return rep;
  }

  //! sum_{mu=0}^{r-j-1} w_mu a_{mu+j+1} = -2 [r-j odd] a_j + [j even] a_{j+1}
  //! for 0 <= j <= r-1.  The witness index is j.
  inline AdmissibilityReport check_relations(ParamSet const& params) {
    detail::require_degenerate(params);
    auto const        a = detail::full_char_poly(params);
    std::size_t const r = params.r();
    OmegaSeq const&   w = params.omega();
    if (w.size() < r) {
      throw Error(ErrorCode::insufficient_prefix,
                  "relations need w_0..w_" + std::to_string(r - 1));
    }
    Field const&        F = params.field();
    AdmissibilityReport rep;
    // Report the relation that pins down the lowest unknown first.
    for (std::size_t jj = r; jj-- > 0;) {
      FieldValue lhs = F.zero();
      for (std::size_t mu = 0; mu + jj + 1 <= r; ++mu) {
        lhs += w[static_cast<long>(mu)] * a[mu + jj + 1];
      }
      FieldValue const rhs = degenerate_relation_rhs(a, jj, F.zero());
      if (!(lhs == rhs)) {
        rep.add(CriterionResult::failed(
            "relations",
            Witness{"degenerate relation j", static_cast<long>(jj),
                    lhs.to_string(), rhs.to_string()}));
        return rep;
      }
    }
    rep.add(CriterionResult::passed("relations",
                                    std::to_string(r) + " relations"));
    return rep;
  }

  //! w_a = eta^+_a(u) in the parameter field for 0 <= a <= bound.
  inline AdmissibilityReport check_u_admissible(ParamSet const& params,
                                                std::size_t     bound
                                                = default_bound) {
    detail::require_degenerate(params);
    OmegaSeq const& w = params.omega();
    if (w.size() < bound + 1) {
      throw Error(ErrorCode::insufficient_prefix,
                  "comparison up to a = " + std::to_string(bound)
                      + " needs " + std::to_string(bound + 1) + " terms");
    }
    auto const eta = eta_all(Sign::plus, bound, params.u(), params.field());
    AdmissibilityReport rep;
    for (std::size_t a = 0; a <= bound; ++a) {
      if (!(w[static_cast<long>(a)] == eta[a])) {
        rep.add(CriterionResult::failed(
            "u-admissible",
            Witness{"w_a = eta^+_a(u)", static_cast<long>(a),
                    w[static_cast<long>(a)].to_string(), eta[a].to_string()}));
        return rep;
      }
    }
    rep.add(CriterionResult::passed("u-admissible",
                                    "0 <= a <= " + std::to_string(bound)));
    return rep;
  }

  //! Recursion up to l = bound, the r relations, and eta^+ agreement up to
  //! a = bound + r: the two sides of the degenerate equivalence.
  inline AdmissibilityReport check_degenerate(ParamSet const& params,
                                              std::size_t     bound
                                              = default_bound) {
    AdmissibilityReport rep = check_recursion(params, bound);
    rep.merge(check_relations(params));
    rep.merge(check_u_admissible(params, bound + params.r()));
    return rep;
  }

  enum class SampleMix { admissible, perturbed, mixed };

  struct SampleSpec {
    Field         field = Field::rational();
    std::size_t   count = 100;
    std::size_t   max_r = 4;
    std::uint64_t seed  = 1;
    std::size_t   bound = default_bound;
    SampleMix     mix   = SampleMix::mixed;
  };

  namespace detail {
    inline SampleMix pick_mix(SampleMix m, std::size_t i) {
      if (m != SampleMix::mixed) {
        return m;
      }
      return i % 3 == 0 ? SampleMix::admissible : SampleMix::perturbed;
    }
  }  // namespace detail

  //! Random degenerate parameter set with w_0..w_{bound+r}.  Perturbed
  //! samples either shift one w_a (a <= bound + r) or take random initial
  //! values continued by the recursion.
  inline ParamSet sample_degenerate(Field const& F,
                                    std::size_t  r,
                                    std::size_t  bound,
                                    SampleMix    mix,
                                    Rng&         rng) {
    auto const        u = random_roots(F, r, rng);
    std::size_t const N = bound + r;
    OmegaSeq          w = omega_from_u_degenerate(F, u, N);
    if (mix == SampleMix::perturbed) {
      if (rng() % 2 == 0) {
        w = w.perturbed(static_cast<long>(random_index(rng, 0, N)),
                        random_element(F, rng, true));
      } else {
        OmegaSeq init(F, random_roots(F, r, rng));
        w = extend_by_recursion(init, closure_from_roots(u, F), N);
      }
    }
    return ParamSet::degenerate(u, w);
  }

  //! recursion and relations  <=>  u-admissible, over random samples.
  inline HarnessReport equivalence_harness_degenerate(SampleSpec const& spec) {
    Rng           rng(spec.seed);
    HarnessReport out;
    for (std::size_t i = 0; i < spec.count; ++i) {
      std::size_t const r  = random_index(rng, 1, spec.max_r);
      ParamSet const    p  = sample_degenerate(spec.field, r, spec.bound,
                                            detail::pick_mix(spec.mix, i), rng);
      bool const left = check_recursion(p, spec.bound).pass()
                        && check_relations(p).pass();
      bool const right = check_u_admissible(p, spec.bound + r).pass();
      ++out.samples;
      out.left_passes += left;
      out.right_passes += right;
      if (left == right) {
        ++out.agreements;
      } else {
        std::string d = "sample " + std::to_string(i) + " over "
                        + spec.field.name() + ", u = (";
        for (std::size_t k = 0; k < r; ++k) {
          d += (k ? ", " : "") + p.u()[k].to_string();
        }
        out.discrepancies.push_back(d + ")");
      }
    }
    return out;
  }

}  // namespace cbmw

#endif  // CBMW_ADM_DEGENERATE_HPP_
