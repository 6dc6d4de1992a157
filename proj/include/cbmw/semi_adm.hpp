#ifndef CBMW_SEMI_ADM_HPP_
#define CBMW_SEMI_ADM_HPP_

// Detection of d-semi-admissible parameters: the smallest sub-collections
// of the roots for which the omega sequence is admissible.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "adm_degenerate.hpp"
#include "adm_nondegenerate.hpp"
#include "counting.hpp"
#include "error.hpp"
#include "omega.hpp"
#include "params.hpp"
#include "symfun.hpp"

namespace cbmw {

  //! Largest root count searched over all sub-collections.
  inline constexpr std::size_t max_detect_roots = 8;

  struct SemiAdmissibilityResult {
    enum class Outcome { admissible, semi_admissible, hecke_collapse };

    Outcome outcome = Outcome::hecke_collapse;
    //! r when admissible, the minimal size when semi-admissible, 0 otherwise.
    std::size_t d = 0;
    //! 0-based root indices of every minimal passing sub-collection, one
    //! representative per multiset of root values.
    std::vector<std::vector<std::size_t>> subsets;
    //! Root values of each subset.
    std::vector<std::vector<FieldValue>> roots;
    //! b_0..b_d of prod (y - v_j) for each subset.
    std::vector<std::vector<FieldValue>> p0;
  };

  inline char const* to_string(SemiAdmissibilityResult::Outcome o) noexcept {
    switch (o) {
      case SemiAdmissibilityResult::Outcome::admissible: return "admissible";
      case SemiAdmissibilityResult::Outcome::semi_admissible:
        return "semi-admissible";
      case SemiAdmissibilityResult::Outcome::hecke_collapse:
        return "hecke-collapse";
    }
    return "?";
  }

  //! Whether Omega is admissible for the given roots: w_a = eta^+_a(v) up to
  //! `bound` (degenerate), or the generating-function criterion to `bound`
  //! (nondegenerate).
  inline bool admissible_for(ParamSet const&                params,
                             std::vector<FieldValue> const& v,
                             std::size_t                    bound) {
    ParamSet const p = params.with_u(v);
    if (p.is_degenerate()) {
      return check_u_admissible(p, bound).pass();
    }
    return rui_xu_check(p.with_omega(p.omega().without_closure()), bound).pass();
  }

  inline SemiAdmissibilityResult detect(ParamSet const& params,
                                        std::size_t     bound = default_bound) {
    std::size_t const r = params.r();
    if (r > max_detect_roots) {
      throw Error(ErrorCode::cap_exceeded,
                  "sub-collection search over " + std::to_string(r)
                      + " roots (cap " + std::to_string(max_detect_roots) + ")");
    }
    SemiAdmissibilityResult out;
    Field const&            F = params.field();
    if (admissible_for(params, params.u(), bound)) {
      out.outcome = SemiAdmissibilityResult::Outcome::admissible;
      out.d       = r;
      std::vector<std::size_t> all(r);
      for (std::size_t i = 0; i < r; ++i) {
        all[i] = i;
      }
      out.subsets.push_back(all);
      out.roots.push_back(params.u());
      out.p0.push_back(CharPolyCoeffs(params.u(), F).coeffs());
      return out;
    }
    for (std::size_t d = 1; d < r; ++d) {
      std::set<std::vector<FieldValue>> seen;
      // Bitmasks with exactly d bits, in increasing numeric order.
      for (unsigned mask = 0; mask < (1u << r); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != d) {
          continue;
        }
        std::vector<std::size_t> idx;
        std::vector<FieldValue>  v;
        for (std::size_t i = 0; i < r; ++i) {
          if (mask & (1u << i)) {
            idx.push_back(i);
            v.push_back(params.u()[i]);
          }
        }
        std::vector<FieldValue> key = v;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) {
          continue;
        }
        if (admissible_for(params, v, bound)) {
          out.subsets.push_back(idx);
          out.p0.push_back(CharPolyCoeffs(v, F).coeffs());
          out.roots.push_back(std::move(v));
        }
      }
      if (!out.subsets.empty()) {
        out.outcome = SemiAdmissibilityResult::Outcome::semi_admissible;
        out.d       = d;
        return out;
      }
    }
    return out;
  }

  //! Every violated requirement for a guaranteed d-semi-admissible example:
  //! characteristic not 2, u_i != +-u_j for all i, j (so no root is 0 and no
  //! two are equal or opposite), and u_i != +-1/2.
  inline std::vector<std::string> construct_example_violations(
      Field const&                   F,
      std::vector<FieldValue> const& base,
      std::vector<FieldValue> const& extra) {
    std::vector<std::string> out;
    if (F.characteristic() == 2) {
      out.push_back("characteristic 2 is excluded");
      return out;
    }
    if (base.empty()) {
      out.push_back("at least one base root is required");
    }
    if (extra.empty()) {
      out.push_back("at least one extra root is required");
    }
    std::vector<FieldValue> u = base;
    u.insert(u.end(), extra.begin(), extra.end());
    FieldValue const half = F.from_rational(mpq_class(1, 2));
    for (std::size_t i = 0; i < u.size(); ++i) {
      std::string const ui = "u_" + std::to_string(i + 1);
      if (u[i].is_zero()) {
        out.push_back(ui + " = 0 equals its own negative");
      }
      if (u[i] == half || u[i] == -half) {
        out.push_back(ui + " = " + u[i].to_string() + " is +-1/2");
      }
      for (std::size_t j = i + 1; j < u.size(); ++j) {
        std::string const uj = "u_" + std::to_string(j + 1);
        if (u[i] == u[j]) {
          out.push_back(ui + " = " + uj + " = " + u[i].to_string());
        } else if (u[i] == -u[j]) {
          out.push_back(ui + " = -" + uj + " (" + u[i].to_string() + ", "
                        + u[j].to_string() + ")");
        }
      }
    }
    return out;
  }

  //! Degenerate parameters with roots base followed by extra and
  //! Omega = eta^+(base), w_0..w_N (default N = 20 + r).
  inline ParamSet construct_example(Field const&                   F,
                                    std::size_t                    d,
                                    std::vector<FieldValue> const& extra,
                                    std::vector<FieldValue> const& base,
                                    std::optional<std::size_t>     N = std::nullopt) {
    if (d != base.size()) {
      throw Error(ErrorCode::invalid_argument,
                  "d = " + std::to_string(d) + " but "
                      + std::to_string(base.size()) + " base roots given");
    }
    auto const bad = construct_example_violations(F, base, extra);
    if (!bad.empty()) {
      std::string msg;
      for (auto const& b : bad) {
        msg += (msg.empty() ? "" : "; ") + b;
      }
      throw Error(ErrorCode::constraint_violation, msg);
    }
    std::vector<FieldValue> u = base;
    u.insert(u.end(), extra.begin(), extra.end());
    std::size_t const n = N.value_or(default_bound + u.size());
    return ParamSet::degenerate(u, omega_from_u_degenerate(F, base, n));
  }

}  // namespace cbmw

#endif  // CBMW_SEMI_ADM_HPP_
