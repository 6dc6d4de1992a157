#ifndef CBMW_RATIONALITY_HPP_
#define CBMW_RATIONALITY_HPP_

// Linear recursions of omega prefixes, recovery of roots in characteristic
// 2, and classification of affine parameters with rational w^+.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "adm_nondegenerate.hpp"
#include "error.hpp"
#include "omega.hpp"
#include "params.hpp"
#include "poly.hpp"
#include "ratfunc.hpp"
#include "report.hpp"

namespace cbmw {

  ////////////////////////////////////////////////////////////////////////
  // Minimal recursion (Berlekamp-Massey)
  ////////////////////////////////////////////////////////////////////////

  //! w_{L+l} + sum_{j<L} a_j w_{j+l} = 0 for 0 <= l < length - L.
  struct RecurrenceFit {
    std::size_t             order = 0;
    std::vector<FieldValue> coeffs;  // a_0..a_{L-1}
    std::size_t             length = 0;

    //! y^L + sum a_j y^j.
    Poly characteristic_polynomial(Field const& F) const {
      auto c = coeffs;
      c.push_back(F.one());
      return Poly(F, std::move(c));
    }
  };

  //! Shortest recursion generating the whole prefix.  Succeeds only when the
  //! prefix over-determines it (2L < length); otherwise any L-term prefix
  //! would be fitted trivially.
  inline RecurrenceFit fit_recurrence(std::vector<FieldValue> const& s,
                                      Field const&                   F) {
    // Connection polynomial C with s_n + sum_{i=1}^{L} C_i s_{n-i} = 0.
    std::vector<FieldValue> C{F.one()}, B{F.one()};
    std::size_t             L = 0, m = 1;
    FieldValue              b = F.one();
    for (std::size_t n = 0; n < s.size(); ++n) {
      FieldValue d = s[n];
      for (std::size_t i = 1; i <= L && i < C.size(); ++i) {
        d += C[i] * s[n - i];
      }
      if (d.is_zero()) {
        ++m;
        continue;
      }
      std::vector<FieldValue> T    = C;
      FieldValue const        coef = d / b;
      if (C.size() < B.size() + m) {
        C.resize(B.size() + m, F.zero());
      }
      for (std::size_t i = 0; i < B.size(); ++i) {
        C[i + m] -= coef * B[i];
      }
      if (2 * L <= n) {
        L = n + 1 - L;
        B = std::move(T);
        b = d;
        m = 1;
      } else {
        ++m;
      }
    }
    if (2 * L >= s.size()) {
      throw Error(ErrorCode::no_recursion,
                  "no recursion of order < " + std::to_string((s.size() + 1) / 2)
                      + " fits the " + std::to_string(s.size()) + " given terms");
    }
    C.resize(L + 1, F.zero());
    RecurrenceFit fit{L, {}, s.size()};
    for (std::size_t j = 0; j < L; ++j) {
      fit.coeffs.push_back(C[L - j]);
    }
    return fit;
  }

  ////////////////////////////////////////////////////////////////////////
  // Weak admissibility
  ////////////////////////////////////////////////////////////////////////

  //! 2 w_{2a+1} = -w_{2a} + sum_{b=1}^{2a+1} (-1)^{b-1} w_{b-1} w_{2a+1-b}
  //! for every a the prefix reaches; in characteristic 2 additionally
  //! w_{2a} = w_a^2.
  inline AdmissibilityReport weak_admissibility_check(
      std::vector<FieldValue> const& w,
      Field const&                   F) {
    AdmissibilityReport rep;
    CriterionResult     odd = CriterionResult::passed("weak-odd");
    for (std::size_t a = 0; 2 * a + 1 < w.size(); ++a) {
      FieldValue const lhs = F.from_int(2) * w[2 * a + 1];
      FieldValue       rhs = -w[2 * a];
      for (std::size_t b = 1; b <= 2 * a + 1; ++b) {
        FieldValue t = w[b - 1] * w[2 * a + 1 - b];
        rhs += (b % 2 == 1) ? t : -t;
      }
      if (!(lhs == rhs)) {
        odd = CriterionResult::failed(
            "weak-odd",
            Witness{"2 w_{2a+1} = -w_{2a} + sum (-1)^{b-1} w_{b-1} w_{2a+1-b}",
                    static_cast<long>(a), lhs.to_string(), rhs.to_string()});
        break;
      }
    }
    rep.add(odd);
    if (F.characteristic() == 2) {
      CriterionResult sq = CriterionResult::passed("frobenius");
      for (std::size_t a = 0; 2 * a < w.size(); ++a) {
        FieldValue const rhs = w[a] * w[a];
        if (!(w[2 * a] == rhs)) {
          sq = CriterionResult::failed(
              "frobenius", Witness{"w_{2a} = w_a^2", static_cast<long>(a),
                                   w[2 * a].to_string(), rhs.to_string()});
          break;
        }
      }
      rep.add(sq);
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Characteristic 2
  ////////////////////////////////////////////////////////////////////////

  struct Char2Recovery {
    std::vector<FieldValue> roots;   // distinct, ascending
    FieldValue              omega0;  // 0 or 1
    //! roots when w_0 = [#roots odd], else roots followed by 0.
    std::vector<FieldValue> admissible_roots;
  };

  //! Recovers distinct u_i with w_a = sum u_i^a (a >= 1) from a prefix over
  //! a field of characteristic 2.
  inline Char2Recovery char2_recover(std::vector<FieldValue> const& w,
                                     Field const&                   F) {
    if (F.characteristic() != 2) {
      throw Error(ErrorCode::precondition, "characteristic 2 required");
    }
    if (w.size() < 2) {
      throw Error(ErrorCode::insufficient_prefix, "need w_0 and w_1");
    }
    auto const weak = weak_admissibility_check(w, F);
    if (!weak.pass()) {
      auto const* f = weak.first_failure();
      throw Error(ErrorCode::verification_failed,
                  "weak admissibility fails: " + f->witness->to_string());
    }
    if (!w[0].is_zero() && !w[0].is_one()) {
      throw Error(ErrorCode::verification_failed, "w_0 must be 0 or 1");
    }
    std::vector<FieldValue> const tail(w.begin() + 1, w.end());
    RecurrenceFit const           fit = fit_recurrence(tail, F);
    Poly const                    p   = fit.characteristic_polynomial(F);
    RootSplit const               rs  = find_roots(p);
    if (!rs.split()) {
      throw Error(ErrorCode::not_split,
                  p.to_string("y") + " does not split over " + F.name());
    }
    for (std::size_t i = 1; i < rs.roots.size(); ++i) {
      if (rs.roots[i] == rs.roots[i - 1]) {
        throw Error(ErrorCode::not_split,
                    p.to_string("y") + " has the repeated root "
                        + rs.roots[i].to_string());
      }
    }
    for (std::size_t a = 1; a < w.size(); ++a) {
      FieldValue const s = power_sum(a, rs.roots, F);
      if (!(s == w[a])) {
        throw Error(ErrorCode::verification_failed,
                    "w_" + std::to_string(a) + " = " + w[a].to_string()
                        + " but the power sum of the roots is " + s.to_string());
      }
    }
    Char2Recovery out{rs.roots, w[0], rs.roots};
    bool const    odd = rs.roots.size() % 2 == 1;
    if (w[0].is_one() != odd) {
      out.admissible_roots.push_back(F.zero());
    }
    return out;
  }

  //! w_0 = [#u odd] and w_a = sum u_i^a, the u-admissible sequence in
  //! characteristic 2.
  inline std::vector<FieldValue> power_sum_sequence(std::vector<FieldValue> const& u,
                                                    std::size_t                    N,
                                                    Field const&                   F) {
    std::vector<FieldValue> w{u.size() % 2 == 1 ? F.one() : F.zero()};
    for (std::size_t a = 1; a <= N; ++a) {
      w.push_back(power_sum(a, u, F));
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Affine classification
  ////////////////////////////////////////////////////////////////////////

  struct RationalityClassification {
    int                     case_tag = 0;  // 1..4
    int                     alpha    = 0;  // rho = (-1)^alpha prod u_j
    std::vector<FieldValue> roots;         // u_1..u_s, ascending
    std::vector<FieldValue> extension;     // {}, {1}, {-1} or {-1, 1}
    std::vector<FieldValue> admissible_roots;
    FieldValue              rho_recovered;
    AdmissibilityReport     certificate;  // rui_xu_check on the extension
  };

  namespace detail {
    // h(t) = -t^2/(t^2 - 1) + rho^{-1}/c and
    // B(t) = (t + q)(t - q^{-1}) / (c (t^2 - 1)).
    inline std::pair<RatFunc, RatFunc> h_and_b(Field const&      F,
                                               FieldValue const& rho,
                                               FieldValue const& q) {
      FieldValue const c   = nonzero_q_diff(q);
      RatFunc const    t   = RatFunc::t(F);
      RatFunc const    one = RatFunc::constant(F.one());
      RatFunc const    d   = t * t - one;
      RatFunc const    h   = -(t * t / d) + RatFunc::constant(rho.inverse() / c);
      RatFunc const    B   = (t + RatFunc::constant(q))
                        * (t - RatFunc::constant(q.inverse())) / (d * c);
      return {h, B};
    }

    // (-1)^alpha prod (t u - 1)/(t - u).
    inline RatFunc r_form(Field const& F, int alpha, std::vector<FieldValue> const& u) {
      RatFunc const t   = RatFunc::t(F);
      RatFunc const one = RatFunc::constant(F.one());
      RatFunc       R   = RatFunc::constant(alpha ? -F.one() : F.one());
      for (auto const& x : u) {
        R = R * (t * x - one) / (t - RatFunc::constant(x));
      }
      return R;
    }
  }  // namespace detail

  //! B(t) as used in the classification.
  inline RatFunc b_function(Field const& F, FieldValue const& q) {
    return detail::h_and_b(F, F.one(), q).second;
  }

  //! Nondegenerate parameters whose w^+ equals B(t) R(t) - h(t) with
  //! R = (-1)^alpha prod (t u - 1)/(t - u) and rho = (-1)^alpha prod u; the
  //! sequence w_0..w_N is closed by the denominator of w^+.
  inline ParamSet affine_params_from_form(Field const&                   F,
                                          int                            alpha,
                                          std::vector<FieldValue> const& u,
                                          FieldValue const&              q,
                                          std::optional<std::size_t>     N
                                          = std::nullopt) {
    FieldValue rho = alpha ? -F.one() : F.one();
    for (auto const& x : u) {
      if (x.is_zero()) {
        throw Error(ErrorCode::precondition, "roots must be invertible");
      }
      rho *= x;
    }
    auto const [h, B] = detail::h_and_b(F, rho, q);
    RatFunc const     w = B * detail::r_form(F, alpha, u) - h;
    std::size_t const n = N.value_or(default_omega_order(u.size() + 2));
    auto              s = series_expand(w, n);
    auto              a = w.den().coeffs();
    a.pop_back();
    return ParamSet::nondegenerate(u, rho, q, OmegaSeq(F, s.coeffs(), a));
  }

  //! Extracts alpha and the roots u_j with (w^+ + h)/B = (-1)^alpha
  //! prod (t u_j - 1)/(t - u_j), assigns the case, and certifies the
  //! extended root list by the generating-function criterion.
  inline RationalityClassification affine_classify(ParamSet const& params) {
    if (params.is_degenerate()) {
      throw Error(ErrorCode::precondition, "nondegenerate parameters expected");
    }
    Field const&      F   = params.field();
    FieldValue const& rho = params.rho();
    FieldValue const& q   = params.q();
    nonzero_q_diff(q);
    OmegaSeq const& w = params.omega();
    if (!w.has_closure()) {
      throw Error(ErrorCode::closure_absent,
                  "classification needs a closed (rational) w^+");
    }
    RatFunc const wp = wplus_ratfunc(w);
    if (wp.has_pole_at_infinity() || wp.den()(F.zero()).is_zero()) {
      throw Error(ErrorCode::precondition, "w^+ has a pole at 0 or infinity");
    }
    // w^-(t) = -w^+(1/t) against the iteratively solved negative part.
    {
      std::size_t const M   = w.size() - 1;
      auto const        neg = w.negative().empty()
                                  ? omega_negative(params, M).negative()
                                  : w.negative();
      auto const        sm  = series_expand(wminus_ratfunc(w), neg.size());
      for (std::size_t a = 1; a <= neg.size(); ++a) {
        if (!(sm[a] == neg[a - 1])) {
          throw Error(ErrorCode::precondition,
                      "w^-(t) = -w^+(1/t) fails at w_-" + std::to_string(a)
                          + ": " + neg[a - 1].to_string() + " vs "
                          + sm[a].to_string());
        }
      }
    }
    auto const [h, B] = detail::h_and_b(F, rho, q);
    RatFunc const R   = (wp + h) / B;
    if (R.num().degree() != R.den().degree()) {
      throw Error(ErrorCode::verification_failed,
                  "R(t) = " + R.to_string() + " is not of degree 0 at infinity");
    }
    if (R.den()(F.zero()).is_zero() || R.num()(F.zero()).is_zero()) {
      throw Error(ErrorCode::verification_failed,
                  "R(t) = " + R.to_string() + " has a zero or pole at t = 0");
    }
    RootSplit const rs = find_roots(R.den());
    if (!rs.split()) {
      throw Error(ErrorCode::not_split,
                  "denominator of R(t) does not split over " + F.name());
    }
    RationalityClassification out;
    out.roots = rs.roots;
    bool matched = false;
    for (int alpha : {0, 1}) {
      if (detail::r_form(F, alpha, out.roots) == R) {
        out.alpha = alpha;
        matched   = true;
        break;
      }
    }
    if (!matched) {
      throw Error(ErrorCode::verification_failed,
                  "R(t) = " + R.to_string()
                      + " is not +-prod (t u - 1)/(t - u)");
    }
    FieldValue prod = out.alpha ? -F.one() : F.one();
    for (auto const& x : out.roots) {
      prod *= x;
    }
    out.rho_recovered = prod;
    if (!(prod == rho)) {
      throw Error(ErrorCode::verification_failed,
                  "(-1)^alpha prod u = " + prod.to_string() + " differs from rho = "
                      + rho.to_string());
    }
    bool const odd = out.roots.size() % 2 == 1;
    if (out.alpha == 0 && odd) {
      out.case_tag = 1;
    } else if (out.alpha == 1 && odd) {
      out.case_tag  = 2;
      out.extension = {-F.one(), F.one()};
    } else if (out.alpha == 0) {
      out.case_tag  = 3;
      out.extension = {F.one()};
    } else {
      out.case_tag  = 4;
      out.extension = {-F.one()};
    }
    out.admissible_roots = out.roots;
    out.admissible_roots.insert(out.admissible_roots.end(),
                                out.extension.begin(), out.extension.end());
    out.certificate = rui_xu_check(params.with_u(out.admissible_roots));
    return out;
  }

}  // namespace cbmw

#endif  // CBMW_RATIONALITY_HPP_
