// Acceptance run: one PASS/FAIL line per criterion, each checked exactly and
// against its time limit.  Exit status 0 only when every line passes.

#include <cbmw/cbmw.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "oracles/naive_brauer.hpp"
#include "oracles/naive_series.hpp"

using namespace cbmw;

namespace {

  // Collects the first problem found; later ones are dropped.
  struct Check {
    std::string problem;
    std::size_t count = 0;

    void require(bool ok, std::string const& what) {
      ++count;
      if (!ok && problem.empty()) {
        problem = what;
      }
    }
  };

  using Body = std::function<void(Check&)>;

  struct Criterion {
    int         id;
    double      limit_s;
    std::string title;
    Body        body;
  };

  FieldValue random_q(Field const& F, Rng& rng) {
    FieldValue q;
    do {
      q = random_element(F, rng, true);
    } while ((q - q.inverse()).is_zero());
    return q;
  }

  // Nonzero roots with x != +-y, x != +-1/2; small integers over Q.
  std::vector<FieldValue> generic_roots(Field const& F, std::size_t r, Rng& rng) {
    FieldValue const        half = F.from_rational(mpq_class(1, 2));
    std::vector<FieldValue> u;
    while (u.size() < r) {
      FieldValue const x = F.is_rational()
                               ? F.from_int(static_cast<long>(random_index(rng, 1, 60)) - 30)
                               : random_element(F, rng, true);
      bool ok = !x.is_zero() && x != half && x != -half;
      for (auto const& y : u) {
        ok = ok && x != y && x != -y;
      }
      if (ok) {
        u.push_back(x);
      }
    }
    return u;
  }

  ////////////////////////////////////////////////////////////////////////

  void symmetric_functions(Check& c) {
    for (std::size_t r = 1; r <= 4; ++r) {
      Symbolic const s{r};
      auto const     H   = universal_H_all(12, s);
      auto const     eta = eta_all(Sign::plus, 12, s);
      for (std::size_t a = 0; a <= 12; ++a) {
        c.require(H[a] == eta[a], "H_" + std::to_string(a) + " != eta_a^+ for r="
                                      + std::to_string(r));
      }
    }
    for (std::size_t r = 1; r <= 3; ++r) {
      Symbolic const s{r};
      auto const     q = schur_q_all(8, s);
      for (std::size_t a = 1; a <= 8; ++a) {
        MPoly d = q[a];
        d -= power_sum(a, s) * mpq_class(2);
        bool ok = true;
        for (auto const& [e, v] : d.terms()) {
          ok = ok && v.get_den() == 1 && mpz_class(v.get_num() % 4) == 0;
        }
        c.require(ok, "q_a - 2 p_a not in 4Z[u] at a=" + std::to_string(a));
      }
    }
    // Generating form, symbolically: prod (t+u_i)/(t-u_i) = sum Q_k t^{-k}
    // with the product of 1 + 2 sum_k u_i^k t^{-k} built term by term.
    for (std::size_t r = 1; r <= 4; ++r) {
      std::size_t const  N = 13;
      std::vector<MPoly> prod(N + 1, MPoly(r));
      prod[0] = MPoly::constant(r, 1);
      for (std::size_t i = 0; i < r; ++i) {
        std::vector<MPoly> f(N + 1, MPoly(r));
        f[0]        = MPoly::constant(r, 1);
        MPoly const x = MPoly::variable(r, i);
        MPoly       pw = MPoly::constant(r, 1);
        for (std::size_t k = 1; k <= N; ++k) {
          pw    = pw * x;
          f[k]  = pw * mpq_class(2);
        }
        std::vector<MPoly> next(N + 1, MPoly(r));
        for (std::size_t k = 0; k <= N; ++k) {
          for (std::size_t j = 0; j <= k; ++j) {
            next[k] += prod[j] * f[k - j];
          }
        }
        prod = next;
      }
      for (Sign sg : {Sign::plus, Sign::minus}) {
        mpq_class const half(((r % 2 == 1) == (sg == Sign::plus)) ? 1 : -1, 2);
        auto const      eta = eta_all(sg, 12, Symbolic{r});
        for (std::size_t a = 0; a <= 12; ++a) {
          // t^{-a} coefficient of (1/2 - t) + (t + half) sum prod_k t^{-k}.
          MPoly want = prod[a + 1];
          want += prod[a] * half;
          if (a == 0) {
            want += MPoly::constant(r, mpq_class(1, 2));
          }
          c.require(eta[a] == want, "generating form differs at a=" + std::to_string(a));
        }
      }
    }
    // The same form at random points of F_101, by long division.
    Rng         rng(101);
    Field const F = Field::prime(101);
    for (int it = 0; it < 20; ++it) {
      std::size_t const r = 1 + it % 4;
      auto const        v = random_roots(F, r, rng, true, true);
      for (int pm : {1, -1}) {
        FieldValue const half = F.from_rational(mpq_class(1, 2));
        FieldValue const sgn  = F.from_int((r % 2 == 1 ? 1 : -1) * pm) * half;
        oracle::Frac     prod{{F.one()}, {F.one()}};
        for (auto const& x : v) {
          prod = oracle::frac_mul(F, prod, oracle::Frac{{x, F.one()}, {-x, F.one()}});
        }
        oracle::Frac const f = oracle::frac_add(
            F, oracle::Frac{{half, -F.one()}, {F.one()}},
            oracle::frac_mul(F, oracle::Frac{{sgn, F.one()}, {F.one()}}, prod));
        c.require(eta_all(pm == 1 ? Sign::plus : Sign::minus, 12, v, F)
                      == oracle::expand_at_infinity(F, f, 12),
                  "evaluated generating form differs over GF(101)");
      }
    }
  }

  void degenerate_equivalence(Check& c) {
    for (auto const& F : {Field::rational(), Field::prime(5), Field::prime(2)}) {
      for (SampleMix mix : {SampleMix::mixed, SampleMix::admissible, SampleMix::perturbed}) {
        SampleSpec spec;
        spec.field = F;
        spec.count = 100;
        spec.max_r = 4;
        spec.seed  = 20;
        spec.mix   = mix;
        auto const rep = equivalence_harness_degenerate(spec);
        c.require(rep.samples == 100 && rep.pass(),
                  "degenerate criteria disagree over " + F.name() + ": " + rep.to_string());
        if (mix == SampleMix::admissible) {
          c.require(rep.left_passes == 100, "generated sample rejected over " + F.name());
        }
        if (mix == SampleMix::perturbed) {
          c.require(rep.left_passes < 100, "no perturbed sample rejected over " + F.name());
        }
      }
    }
  }

  void nondegenerate_equivalence(Check& c) {
    for (auto const& F : {Field::rational(), Field::prime(13)}) {
      for (SampleMix mix : {SampleMix::mixed, SampleMix::admissible, SampleMix::perturbed}) {
        SampleSpec spec;
        spec.field = F;
        spec.count = 100;
        spec.max_r = 4;
        spec.seed  = 30;
        spec.mix   = mix;
        auto const rep = equivalence_harness_nondegenerate(spec);
        c.require(rep.samples == 100 && rep.pass(),
                  "WY and RX disagree over " + F.name() + ": " + rep.to_string());
        if (mix == SampleMix::admissible) {
          c.require(rep.left_passes == 100, "generated sample rejected over " + F.name());
        }
      }
    }
    // Each rho branch: +a_0 and -a_0 for odd r, q^{-1} a_0 and -q a_0 for even
    // r; 2 a_0 is outside both lists and must fail both criteria.
    Rng rng(31);
    for (auto const& F : {Field::rational(), Field::prime(13)}) {
      for (std::size_t r = 1; r <= 4; ++r) {
        auto const       u  = random_roots(F, r, rng, true);
        FieldValue const q  = random_q(F, rng);
        FieldValue const a0 = CharPolyCoeffs(u, F)[0];
        std::vector<FieldValue> const branches
            = r % 2 == 1 ? std::vector<FieldValue>{a0, -a0}
                         : std::vector<FieldValue>{q.inverse() * a0, -q * a0};
        for (auto const& rho : branches) {
          OmegaSeq const w = omega_from_u_nondegenerate(F, rho, q, u, default_bound)
                                 .without_closure();
          ParamSet const p = ParamSet::nondegenerate(u, rho, q, w);
          c.require(wilcox_yu_check(p).pass() && rui_xu_check(p).pass(),
                    "allowed rho " + rho.to_string() + " rejected");
        }
        FieldValue const bad = F.from_int(2) * a0;
        if (std::find(branches.begin(), branches.end(), bad) == branches.end()) {
          auto pre = omega_from_u_nondegenerate(F, branches[0], q, u, default_bound).prefix();
          pre[0]   = omega0_from_basic_relation(bad, q);
          ParamSet const p = ParamSet::nondegenerate(u, bad, q, OmegaSeq(F, pre));
          c.require(!wilcox_yu_check(p).pass() && !rui_xu_check(p).pass(),
                    "rho = 2 a_0 accepted over " + F.name());
        }
      }
    }
  }

  void generating_functions(Check& c) {
    Rng rng(40);
    for (auto const& F : {Field::rational(), Field::prime(101)}) {
      for (int it = 0; it < 12; ++it) {
        std::size_t const r   = 1 + it % 4;
        auto const        u   = random_roots(F, r, rng, true);
        FieldValue const  q   = random_q(F, rng);
        FieldValue const  rho = allowed_rho(u, q)[static_cast<std::size_t>(it) % 2];
        OmegaSeq const    w   = omega_from_u_nondegenerate(F, rho, q, u);
        ParamSet const    p   = ParamSet::nondegenerate(u, rho, q, w);
        auto const        rep = verify_pm_identity(p);
        c.require(rep.pass() && rep.criteria()[0].detail == "exact",
                  "w^+ w^- identity fails: " + rep.to_string());

        // w^-(t) = -w^+(1/t) against the negative part from the recursion
        // run backwards, and w_{-1} = rho^{-2} w_1.
        std::size_t const M   = 10;
        auto const        neg = omega_negative(p, M).negative();
        auto const        sm  = series_expand(-substitute_inverse_t(wplus_ratfunc(w)), M);
        for (std::size_t a = 1; a <= M; ++a) {
          c.require(sm[a] == neg[a - 1], "w^- mismatch at -" + std::to_string(a));
        }
        c.require(neg[0] == (rho * rho).inverse() * w[1], "w_{-1} != rho^{-2} w_1");
      }
    }
    for (auto const& F : {Field::rational(), Field::prime(101)}) {
      RatFunc const t   = RatFunc::t(F);
      RatFunc const one = RatFunc::constant(F.one());
      for (int it = 0; it < 20; ++it) {
        FieldValue const q   = random_q(F, rng);
        FieldValue const cq  = q - q.inverse();
        RatFunc const    B   = b_function(F, q);
        RatFunc const    d   = t * t - one;
        RatFunc const    rhs = t * t / (d * d) - RatFunc::constant((cq * cq).inverse());
        c.require(-(B * substitute_inverse_t(B)) == rhs,
                  "B identity fails for q=" + q.to_string());
      }
    }
  }

  void counts(Check& c) {
    std::vector<unsigned> const want = {1, 3, 15, 105};
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const ds = enumerate_diagrams(n);
      c.require(ds.size() == want[n - 1], "diagram count for n=" + std::to_string(n));
      c.require(mpz_class(ds.size()) == odd_double_factorial(n), "(2n-1)!!");
      c.require(ds.size() == oracle::all_matchings(n).size(), "matching oracle count");
      for (unsigned r = 1; r <= 3; ++r) {
        auto const      reg    = enumerate_regular(n, r);
        mpz_class const expect = power(r, n) * odd_double_factorial(n);
        c.require(mpz_class(reg.size()) == expect,
                  "regular count n=" + std::to_string(n) + " r=" + std::to_string(r));
        std::size_t ideal = 0;
        for (auto const& m : reg) {
          ideal += m.gamma.f() > 0;
        }
        mpz_class const ideal_want
            = power(r, n) * (odd_double_factorial(n) - factorial(n));
        c.require(mpz_class(ideal) == ideal_want, "ideal sub-count");
        c.require(count_t_index(n, r, true) == ideal_want, "count_t_index ideal");
      }
    }
    c.require(enumerate_regular(4, 3).size() == 8505, "8505");
    c.require(rank_formula(2, 3, 1) == 19, "rank_formula(2,3,1) = 19");
  }

  void semi_admissibility(Check& c) {
    Field const& F = Field::rational();
    Rng          rng(60);
    for (std::size_t r = 2; r <= 4; ++r) {
      for (std::size_t d = 1; d < r; ++d) {
        for (int s = 0; s < 10; ++s) {
          auto const              u = generic_roots(F, r, rng);
          std::vector<FieldValue> base(u.begin(), u.begin() + static_cast<long>(d));
          std::vector<FieldValue> extra(u.begin() + static_cast<long>(d), u.end());
          auto const              res = detect(construct_example(F, d, extra, base));
          std::vector<std::size_t> idx(d);
          std::iota(idx.begin(), idx.end(), 0);
          bool const ok = res.outcome == SemiAdmissibilityResult::Outcome::semi_admissible
                          && res.d == d && res.subsets.size() == 1 && res.subsets[0] == idx
                          && res.roots[0] == base;
          c.require(ok, "detect(construct_example) for d=" + std::to_string(d)
                            + " r=" + std::to_string(r));
        }
      }
    }
  }

  void rationality(Check& c) {
    Rng rng(70);
    for (auto const& F : {Field::rational(), Field::prime(101)}) {
      for (int cs = 1; cs <= 4; ++cs) {
        int const alpha = (cs == 2 || cs == 4) ? 1 : 0;
        for (int it = 0; it < 4; ++it) {
          std::size_t const s = (cs <= 2 ? 1 : 2) + 2 * static_cast<std::size_t>(it % 2);
          std::vector<FieldValue> u;
          while (u.size() < s) {
            FieldValue const x = random_element(F, rng, true);
            bool ok = x != F.one() && x != -F.one();
            for (auto const& y : u) {
              ok = ok && x != y && x != -y && x * y != F.one();
            }
            if (ok) {
              u.push_back(x);
            }
          }
          std::sort(u.begin(), u.end());
          FieldValue const q = random_q(F, rng);
          ParamSet const   p = cs == 1 && it < 2
                                   ? ParamSet::nondegenerate(
                                         u, product(F, u), q,
                                         omega_from_u_nondegenerate(F, product(F, u), q, u))
                                   : affine_params_from_form(F, alpha, u, q);
          auto const k = affine_classify(p);
          std::vector<FieldValue> ext;
          if (cs == 2) {
            ext = {-F.one(), F.one()};
          } else if (cs == 3) {
            ext = {F.one()};
          } else if (cs == 4) {
            ext = {-F.one()};
          }
          FieldValue sign_prod = alpha ? -F.one() : F.one();
          for (auto const& x : u) {
            sign_prod *= x;
          }
          std::string const tag = "case " + std::to_string(cs) + " over " + F.name();
          c.require(k.case_tag == cs && k.alpha == alpha, tag + ": wrong case");
          c.require(k.roots == u && k.extension == ext, tag + ": wrong roots");
          c.require(k.rho_recovered == p.rho() && k.rho_recovered == sign_prod,
                    tag + ": rho");
          c.require(k.certificate.pass(), tag + ": " + k.certificate.to_string());
        }
      }
    }
  }

  void characteristic_two(Check& c) {
    for (unsigned k : {2u, 3u, 4u}) {
      Field const F   = Field::binary(k);
      auto const  all = F.elements();
      std::vector<std::vector<FieldValue>> sets{{}};
      for (auto const& x : all) {
        std::size_t const n = sets.size();
        for (std::size_t j = 0; j < n; ++j) {
          if (sets[j].size() < 3) {
            auto v = sets[j];
            v.push_back(x);
            sets.push_back(std::move(v));
          }
        }
      }
      for (auto const& u : sets) {
        auto const w = power_sum_sequence(u, 12, F);
        for (std::size_t a = 0; 2 * a < w.size(); ++a) {
          c.require(w[2 * a] == w[a] * w[a], "w_2a != w_a^2");
        }
        auto       got  = char2_recover(w, F).admissible_roots;
        auto       want = u;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        c.require(got == want, "recovery failed over " + F.name());
      }
    }
  }

  void diagram_relations(Check& c) {
    for (std::size_t n = 2; n <= 5; ++n) {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        auto const ei = BrauerDiagram::e(n, i);
        auto const sq = compose(ei, ei);
        c.require(sq.first == ei && sq.second == 1, "e_i^2 != (one loop) e_i");
        for (std::size_t j : {i + 1, i - 1}) {
          if (j + 1 >= n || j > n) {
            continue;
          }
          auto const m = compose(compose(ei, BrauerDiagram::e(n, j)).first, ei);
          c.require(m.first == ei && m.second == 0, "e_i e_j e_i != e_i");
        }
      }
    }
    for (std::size_t n = 0; n <= 5; ++n) {
      for (auto const& d : enumerate_diagrams(n)) {
        c.require(recompose(factorize(d)) == d, "factorize round trip");
      }
    }
  }

}  // namespace

int main() {
  std::vector<Criterion> const all = {
      {1, 10, "symmetric-function identities", symmetric_functions},
      {2, 10, "degenerate equivalence", degenerate_equivalence},
      {3, 20, "non-degenerate equivalence", nondegenerate_equivalence},
      {4, 5, "generating-function identities", generating_functions},
      {5, 30, "counts", counts},
      {6, 30, "semi-admissibility round trip", semi_admissibility},
      {7, 20, "rationality classification round trip", rationality},
      {8, 10, "characteristic-2 recovery", characteristic_two},
      {9, 20, "diagram relations", diagram_relations},
  };
  int failures = 0;
  for (auto const& cr : all) {
    Check      c;
    auto const t0 = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (std::exception const& e) {
      c.problem = std::string("exception: ") + e.what();
    }
    double const secs
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool const in_time = secs < cr.limit_s;
    bool const ok      = c.problem.empty() && in_time;
    failures += !ok;
    std::printf("criterion %d: %s  %s (%zu checks, %.2f s, limit %.0f s)", cr.id,
                ok ? "PASS" : "FAIL", cr.title.c_str(), c.count, secs, cr.limit_s);
    if (!c.problem.empty()) {
      std::printf(" - %s", c.problem.c_str());
    } else if (!in_time) {
      std::printf(" - over time");
    }
    std::printf("\n");
  }
  return failures == 0 ? 0 : 1;
}
