#ifndef CBMW_DIAGRAMS_HPP_
#define CBMW_DIAGRAMS_HPP_

// Brauer diagrams: perfect matchings on n bottom and n top vertices.
//
// Vertices are numbered 0..n-1 along the bottom and n..2n-1 along the top
// (top vertex i is n + i).  Positions in the public API are 0-based.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "counting.hpp"
#include "error.hpp"

namespace cbmw {

  using Permutation = std::vector<std::size_t>;  // i -> p[i]

  inline Permutation identity_permutation(std::size_t n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
  }

  inline Permutation inverse(Permutation const& p) {
    Permutation q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[p[i]] = i;
    }
    return q;
  }

  enum class StrandKind { bottom_horizontal, top_horizontal, vertical };

  //! A strand with endpoints as vertex ids, first < second.
  struct Strand {
    std::size_t first;
    std::size_t second;
    StrandKind  kind;
  };

  class BrauerDiagram {
   public:
    BrauerDiagram() = default;

    //! From the partner table of the 2n vertices.
    BrauerDiagram(std::size_t n, std::vector<std::size_t> partner)
        : n_(n), partner_(std::move(partner)) {
      if (partner_.size() != 2 * n_) {
        throw Error(ErrorCode::size_mismatch, "partner table length");
      }
      for (std::size_t v = 0; v < 2 * n_; ++v) {
        std::size_t const w = partner_[v];
        if (w >= 2 * n_ || w == v || partner_[w] != v) {
          throw Error(ErrorCode::invalid_argument,
                      "partner table is not a perfect matching at vertex "
                          + std::to_string(v));
        }
      }
    }

    static BrauerDiagram identity(std::size_t n) {
      return permutation(identity_permutation(n));
    }

    //! Bottom i joined to top p[i].
    static BrauerDiagram permutation(Permutation const& p) {
      std::size_t const        n = p.size();
      std::vector<std::size_t> partner(2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        partner[i]        = n + p[i];
        partner[n + p[i]] = i;
      }
      return BrauerDiagram(n, std::move(partner));
    }

    //! e_i (0-based i, 0 <= i < n-1): caps on bottom i, i+1 and top i, i+1.
    static BrauerDiagram e(std::size_t n, std::size_t i) {
      check_generator(n, i);
      auto d                       = identity(n);
      d.partner_[i]                = i + 1;
      d.partner_[i + 1]            = i;
      d.partner_[n + i]            = n + i + 1;
      d.partner_[n + i + 1]        = n + i;
      return d;
    }

    //! The transposition s_i of positions i, i+1.
    static BrauerDiagram s(std::size_t n, std::size_t i) {
      check_generator(n, i);
      auto p = identity_permutation(n);
      std::swap(p[i], p[i + 1]);
      return permutation(p);
    }

    std::size_t n() const noexcept {
      return n_;
    }

    std::vector<std::size_t> const& partner() const noexcept {
      return partner_;
    }

    std::size_t partner(std::size_t v) const {
      return partner_.at(v);
    }

    static bool is_top(std::size_t v, std::size_t n) noexcept {
      return v >= n;
    }

    //! Strands ordered by their smaller endpoint.
    std::vector<Strand> strands() const {
      std::vector<Strand> out;
      for (std::size_t v = 0; v < 2 * n_; ++v) {
        std::size_t const w = partner_[v];
        if (v < w) {
          StrandKind k = !is_top(v, n_) && !is_top(w, n_)
                             ? StrandKind::bottom_horizontal
                         : is_top(v, n_) ? StrandKind::top_horizontal
                                         : StrandKind::vertical;
          out.push_back({v, w, k});
        }
      }
      return out;
    }

    //! Number of top horizontal strands (equal to the bottom count).
    std::size_t f() const {
      std::size_t c = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        c += is_top(partner_[n_ + i], n_);
      }
      return c / 2;
    }

    bool is_permutation() const {
      return f() == 0;
    }

    friend bool operator==(BrauerDiagram const&, BrauerDiagram const&) = default;

    friend bool operator<(BrauerDiagram const& a, BrauerDiagram const& b) {
      return std::tie(a.n_, a.partner_) < std::tie(b.n_, b.partner_);
    }

    std::string to_string() const {
      std::string out = "{";
      bool        first = true;
      for (auto const& s : strands()) {
        out += first ? "" : ", ";
        first = false;
        out += label(s.first) + "-" + label(s.second);
      }
      return out + "}";
    }

   private:
    static void check_generator(std::size_t n, std::size_t i) {
      if (n < 2 || i + 1 >= n) {
        throw Error(ErrorCode::index_out_of_range,
                    "generator " + std::to_string(i) + " on "
                        + std::to_string(n) + " strands");
      }
    }

    // 1-based labels: b3 is bottom vertex 3, t1 top vertex 1.
    std::string label(std::size_t v) const {
      return is_top(v, n_) ? "t" + std::to_string(v - n_ + 1)
                           : "b" + std::to_string(v + 1);
    }

    std::size_t              n_ = 0;
    std::vector<std::size_t> partner_;
  };

  //! Largest n enumerated exhaustively.
  inline constexpr std::size_t max_enumerate_n = 6;

  //! All (2n-1)!! diagrams: the lowest unmatched vertex is paired with each
  //! higher unmatched vertex in increasing order.
  inline std::vector<BrauerDiagram> enumerate_diagrams(std::size_t n) {
    if (n > max_enumerate_n) {
      throw Error(ErrorCode::cap_exceeded,
                  "diagram enumeration for n = " + std::to_string(n) + " (cap "
                      + std::to_string(max_enumerate_n) + ")");
    }
    std::vector<BrauerDiagram>  out;
    std::vector<std::size_t>    partner(2 * n, 2 * n);
    std::function<void()>       rec = [&]() {
      auto it = std::find(partner.begin(), partner.end(), 2 * n);
      if (it == partner.end()) {
        out.emplace_back(n, partner);
        return;
      }
      auto const v = static_cast<std::size_t>(it - partner.begin());
      for (std::size_t w = v + 1; w < 2 * n; ++w) {
        if (partner[w] != 2 * n) {
          continue;
        }
        partner[v] = w;
        partner[w] = v;
        rec();
        partner[v] = partner[w] = 2 * n;
      }
    };
    rec();
    return out;
  }

  //! d1 d2: d1 stacked on top of d2 (d2's top row glued to d1's bottom
  //! row).  Returns the product diagram and the number of closed loops.
  //! For permutation diagrams the product is the composite d1 o d2.
  inline std::pair<BrauerDiagram, std::size_t> compose(BrauerDiagram const& d1,
                                                       BrauerDiagram const& d2) {
    std::size_t const n = d1.n();
    if (d2.n() != n) {
      throw Error(ErrorCode::size_mismatch,
                  "composing diagrams on " + std::to_string(n) + " and "
                      + std::to_string(d2.n()) + " strands");
    }
    // Outer vertices: bottom of d2 (ids 0..n-1) and top of d1 (ids n..2n-1).
    // Middle vertex m (0..n-1) is top m of d2 and bottom m of d1.
    std::vector<std::size_t> partner(2 * n);
    std::vector<bool>        middle_seen(n, false);

    // Walk from an outer vertex to the outer vertex it is joined to.
    auto walk = [&](std::size_t start) {
      // Outer ids coincide with the vertex ids in d2 (bottom) and d1 (top).
      bool        in_d2 = start < n;
      std::size_t v     = start;
      while (true) {
        std::size_t const w = in_d2 ? d2.partner(v) : d1.partner(v);
        if (in_d2) {
          if (w < n) {
            return w;  // bottom of d2: outer
          }
          middle_seen[w - n] = true;
          in_d2              = false;
          v                  = w - n;  // bottom of d1
        } else {
          if (w >= n) {
            return w;  // top of d1: outer
          }
          middle_seen[w] = true;
          in_d2          = true;
          v              = n + w;  // top of d2
        }
      }
    };

    for (std::size_t v = 0; v < 2 * n; ++v) {
      partner[v] = walk(v);
    }
    // Remaining middle vertices lie on closed loops.
    std::size_t loops = 0;
    for (std::size_t m = 0; m < n; ++m) {
      if (middle_seen[m]) {
        continue;
      }
      ++loops;
      // Trace the loop: alternate d1 (bottom side) and d2 (top side).
      std::size_t x = m;
      do {
        middle_seen[x]      = true;
        std::size_t const y = d1.partner(x);  // bottom of d1 -> bottom of d1
        middle_seen[y]      = true;
        x                   = d2.partner(n + y) - n;  // top of d2 -> top of d2
      } while (x != m);
    }
    return {BrauerDiagram(n, std::move(partner)), loops};
  }

  //! gamma = alpha (e_1 e_3 ... e_{2f-1}) pi beta^{-1}, with alpha, beta, pi
  //! permutations of {0..n-1}; pi fixes 0..2f-1.
  struct BrauerFactorization {
    std::size_t n = 0;
    std::size_t f = 0;
    Permutation alpha;
    Permutation beta;
    Permutation pi;
  };

  //! e_1 e_3 ... e_{2f-1} on n strands (caps on positions 2k, 2k+1, 0-based).
  inline BrauerDiagram cap_diagram(std::size_t n, std::size_t f) {
    if (2 * f > n) {
      throw Error(ErrorCode::invalid_argument,
                  std::to_string(f) + " caps on " + std::to_string(n) + " strands");
    }
    auto d = BrauerDiagram::identity(n);
    for (std::size_t k = 0; k < f; ++k) {
      d = compose(d, BrauerDiagram::e(n, 2 * k)).first;
    }
    return d;
  }

  inline BrauerDiagram recompose(BrauerFactorization const& x) {
    auto const a = BrauerDiagram::permutation(x.alpha);
    auto const e = cap_diagram(x.n, x.f);
    auto const p = BrauerDiagram::permutation(x.pi);
    auto const b = BrauerDiagram::permutation(inverse(x.beta));
    return compose(compose(compose(a, e).first, p).first, b).first;
  }

  //! Canonical factorization: alpha sends (2k, 2k+1) to the endpoints of the
  //! k-th top horizontal strand (strands ordered by left endpoint) and is
  //! order-preserving from {2f..n-1} onto the top ends of vertical strands;
  //! beta likewise on the bottom row; pi is then forced.
  inline BrauerFactorization factorize(BrauerDiagram const& g) {
    std::size_t const   n = g.n();
    std::size_t const   f = g.f();
    BrauerFactorization out{n, f, Permutation(n), Permutation(n),
                            identity_permutation(n)};
    auto fill = [&](Permutation& perm, bool top) {
      std::size_t const        off = top ? n : 0;
      std::size_t              k   = 0;
      std::vector<std::size_t> free;
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t const w = g.partner(off + i);
        bool const        same_row = BrauerDiagram::is_top(w, n) == top;
        if (!same_row) {
          free.push_back(i);
        } else if (w - off > i) {
          perm[2 * k]     = i;
          perm[2 * k + 1] = w - off;
          ++k;
        }
      }
      for (std::size_t j = 0; j < free.size(); ++j) {
        perm[2 * f + j] = free[j];
      }
    };
    fill(out.alpha, true);
    fill(out.beta, false);
    Permutation const ainv = inverse(out.alpha);
    for (std::size_t j = 2 * f; j < n; ++j) {
      std::size_t const bottom = out.beta[j];
      std::size_t const top    = g.partner(bottom) - n;
      out.pi[j]                = ainv[top];
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Regular monomials
  ////////////////////////////////////////////////////////////////////////

  //! y^top gamma y^bottom with exponents in [0, bound).  A bottom exponent
  //! may be nonzero only at the left endpoint of a bottom horizontal strand;
  //! a top exponent only at the left endpoint of a top horizontal strand or
  //! at the top end of a vertical strand.
  struct RegularMonomial {
    BrauerDiagram             gamma;
    std::vector<unsigned>     top;
    std::vector<unsigned>     bottom;
  };

  //! Free exponent slots of gamma, as (is_top, position) pairs: n in total.
  inline std::vector<std::pair<bool, std::size_t>> regular_slots(
      BrauerDiagram const& g) {
    std::size_t const                          n = g.n();
    std::vector<std::pair<bool, std::size_t>> out;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t const w = g.partner(i);
      if (!BrauerDiagram::is_top(w, n) && w > i) {
        out.emplace_back(false, i);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t const w = g.partner(n + i);
      if (!BrauerDiagram::is_top(w, n) || w > n + i) {
        out.emplace_back(true, i);
      }
    }
    return out;
  }

  inline constexpr std::size_t max_regular_n     = 4;
  inline constexpr unsigned    max_regular_bound = 4;

  namespace detail {
    inline void check_regular_caps(std::size_t n, unsigned bound) {
      if (n > max_regular_n || bound > max_regular_bound) {
        throw Error(ErrorCode::cap_exceeded,
                    "regular monomials for n = " + std::to_string(n)
                        + ", bound = " + std::to_string(bound) + " (caps "
                        + std::to_string(max_regular_n) + ", "
                        + std::to_string(max_regular_bound) + ")");
      }
    }

    // Calls fn(values) for every vector in [0, bound)^k.
    template <typename Fn>
    void for_each_exponents(std::size_t k, unsigned bound, Fn&& fn) {
      std::vector<unsigned> v(k, 0);
      if (bound == 0 && k > 0) {
        return;
      }
      while (true) {
        fn(v);
        std::size_t i = 0;
        while (i < k && ++v[i] == bound) {
          v[i++] = 0;
        }
        if (i == k) {
          return;
        }
      }
    }
  }  // namespace detail

  template <typename Fn>
  void for_each_regular(std::size_t n, unsigned bound, Fn&& fn) {
    detail::check_regular_caps(n, bound);
    for (auto const& g : enumerate_diagrams(n)) {
      auto const slots = regular_slots(g);
      detail::for_each_exponents(
          slots.size(), bound, [&](std::vector<unsigned> const& e) {
            RegularMonomial m{g, std::vector<unsigned>(n, 0),
                              std::vector<unsigned>(n, 0)};
            for (std::size_t s = 0; s < slots.size(); ++s) {
              (slots[s].first ? m.top : m.bottom)[slots[s].second] = e[s];
            }
            fn(m);
          });
    }
  }

  //! All regular monomials; there are bound^n (2n-1)!! of them.
  inline std::vector<RegularMonomial> enumerate_regular(std::size_t n,
                                                        unsigned    bound) {
    std::vector<RegularMonomial> out;
    for_each_regular(n, bound, [&](RegularMonomial const& m) { out.push_back(m); });
    return out;
  }

  //! T_{gamma, a, b, c}: a, b of length f (exponents at the horizontal
  //! strands after factorization), c of length n - 2f (vertical strands).
  struct TIndex {
    BrauerDiagram         gamma;
    std::size_t           f = 0;
    std::vector<unsigned> a;
    std::vector<unsigned> b;
    std::vector<unsigned> c;
  };

  //! Calls fn for every T_{gamma,a,b,c} with entries in [0, d); only
  //! diagrams with a horizontal strand when ideal_only.
  template <typename Fn>
  void for_each_t_index(std::size_t n, unsigned d, bool ideal_only, Fn&& fn) {
    detail::check_regular_caps(n, d);
    for (auto const& g : enumerate_diagrams(n)) {
      std::size_t const f = g.f();
      if (ideal_only && f == 0) {
        continue;
      }
      detail::for_each_exponents(n, d, [&](std::vector<unsigned> const& e) {
        TIndex t{g, f, {}, {}, {}};
        t.a.assign(e.begin(), e.begin() + f);
        t.b.assign(e.begin() + f, e.begin() + 2 * f);
        t.c.assign(e.begin() + 2 * f, e.end());
        fn(t);
      });
    }
  }

  //! Number of T_{gamma,a,b,c} counted by enumeration.
  inline mpz_class count_t_index(std::size_t n, unsigned d, bool ideal_only) {
    mpz_class c = 0;
    for_each_t_index(n, d, ideal_only, [&](TIndex const&) { ++c; });
    return c;
  }

  inline mpz_class count_regular(std::size_t n, unsigned bound) {
    mpz_class c = 0;
    for_each_regular(n, bound, [&](RegularMonomial const&) { ++c; });
    return c;
  }

}  // namespace cbmw

#endif  // CBMW_DIAGRAMS_HPP_
