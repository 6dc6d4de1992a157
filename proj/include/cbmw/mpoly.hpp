#ifndef CBMW_MPOLY_HPP_
#define CBMW_MPOLY_HPP_

// Sparse multivariate polynomials with rational coefficients in u_1..u_r.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace cbmw {

  class MPoly {
   public:
    using Exponent = std::vector<std::uint32_t>;
    // Lexicographic order on exponent vectors; with zero coefficients never
    // stored, structural equality is polynomial equality.
    using Terms = std::map<Exponent, mpq_class>;

    explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static MPoly constant(std::size_t nvars, mpq_class const& c) {
      MPoly p(nvars);
      p.add_term(Exponent(nvars, 0), c);
      return p;
    }

    //! The variable u_{i+1} (0-based index i).
    static MPoly variable(std::size_t nvars, std::size_t i) {
      if (i >= nvars) {
        throw Error(ErrorCode::index_out_of_range,
                    "variable " + std::to_string(i) + " of "
                        + std::to_string(nvars));
      }
      Exponent e(nvars, 0);
      e[i] = 1;
      MPoly p(nvars);
      p.add_term(e, 1);
      return p;
    }

    std::size_t nvars() const noexcept {
      return nvars_;
    }

    Terms const& terms() const noexcept {
      return terms_;
    }

    bool is_zero() const noexcept {
      return terms_.empty();
    }

    std::size_t size() const noexcept {
      return terms_.size();
    }

    //! Total degree; -1 for the zero polynomial.
    long degree() const {
      long d = -1;
      for (auto const& [e, c] : terms_) {
        long s = 0;
        for (auto x : e) {
          s += x;
        }
        d = std::max(d, s);
      }
      return d;
    }

    mpq_class coefficient(Exponent const& e) const {
      auto it = terms_.find(e);
      return it == terms_.end() ? mpq_class(0) : it->second;
    }

    void add_term(Exponent const& e, mpq_class const& c) {
      if (e.size() != nvars_) {
        throw Error(ErrorCode::size_mismatch, "exponent length");
      }
      if (sgn(c) == 0) {
        return;
      }
      auto [it, inserted] = terms_.try_emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
          terms_.erase(it);
        }
      }
    }

    bool is_integral() const {
      return std::all_of(terms_.begin(), terms_.end(), [](auto const& t) {
        return t.second.get_den() == 1;
      });
    }

    //! True when every coefficient is divisible by m (as an integer).
    bool divisible_by(long m) const {
      return std::all_of(terms_.begin(), terms_.end(), [m](auto const& t) {
        return t.second.get_den() == 1
               && mpz_divisible_ui_p(t.second.get_num().get_mpz_t(),
                                     static_cast<unsigned long>(m))
                      != 0;
      });
    }

    MPoly& operator+=(MPoly const& o) {
      check_vars(o);
      for (auto const& [e, c] : o.terms_) {
        add_term(e, c);
      }
      return *this;
    }

    MPoly& operator-=(MPoly const& o) {
      check_vars(o);
      for (auto const& [e, c] : o.terms_) {
        add_term(e, -c);
      }
      return *this;
    }

    MPoly& operator*=(mpq_class const& s) {
      if (sgn(s) == 0) {
        terms_.clear();
        return *this;
      }
      for (auto& [e, c] : terms_) {
        c *= s;
      }
      return *this;
    }

    friend MPoly operator+(MPoly a, MPoly const& b) {
      return a += b;
    }
    friend MPoly operator-(MPoly a, MPoly const& b) {
      return a -= b;
    }
    friend MPoly operator-(MPoly a) {
      return a *= mpq_class(-1);
    }
    friend MPoly operator*(MPoly a, mpq_class const& s) {
      return a *= s;
    }
    friend MPoly operator*(mpq_class const& s, MPoly a) {
      return a *= s;
    }

    friend MPoly operator*(MPoly const& a, MPoly const& b) {
      a.check_vars(b);
      MPoly    out(a.nvars_);
      Exponent e(a.nvars_);
      for (auto const& [ea, ca] : a.terms_) {
        for (auto const& [eb, cb] : b.terms_) {
          for (std::size_t i = 0; i < a.nvars_; ++i) {
            e[i] = ea[i] + eb[i];
          }
          out.add_term(e, ca * cb);
        }
      }
      return out;
    }

    MPoly& operator*=(MPoly const& o) {
      return *this = *this * o;
    }

    MPoly pow(unsigned k) const {
      MPoly out = constant(nvars_, 1);
      for (unsigned i = 0; i < k; ++i) {
        out *= *this;
      }
      return out;
    }

    friend bool operator==(MPoly const& a, MPoly const& b) {
      return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    //! Renames u_i to u_{perm[i]}.
    MPoly permuted(std::span<std::size_t const> perm) const {
      if (perm.size() != nvars_) {
        throw Error(ErrorCode::size_mismatch, "permutation length");
      }
      MPoly    out(nvars_);
      Exponent e(nvars_);
      for (auto const& [ea, c] : terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) {
          e[perm[i]] = ea[i];
        }
        out.add_term(e, c);
      }
      return out;
    }

    //! Image under u_i -> point[i].  Coefficients are mapped into the target
    //! field; a denominator vanishing there is an error.
    FieldValue evaluate(std::span<FieldValue const> point,
                        Field const&                F) const {
      if (point.size() != nvars_) {
        throw Error(ErrorCode::size_mismatch,
                    "evaluation point has " + std::to_string(point.size())
                        + " entries, polynomial has "
                        + std::to_string(nvars_) + " variables");
      }
      // Power tables keep evaluation linear in the number of terms.
      std::vector<std::vector<FieldValue>> powers(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) {
        powers[i].push_back(F.one());
      }
      FieldValue acc = F.zero();
      for (auto const& [e, c] : terms_) {
        FieldValue term = F.from_rational(c);
        for (std::size_t i = 0; i < nvars_; ++i) {
          while (powers[i].size() <= e[i]) {
            powers[i].push_back(powers[i].back() * point[i]);
          }
          term *= powers[i][e[i]];
        }
        acc += term;
      }
      return acc;
    }

    std::string to_string() const {
      if (terms_.empty()) {
        return "0";
      }
      std::string out;
      // Highest degree first reads more naturally.
      for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto const& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
          if (e[i] == 0) {
            continue;
          }
          if (!mono.empty()) {
            mono += "*";
          }
          mono += "u" + std::to_string(i + 1);
          if (e[i] > 1) {
            mono += "^" + std::to_string(e[i]);
          }
        }
        mpq_class   a   = abs(c);
        bool const  neg = sgn(c) < 0;
        std::string coef
            = (a == 1 && !mono.empty()) ? "" : a.get_str() + (mono.empty() ? "" : "*");
        if (out.empty()) {
          out = (neg ? "-" : "") + coef + mono;
        } else {
          out += (neg ? " - " : " + ") + coef + mono;
        }
      }
      return out;
    }

   private:
    void check_vars(MPoly const& o) const {
      if (o.nvars_ != nvars_) {
        throw Error(ErrorCode::size_mismatch,
                    "polynomials in " + std::to_string(nvars_) + " and "
                        + std::to_string(o.nvars_) + " variables");
      }
    }

    std::size_t nvars_;
    Terms       terms_;
  };

  //! Specialization Z[u] (or Q[u]) -> F.
  inline FieldValue mpoly_eval(MPoly const&                p,
                               std::span<FieldValue const> point,
                               Field const&                F) {
    return p.evaluate(point, F);
  }

}  // namespace cbmw

#endif  // CBMW_MPOLY_HPP_
