#ifndef CBMW_POLY_HPP_
#define CBMW_POLY_HPP_

// Dense univariate polynomials in t over a Field, plus exact linear-factor
// extraction (rational roots over Q, exhaustive search over finite fields).

#include <gmpxx.h>

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace cbmw {

  class Poly {
   public:
    explicit Poly(Field const& F = Field()) : field_(F) {}

    //! Coefficients listed from the constant term upwards.
    Poly(Field const& F, std::vector<FieldValue> coeffs)
        : field_(F), c_(std::move(coeffs)) {
      for (auto const& x : c_) {
        if (!(x.field() == field_)) {
          throw Error(ErrorCode::field_mismatch, "polynomial coefficient");
        }
      }
      trim();
    }

    static Poly constant(FieldValue const& c) {
      return Poly(c.field(), {c});
    }

    //! c t^k
    static Poly monomial(FieldValue const& c, std::size_t k) {
      std::vector<FieldValue> v(k + 1, c.field().zero());
      v[k] = c;
      return Poly(c.field(), std::move(v));
    }

    static Poly t(Field const& F) {
      return monomial(F.one(), 1);
    }

    //! (t - r_1) ... (t - r_k); the constant 1 for an empty list.
    static Poly from_roots(Field const& F, std::span<FieldValue const> roots) {
      Poly out = constant(F.one());
      for (auto const& r : roots) {
        out = out * Poly(F, {-r, F.one()});
      }
      return out;
    }

    Field const& field() const noexcept {
      return field_;
    }

    //! -1 for the zero polynomial.
    long degree() const noexcept {
      return static_cast<long>(c_.size()) - 1;
    }

    bool is_zero() const noexcept {
      return c_.empty();
    }

    std::vector<FieldValue> const& coeffs() const& noexcept {
      return c_;
    }
    std::vector<FieldValue> coeffs() && {
      return std::move(c_);
    }

    FieldValue coeff(std::size_t i) const {
      return i < c_.size() ? c_[i] : field_.zero();
    }

    FieldValue lc() const {
      return c_.empty() ? field_.zero() : c_.back();
    }

    Poly monic() const {
      if (is_zero()) {
        return *this;
      }
      return *this * lc().inverse();
    }

    FieldValue operator()(FieldValue const& x) const {
      FieldValue acc = field_.zero();
      for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + *it;
      }
      return acc;
    }

    //! t^k * p
    Poly shifted(std::size_t k) const {
      if (is_zero()) {
        return *this;
      }
      std::vector<FieldValue> v(k, field_.zero());
      v.insert(v.end(), c_.begin(), c_.end());
      return Poly(field_, std::move(v));
    }

    //! t^n p(1/t) for n >= degree().
    Poly reversed(std::size_t n) const {
      if (static_cast<long>(n) < degree()) {
        throw Error(ErrorCode::invalid_argument, "reversal length too small");
      }
      std::vector<FieldValue> v(n + 1, field_.zero());
      for (std::size_t i = 0; i < c_.size(); ++i) {
        v[n - i] = c_[i];
      }
      return Poly(field_, std::move(v));
    }

    Poly& operator+=(Poly const& o) {
      check(o);
      if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size(), field_.zero());
      }
      for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] += o.c_[i];
      }
      trim();
      return *this;
    }

    Poly operator-() const {
      Poly out(*this);
      for (auto& x : out.c_) {
        x = -x;
      }
      return out;
    }

    Poly& operator-=(Poly const& o) {
      return *this += -o;
    }

    friend Poly operator+(Poly a, Poly const& b) {
      return a += b;
    }
    friend Poly operator-(Poly a, Poly const& b) {
      return a -= b;
    }

    friend Poly operator*(Poly const& a, FieldValue const& s) {
      Poly out(a);
      for (auto& x : out.c_) {
        x *= s;
      }
      out.trim();
      return out;
    }

    friend Poly operator*(Poly const& a, Poly const& b) {
      a.check(b);
      if (a.is_zero() || b.is_zero()) {
        return Poly(a.field_);
      }
      std::vector<FieldValue> v(a.c_.size() + b.c_.size() - 1,
                                a.field_.zero());
      for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
          v[i + j] += a.c_[i] * b.c_[j];
        }
      }
      return Poly(a.field_, std::move(v));
    }

    //! Euclidean division: returns (quotient, remainder).
    std::pair<Poly, Poly> divmod(Poly const& d) const {
      check(d);
      if (d.is_zero()) {
        throw Error(ErrorCode::division_by_zero, "polynomial division by 0");
      }
      Poly                    rem(*this);
      std::vector<FieldValue> quo;
      if (degree() >= d.degree()) {
        quo.assign(static_cast<std::size_t>(degree() - d.degree() + 1),
                   field_.zero());
      }
      FieldValue const inv = d.lc().inverse();
      while (!rem.is_zero() && rem.degree() >= d.degree()) {
        auto const       shift = static_cast<std::size_t>(rem.degree() - d.degree());
        FieldValue const f     = rem.lc() * inv;
        quo[shift]             = f;
        for (std::size_t j = 0; j < d.c_.size(); ++j) {
          rem.c_[shift + j] -= f * d.c_[j];
        }
        rem.trim();
      }
      return {Poly(field_, std::move(quo)), rem};
    }

    friend bool operator==(Poly const& a, Poly const& b) {
      return a.field_ == b.field_ && a.c_ == b.c_;
    }

    std::string to_string(std::string const& var = "t") const {
      if (is_zero()) {
        return "0";
      }
      std::string out;
      for (long i = degree(); i >= 0; --i) {
        auto const& x = c_[static_cast<std::size_t>(i)];
        if (x.is_zero()) {
          continue;
        }
        std::string mono = i == 0   ? ""
                           : i == 1 ? var
                                    : var + "^" + std::to_string(i);
        std::string coef = x.to_string();
        bool        paren
            = coef.find_first_of("+-/", 1) != std::string::npos;
        if (paren) {
          coef = "(" + coef + ")";
        }
        bool const neg = !paren && coef.front() == '-';
        if (neg) {
          coef.erase(0, 1);
        }
        std::string term = mono.empty()    ? coef
                           : coef == "1" ? mono
                                           : coef + "*" + mono;
        if (out.empty()) {
          out = (neg ? "-" : "") + term;
        } else {
          out += (neg ? " - " : " + ") + term;
        }
      }
      return out;
    }

   private:
    void trim() {
      while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
      }
    }

    void check(Poly const& o) const {
      if (!(o.field_ == field_)) {
        throw Error(ErrorCode::field_mismatch, "polynomial fields differ");
      }
    }

    Field                   field_;
    std::vector<FieldValue> c_;
  };

  //! Monic greatest common divisor.
  inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      auto r = a.divmod(b).second;
      a      = std::move(b);
      b      = std::move(r);
    }
    return a.monic();
  }

  //! Result of extracting linear factors: p = lc * prod(t - root) * rest.
  struct RootSplit {
    std::vector<FieldValue> roots;  // with multiplicity, ascending
    Poly                    rest;   // monic, no roots in the field
    bool                    split() const {
      return rest.degree() == 0;
    }
  };

  //! Largest finite field searched exhaustively for roots.
  inline constexpr std::uint64_t max_root_search_order = std::uint64_t(1)
                                                         << 20;

  namespace detail {
    // All positive divisors of |n|, or false if n cannot be factored by trial
    // division within the work limit.
    inline bool positive_divisors(mpz_class n, std::vector<mpz_class>& out) {
      n = abs(n);
      out.clear();
      if (n == 0) {
        return false;
      }
      std::vector<std::pair<mpz_class, unsigned>> factors;
      mpz_class                                   p = 2;
      unsigned long                               steps = 0;
      while (p * p <= n) {
        if (++steps > 2'000'000) {
          return false;
        }
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
          n /= p;
          ++e;
        }
        if (e > 0) {
          factors.emplace_back(p, e);
        }
        p += (p == 2 ? 1 : 2);
      }
      if (n > 1) {
        factors.emplace_back(n, 1);
      }
      out.push_back(1);
      for (auto const& [prime, e] : factors) {
        std::size_t const base = out.size();
        mpz_class         pk   = 1;
        for (unsigned k = 1; k <= e; ++k) {
          pk *= prime;
          for (std::size_t i = 0; i < base; ++i) {
            out.push_back(out[i] * pk);
          }
        }
      }
      std::sort(out.begin(), out.end());
      return true;
    }

    // Integer polynomial proportional to p (rational coefficients cleared).
    inline std::vector<mpz_class> integer_model(Poly const& p) {
      mpz_class l = 1;
      for (auto const& c : p.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
      }
      std::vector<mpz_class> out;
      for (auto const& c : p.coeffs()) {
        mpq_class s = c.rational() * l;
        out.push_back(s.get_num());
      }
      return out;
    }
  }  // namespace detail

  //! Extracts every root of p lying in its field.  Over Q candidates come
  //! from the rational root theorem; finite fields are searched exhaustively.
  inline RootSplit find_roots(Poly const& p) {
    if (p.is_zero()) {
      throw Error(ErrorCode::invalid_argument, "roots of the zero polynomial");
    }
    Field const& F = p.field();
    RootSplit    out{{}, p.monic()};

    auto deflate = [&](FieldValue const& r) {
      Poly lin(F, {-r, F.one()});
      while (out.rest.degree() > 0) {
        auto [q, rem] = out.rest.divmod(lin);
        if (!rem.is_zero()) {
          break;
        }
        out.roots.push_back(r);
        out.rest = q;
      }
    };

    if (F.is_finite()) {
      if (F.order() > max_root_search_order) {
        throw Error(ErrorCode::cap_exceeded,
                    "exhaustive root search over " + F.name());
      }
      for (std::uint64_t r = 0; r < F.order() && out.rest.degree() > 0; ++r) {
        FieldValue x = F.from_residue(r);
        if (out.rest(x).is_zero()) {
          deflate(x);
        }
      }
    } else {
      deflate(F.zero());
      while (out.rest.degree() > 0) {
        auto                   z = detail::integer_model(out.rest);
        std::vector<mpz_class> num, den;
        if (!detail::positive_divisors(z.front(), num)
            || !detail::positive_divisors(z.back(), den)) {
          throw Error(ErrorCode::cap_exceeded,
                      "cannot factor coefficients for rational root search");
        }
        bool found = false;
        for (auto const& b : den) {
          for (auto const& a : num) {
            if (gcd(a, b) != 1) {
              continue;
            }
            for (int sign : {1, -1}) {
              mpq_class c(a * sign, b);
              c.canonicalize();
              if (out.rest(F.from_rational(c)).is_zero()) {
                deflate(F.from_rational(c));
                found = true;
                break;
              }
            }
            if (found) {
              break;
            }
          }
          if (found) {
            break;
          }
        }
        if (!found) {
          break;
        }
      }
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
  }

}  // namespace cbmw

#endif  // CBMW_POLY_HPP_
