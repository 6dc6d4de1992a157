#ifndef CBMW_RATFUNC_HPP_
#define CBMW_RATFUNC_HPP_

// Rational functions N(t)/D(t) over a Field, kept in lowest terms with D
// monic so that the representation is unique.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "poly.hpp"
#include "series.hpp"

namespace cbmw {

  class RatFunc {
   public:
    explicit RatFunc(Field const& F = Field())
        : num_(F), den_(Poly::constant(F.one())) {}

    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
      if (!(num_.field() == den_.field())) {
        throw Error(ErrorCode::field_mismatch, "rational function parts");
      }
      if (den_.is_zero()) {
        throw Error(ErrorCode::division_by_zero, "zero denominator");
      }
      normalize();
    }

    // NOLINTNEXTLINE(runtime/explicit)
    RatFunc(Poly const& num) : RatFunc(num, Poly::constant(num.field().one())) {}

    static RatFunc constant(FieldValue const& c) {
      return RatFunc(Poly::constant(c));
    }

    static RatFunc t(Field const& F) {
      return RatFunc(Poly::t(F));
    }

    Field const& field() const noexcept {
      return num_.field();
    }

    Poly const& num() const noexcept {
      return num_;
    }

    Poly const& den() const noexcept {
      return den_;
    }

    bool is_zero() const noexcept {
      return num_.is_zero();
    }

    //! f(x); division_by_zero at a pole.
    FieldValue operator()(FieldValue const& x) const {
      FieldValue d = den_(x);
      if (d.is_zero()) {
        throw Error(ErrorCode::division_by_zero,
                    "pole at t = " + x.to_string());
      }
      return num_(x) / d;
    }

    bool has_pole_at_infinity() const noexcept {
      return num_.degree() > den_.degree();
    }

    //! Limit as t -> infinity; requires no pole there.
    FieldValue value_at_infinity() const {
      if (has_pole_at_infinity()) {
        throw Error(ErrorCode::pole_at_infinity, to_string());
      }
      return num_.degree() == den_.degree() ? num_.lc() / den_.lc()
                                            : field().zero();
    }

    friend RatFunc operator+(RatFunc const& a, RatFunc const& b) {
      return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(RatFunc const& a) {
      RatFunc out(a);
      out.num_ = -out.num_;
      return out;
    }
    friend RatFunc operator-(RatFunc const& a, RatFunc const& b) {
      return a + (-b);
    }
    friend RatFunc operator*(RatFunc const& a, RatFunc const& b) {
      return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator*(RatFunc const& a, FieldValue const& s) {
      return RatFunc(a.num_ * s, a.den_);
    }
    friend RatFunc operator/(RatFunc const& a, RatFunc const& b) {
      if (b.is_zero()) {
        throw Error(ErrorCode::division_by_zero, "rational function 0");
      }
      return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    //! Cross-multiplication; independent of normalization.
    friend bool operator==(RatFunc const& a, RatFunc const& b) {
      return a.field() == b.field() && a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string to_string() const {
      if (den_.degree() == 0) {
        return num_.to_string();
      }
      return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

   private:
    void normalize() {
      if (num_.is_zero()) {
        den_ = Poly::constant(field().one());
        return;
      }
      Poly g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
      }
      FieldValue const l = den_.lc().inverse();
      num_               = num_ * l;
      den_               = den_ * l;
    }

    Poly num_;
    Poly den_;
  };

  //! g(t) = f(1/t), normalized.
  inline RatFunc substitute_inverse_t(RatFunc const& f) {
    // f(1/t) = t^m N(1/t) / (t^m D(1/t)) with m the larger degree.
    auto const m = static_cast<std::size_t>(
        std::max({f.num().degree(), f.den().degree(), 0L}));
    return RatFunc(f.num().is_zero() ? f.num() : f.num().reversed(m),
                   f.den().reversed(m));
  }

  //! Expansion at t = infinity in powers of t^{-1}, coefficients 0..order.
  inline SeriesInvT series_expand(RatFunc const& f, std::size_t order) {
    Field const& F = f.field();
    if (f.has_pole_at_infinity()) {
      throw Error(ErrorCode::pole_at_infinity,
                  "numerator degree exceeds denominator degree in "
                      + f.to_string());
    }
    // With s = 1/t and m = deg D: f = (s^m N(1/s)) / (s^m D(1/s)), a quotient
    // of power series in s whose denominator has constant term lc(D) = 1.
    auto const m  = static_cast<std::size_t>(f.den().degree());
    Poly const ns = f.num().is_zero() ? f.num() : f.num().reversed(m);
    Poly const ds = f.den().reversed(m);
    std::vector<FieldValue> a(order + 1, F.zero()), b(order + 1, F.zero());
    for (std::size_t i = 0; i <= order; ++i) {
      a[i] = ns.coeff(i);
      b[i] = ds.coeff(i);
    }
    return SeriesInvT(F, std::move(a)) * SeriesInvT(F, std::move(b)).inverse();
  }

}  // namespace cbmw

#endif  // CBMW_RATFUNC_HPP_
