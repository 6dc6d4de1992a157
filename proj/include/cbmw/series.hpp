#ifndef CBMW_SERIES_HPP_
#define CBMW_SERIES_HPP_

// Truncated expansions c_0 + c_1 t^{-1} + ... + c_N t^{-N}.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace cbmw {

  class SeriesInvT {
   public:
    explicit SeriesInvT(Field const& F = Field()) : field_(F) {}

    //! Coefficients c_0..c_N; the truncation order is N = size - 1.
    SeriesInvT(Field const& F, std::vector<FieldValue> coeffs)
        : field_(F), c_(std::move(coeffs)) {}

    static SeriesInvT zero(Field const& F, std::size_t order) {
      return SeriesInvT(F, std::vector<FieldValue>(order + 1, F.zero()));
    }

    static SeriesInvT constant(FieldValue const& c, std::size_t order) {
      auto s  = zero(c.field(), order);
      s.c_[0] = c;
      return s;
    }

    Field const& field() const noexcept {
      return field_;
    }

    //! Highest known exponent of t^{-1}; -1 when empty.
    long order() const noexcept {
      return static_cast<long>(c_.size()) - 1;
    }

    std::vector<FieldValue> const& coeffs() const noexcept {
      return c_;
    }

    FieldValue const& operator[](std::size_t a) const {
      if (a >= c_.size()) {
        throw Error(ErrorCode::index_out_of_range,
                    "coefficient " + std::to_string(a)
                        + " beyond truncation order " + std::to_string(order()));
      }
      return c_[a];
    }

    FieldValue& operator[](std::size_t a) {
      if (a >= c_.size()) {
        throw Error(ErrorCode::index_out_of_range,
                    "coefficient " + std::to_string(a)
                        + " beyond truncation order " + std::to_string(order()));
      }
      return c_[a];
    }

    SeriesInvT truncated(std::size_t order) const {
      SeriesInvT out(*this);
      if (out.c_.size() > order + 1) {
        out.c_.resize(order + 1);
      }
      return out;
    }

    friend SeriesInvT operator+(SeriesInvT const& a, SeriesInvT const& b) {
      a.check(b);
      std::size_t const n = std::min(a.c_.size(), b.c_.size());
      SeriesInvT        out(a.field_);
      for (std::size_t i = 0; i < n; ++i) {
        out.c_.push_back(a.c_[i] + b.c_[i]);
      }
      return out;
    }

    friend SeriesInvT operator-(SeriesInvT const& a) {
      SeriesInvT out(a);
      for (auto& x : out.c_) {
        x = -x;
      }
      return out;
    }

    friend SeriesInvT operator-(SeriesInvT const& a, SeriesInvT const& b) {
      return a + (-b);
    }

    friend SeriesInvT operator*(SeriesInvT const& a, FieldValue const& s) {
      SeriesInvT out(a);
      for (auto& x : out.c_) {
        x *= s;
      }
      return out;
    }

    friend SeriesInvT operator*(SeriesInvT const& a, SeriesInvT const& b) {
      a.check(b);
      std::size_t const n = std::min(a.c_.size(), b.c_.size());
      SeriesInvT        out = zero(a.field_, n == 0 ? 0 : n - 1);
      out.c_.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) {
          continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
          out.c_[i + j] += a.c_[i] * b.c_[j];
        }
      }
      return out;
    }

    //! Multiplicative inverse; requires an invertible constant term.
    SeriesInvT inverse() const {
      if (c_.empty() || c_[0].is_zero()) {
        throw Error(ErrorCode::division_by_zero,
                    "series with zero constant term is not invertible");
      }
      FieldValue const inv0 = c_[0].inverse();
      SeriesInvT       out  = zero(field_, c_.size() - 1);
      out.c_[0]             = inv0;
      for (std::size_t k = 1; k < c_.size(); ++k) {
        FieldValue acc = field_.zero();
        for (std::size_t i = 1; i <= k; ++i) {
          acc += c_[i] * out.c_[k - i];
        }
        out.c_[k] = -acc * inv0;
      }
      return out;
    }

    //! Equality on the shared truncation range.
    friend bool operator==(SeriesInvT const& a, SeriesInvT const& b) {
      if (!(a.field_ == b.field_)) {
        return false;
      }
      std::size_t const n = std::min(a.c_.size(), b.c_.size());
      return std::equal(a.c_.begin(), a.c_.begin() + n, b.c_.begin());
    }

    std::string to_string() const {
      std::string out;
      for (std::size_t a = 0; a < c_.size(); ++a) {
        if (c_[a].is_zero()) {
          continue;
        }
        std::string term = c_[a].to_string();
        bool const  neg  = term.front() == '-';
        if (neg) {
          term.erase(0, 1);
        }
        if (term.find_first_of("+/") != std::string::npos && a > 0) {
          term = "(" + term + ")";
        }
        if (a > 0) {
          term += " t^-" + std::to_string(a);
        }
        if (out.empty()) {
          out = (neg ? "-" : "") + term;
        } else {
          out += (neg ? " - " : " + ") + term;
        }
      }
      return (out.empty() ? "0" : out) + " + O(t^-" + std::to_string(c_.size())
             + ")";
    }

   private:
    void check(SeriesInvT const& o) const {
      if (!(o.field_ == field_)) {
        throw Error(ErrorCode::field_mismatch, "series fields differ");
      }
    }

    Field                   field_;
    std::vector<FieldValue> c_;
  };

}  // namespace cbmw

#endif  // CBMW_SERIES_HPP_
