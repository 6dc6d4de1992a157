#ifndef CBMW_FIELD_HPP_
#define CBMW_FIELD_HPP_

// Exact scalars: the rationals, prime fields F_p and binary fields F_{2^k}.
//
// A FieldValue carries its field descriptor, so arithmetic between elements
// of different fields is detected at run time rather than silently mixed.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace cbmw {

  class FieldValue;

  class Field {
   public:
    enum class Kind : std::uint8_t { rational, prime, binary };

    //! Irreducible polynomials over F_2 (bit i = coefficient of x^i) used to
    //! realize F_{2^k} for 1 <= k <= 8.
    static constexpr std::array<std::uint32_t, 9> binary_moduli
        = {0, 0b10, 0b111, 0b1011, 0b10011, 0b100101, 0b1000011, 0b10000011,
           0x11B};

    static constexpr std::uint64_t max_prime = std::uint64_t(1) << 62;

    Field() = default;

    static Field rational() {
      return Field();
    }

    static Field prime(std::uint64_t p) {
      if (p >= max_prime || !is_prime(p)) {
        throw Error(ErrorCode::invalid_argument,
                    "prime field modulus " + std::to_string(p)
                        + " is not a prime below 2^62");
      }
      Field f;
      f.kind_ = Kind::prime;
      f.p_    = p;
      return f;
    }

    static Field binary(unsigned k) {
      if (k < 1 || k > 8) {
        throw Error(ErrorCode::invalid_argument,
                    "binary field degree must be in 1..8, got "
                        + std::to_string(k));
      }
      Field f;
      f.kind_ = Kind::binary;
      f.p_    = 2;
      f.k_    = k;
      return f;
    }

    Kind kind() const noexcept {
      return kind_;
    }

    bool is_rational() const noexcept {
      return kind_ == Kind::rational;
    }

    bool is_finite() const noexcept {
      return kind_ != Kind::rational;
    }

    //! 0 for the rationals.
    std::uint64_t characteristic() const noexcept {
      return p_;
    }

    //! Number of elements; 0 for the rationals.
    std::uint64_t order() const noexcept {
      switch (kind_) {
        case Kind::rational: return 0;
        case Kind::prime: return p_;
        case Kind::binary: return std::uint64_t(1) << k_;
      }
      return 0;
    }

    unsigned degree() const noexcept {
      return kind_ == Kind::binary ? k_ : 1;
    }

    std::uint32_t modulus() const noexcept {
      return kind_ == Kind::binary ? binary_moduli[k_] : 0;
    }

    std::string name() const {
      switch (kind_) {
        case Kind::rational: return "Q";
        case Kind::prime: return "GF(" + std::to_string(p_) + ")";
        case Kind::binary: return "GF(2^" + std::to_string(k_) + ")";
      }
      return "?";
    }

    friend bool operator==(Field const& a, Field const& b) noexcept {
      return a.kind_ == b.kind_ && a.p_ == b.p_ && a.k_ == b.k_;
    }

    FieldValue zero() const;
    FieldValue one() const;
    FieldValue from_int(long long n) const;
    FieldValue from_integer(mpz_class const& n) const;
    FieldValue from_rational(mpq_class const& q) const;
    //! Binary fields: bit i is the coefficient of x^i.  Prime fields: the
    //! residue.  Not available for the rationals.
    FieldValue from_residue(std::uint64_t r) const;
    //! Parses "a" or "a/b"; for binary fields only "0" and "1".
    FieldValue parse(std::string const& text) const;
    //! All elements of a finite field, ordered by residue.
    std::vector<FieldValue> elements() const;

    static bool is_prime(std::uint64_t n) noexcept;

   private:
    Kind          kind_ = Kind::rational;
    std::uint64_t p_    = 0;
    unsigned      k_    = 0;
  };

  namespace detail {
    inline std::uint64_t mulmod(std::uint64_t a,
                                std::uint64_t b,
                                std::uint64_t m) noexcept {
      __extension__ using u128 = unsigned __int128;
      return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
    }

    inline std::uint64_t powmod(std::uint64_t a,
                                std::uint64_t e,
                                std::uint64_t m) noexcept {
      std::uint64_t r = 1 % m;
      a %= m;
      while (e != 0) {
        if (e & 1) {
          r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
      }
      return r;
    }

    // Carry-less product reduced modulo an irreducible of degree k.
    inline std::uint64_t gf2k_mul(std::uint64_t a,
                                  std::uint64_t b,
                                  unsigned      k,
                                  std::uint32_t modulus) noexcept {
      std::uint64_t prod = 0;
      for (unsigned i = 0; i < k; ++i) {
        if ((b >> i) & 1) {
          prod ^= a << i;
        }
      }
      for (int i = 2 * static_cast<int>(k) - 2; i >= static_cast<int>(k);
           --i) {
        if ((prod >> i) & 1) {
          prod ^= static_cast<std::uint64_t>(modulus) << (i - k);
        }
      }
      return prod;
    }
  }  // namespace detail

  inline bool Field::is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
      if (n % p == 0) {
        return n == p;
      }
    }
    std::uint64_t d = n - 1;
    unsigned      s = 0;
    while ((d & 1) == 0) {
      d >>= 1;
      ++s;
    }
    // Deterministic Miller-Rabin bases for 64-bit integers.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
      std::uint64_t x = detail::powmod(a, d, n);
      if (x == 1 || x == n - 1) {
        continue;
      }
      bool composite = true;
      for (unsigned i = 1; i < s; ++i) {
        x = detail::mulmod(x, x, n);
        if (x == n - 1) {
          composite = false;
          break;
        }
      }
      if (composite) {
        return false;
      }
    }
    return true;
  }

  //! An exact element of a Field.  Value type; every nonzero element is
  //! invertible.
  class FieldValue {
   public:
    FieldValue() = default;

    Field const& field() const noexcept {
      return field_;
    }

    bool is_zero() const noexcept {
      return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
    }

    bool is_one() const noexcept {
      return field_.is_rational() ? q_ == 1 : r_ == 1;
    }

    //! Only meaningful over the rationals.
    mpq_class const& rational() const noexcept {
      return q_;
    }

    //! Residue (prime fields) or bit pattern (binary fields).
    std::uint64_t residue() const noexcept {
      return r_;
    }

    FieldValue operator-() const {
      FieldValue out(*this);
      switch (field_.kind()) {
        case Field::Kind::rational: out.q_ = -q_; break;
        case Field::Kind::prime:
          out.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
          break;
        case Field::Kind::binary: break;
      }
      return out;
    }

    FieldValue& operator+=(FieldValue const& o) {
      check_same(o);
      switch (field_.kind()) {
        case Field::Kind::rational: q_ += o.q_; break;
        case Field::Kind::prime: {
          std::uint64_t const p = field_.characteristic();
          r_ += o.r_;
          if (r_ >= p) {
            r_ -= p;
          }
          break;
        }
        case Field::Kind::binary: r_ ^= o.r_; break;
      }
      return *this;
    }

    FieldValue& operator-=(FieldValue const& o) {
      return *this += -o;
    }

    FieldValue& operator*=(FieldValue const& o) {
      check_same(o);
      switch (field_.kind()) {
        case Field::Kind::rational: q_ *= o.q_; break;
        case Field::Kind::prime:
          r_ = detail::mulmod(r_, o.r_, field_.characteristic());
          break;
        case Field::Kind::binary:
          r_ = detail::gf2k_mul(r_, o.r_, field_.degree(), field_.modulus());
          break;
      }
      return *this;
    }

    FieldValue inverse() const {
      if (is_zero()) {
        throw Error(ErrorCode::division_by_zero,
                    "inverse of zero in " + field_.name());
      }
      FieldValue out(*this);
      switch (field_.kind()) {
        case Field::Kind::rational: out.q_ = 1 / q_; break;
        case Field::Kind::prime:
          out.r_ = detail::powmod(
              r_, field_.characteristic() - 2, field_.characteristic());
          break;
        case Field::Kind::binary: out = pow(field_.order() - 2); break;
      }
      return out;
    }

    FieldValue& operator/=(FieldValue const& o) {
      return *this *= o.inverse();
    }

    //! Negative exponents invert first.
    FieldValue pow(long long e) const {
      if (e < 0) {
        return inverse().pow(-e);
      }
      FieldValue result = field_.one();
      FieldValue base(*this);
      auto       n = static_cast<unsigned long long>(e);
      while (n != 0) {
        if (n & 1) {
          result *= base;
        }
        base *= base;
        n >>= 1;
      }
      return result;
    }

    friend FieldValue operator+(FieldValue a, FieldValue const& b) {
      return a += b;
    }
    friend FieldValue operator-(FieldValue a, FieldValue const& b) {
      return a -= b;
    }
    friend FieldValue operator*(FieldValue a, FieldValue const& b) {
      return a *= b;
    }
    friend FieldValue operator/(FieldValue a, FieldValue const& b) {
      return a /= b;
    }

    friend bool operator==(FieldValue const& a, FieldValue const& b) {
      if (!(a.field_ == b.field_)) {
        return false;
      }
      return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
    }

    //! A total order used only for canonical output (roots, subsets).
    //! Numeric order on Q, residue order on finite fields.
    friend std::strong_ordering operator<=>(FieldValue const& a,
                                            FieldValue const& b) {
      a.check_same(b);
      if (a.field_.is_rational()) {
        int const c = cmp(a.q_, b.q_);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
      }
      return a.r_ <=> b.r_;
    }

    std::string to_string() const {
      switch (field_.kind()) {
        case Field::Kind::rational: return q_.get_str();
        case Field::Kind::prime: return std::to_string(r_);
        case Field::Kind::binary: {
          if (r_ == 0) {
            return "0";
          }
          std::string out;
          for (int i = static_cast<int>(field_.degree()) - 1; i >= 0; --i) {
            if (((r_ >> i) & 1) == 0) {
              continue;
            }
            if (!out.empty()) {
              out += "+";
            }
            out += i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i);
          }
          return out;
        }
      }
      return "?";
    }

    //! Binary fields only: coefficients of 1, x, x^2, ... (length k).
    std::vector<int> coefficients() const {
      std::vector<int> out;
      for (unsigned i = 0; i < field_.degree(); ++i) {
        out.push_back(static_cast<int>((r_ >> i) & 1));
      }
      return out;
    }

   private:
    friend class Field;

    void check_same(FieldValue const& o) const {
      if (!(field_ == o.field_)) {
        throw Error(ErrorCode::field_mismatch,
                    field_.name() + " vs " + o.field_.name());
      }
    }

    Field         field_;
    mpq_class     q_;
    std::uint64_t r_ = 0;
  };

  inline FieldValue Field::zero() const {
    FieldValue v;
    v.field_ = *this;
    return v;
  }

  inline FieldValue Field::one() const {
    return from_int(1);
  }

  inline FieldValue Field::from_int(long long n) const {
    return from_integer(mpz_class(static_cast<long>(n)));
  }

  inline FieldValue Field::from_integer(mpz_class const& n) const {
    FieldValue v = zero();
    if (kind_ == Kind::rational) {
      v.q_ = n;
    } else {
      mpz_class m;
      mpz_fdiv_r_ui(m.get_mpz_t(), n.get_mpz_t(), p_);
      v.r_ = m.get_ui();
    }
    return v;
  }

  inline FieldValue Field::from_rational(mpq_class const& q) const {
    if (kind_ == Kind::rational) {
      FieldValue v = zero();
      v.q_         = q;
      v.q_.canonicalize();
      return v;
    }
    FieldValue den = from_integer(q.get_den());
    if (den.is_zero()) {
      throw Error(ErrorCode::division_by_zero,
                  "denominator of " + q.get_str() + " vanishes in " + name());
    }
    return from_integer(q.get_num()) / den;
  }

  inline FieldValue Field::from_residue(std::uint64_t r) const {
    if (kind_ == Kind::rational) {
      throw Error(ErrorCode::invalid_argument,
                  "residues are not defined over Q");
    }
    if (r >= order()) {
      throw Error(ErrorCode::invalid_argument,
                  "residue " + std::to_string(r) + " out of range for "
                      + name());
    }
    FieldValue v = zero();
    v.r_         = r;
    return v;
  }

  inline FieldValue Field::parse(std::string const& text) const {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0) {
      throw Error(ErrorCode::parse, "not a rational literal: '" + text + "'");
    }
    if (q.get_den() == 0) {
      throw Error(ErrorCode::parse, "zero denominator in '" + text + "'");
    }
    q.canonicalize();
    return from_rational(q);
  }

  inline std::vector<FieldValue> Field::elements() const {
    if (kind_ == Kind::rational) {
      throw Error(ErrorCode::invalid_argument, "Q is infinite");
    }
    std::vector<FieldValue> out;
    out.reserve(order());
    for (std::uint64_t r = 0; r < order(); ++r) {
      out.push_back(from_residue(r));
    }
    return out;
  }

  //! Product of a list of scalars (1 for the empty list).
  inline FieldValue product(Field const& F, std::vector<FieldValue> const& v) {
    FieldValue out = F.one();
    for (auto const& x : v) {
      out *= x;
    }
    return out;
  }

}  // namespace cbmw

#endif  // CBMW_FIELD_HPP_
