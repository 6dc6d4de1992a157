#ifndef CBMW_PARAMS_HPP_
#define CBMW_PARAMS_HPP_

// Omega sequences and parameter bundles.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace cbmw {

  //! A two-sided sequence (w_a) known through the prefix w_0..w_N and,
  //! optionally, the negative part w_{-1}..w_{-M}.  A closure a_0..a_{r-1}
  //! records a recursion w_{r+l} + sum_{j<r} a_j w_{j+l} = 0 assumed for all
  //! integers l; it is checked on every stored window.
  class OmegaSeq {
   public:
    explicit OmegaSeq(Field const& F = Field()) : field_(F) {}

    OmegaSeq(Field const&                           F,
             std::vector<FieldValue>                prefix,
             std::optional<std::vector<FieldValue>> closure  = std::nullopt,
             std::vector<FieldValue>                negative = {})
        : field_(F),
          prefix_(std::move(prefix)),
          closure_(std::move(closure)),
          negative_(std::move(negative)) {
      for (auto const* v : {&prefix_, &negative_}) {
        for (auto const& x : *v) {
          if (!(x.field() == field_)) {
            throw Error(ErrorCode::field_mismatch, "omega entry");
          }
        }
      }
      if (closure_) {
        for (auto const& x : *closure_) {
          if (!(x.field() == field_)) {
            throw Error(ErrorCode::field_mismatch, "closure coefficient");
          }
        }
        if (auto l = first_closure_violation()) {
          throw Error(ErrorCode::constraint_violation,
                      "stored coefficients violate the closing recursion at l = "
                          + std::to_string(*l));
        }
      }
    }

    Field const& field() const noexcept {
      return field_;
    }

    std::vector<FieldValue> const& prefix() const& noexcept {
      return prefix_;
    }
    std::vector<FieldValue> prefix() && {
      return std::move(prefix_);
    }

    //! w_{-1}, w_{-2}, ...
    std::vector<FieldValue> const& negative() const& noexcept {
      return negative_;
    }
    std::vector<FieldValue> negative() && {
      return std::move(negative_);
    }

    std::optional<std::vector<FieldValue>> const& closure() const noexcept {
      return closure_;
    }

    bool has_closure() const noexcept {
      return closure_.has_value();
    }

    //! Number of stored non-negative entries.
    std::size_t size() const noexcept {
      return prefix_.size();
    }

    bool has(long a) const noexcept {
      return a >= 0 ? static_cast<std::size_t>(a) < prefix_.size()
                    : static_cast<std::size_t>(-a) <= negative_.size();
    }

    FieldValue const& at(long a) const {
      if (!has(a)) {
        throw Error(ErrorCode::index_out_of_range,
                    "omega_" + std::to_string(a) + " is not stored");
      }
      return a >= 0 ? prefix_[static_cast<std::size_t>(a)]
                    : negative_[static_cast<std::size_t>(-a - 1)];
    }

    FieldValue const& operator[](long a) const {
      return at(a);
    }

    //! Copy with w_a replaced by w_a + delta.  The closure is dropped since
    //! it would no longer describe the data; the negative part is kept.
    OmegaSeq perturbed(long a, FieldValue const& delta) const {
      OmegaSeq out(*this);
      out.closure_.reset();
      if (!has(a)) {
        throw Error(ErrorCode::index_out_of_range,
                    "omega_" + std::to_string(a) + " is not stored");
      }
      if (a >= 0) {
        out.prefix_[static_cast<std::size_t>(a)] += delta;
      } else {
        out.negative_[static_cast<std::size_t>(-a - 1)] += delta;
      }
      return out;
    }

    OmegaSeq without_closure() const {
      OmegaSeq out(*this);
      out.closure_.reset();
      return out;
    }

    OmegaSeq without_negative() const {
      OmegaSeq out(*this);
      out.negative_.clear();
      return out;
    }

    //! The first l (possibly negative) whose recursion instance fails on the
    //! stored data, if any.
    std::optional<long> first_closure_violation() const {
      if (!closure_) {
        return std::nullopt;
      }
      long const r  = static_cast<long>(closure_->size());
      long const lo = -static_cast<long>(negative_.size());
      for (long l = lo; l + r < static_cast<long>(prefix_.size()); ++l) {
        FieldValue acc = at(l + r);
        for (long j = 0; j < r; ++j) {
          acc += (*closure_)[static_cast<std::size_t>(j)] * at(l + j);
        }
        if (!acc.is_zero()) {
          return l;
        }
      }
      return std::nullopt;
    }

    friend bool operator==(OmegaSeq const& a, OmegaSeq const& b) {
      return a.field_ == b.field_ && a.prefix_ == b.prefix_
             && a.closure_ == b.closure_ && a.negative_ == b.negative_;
    }

   private:
    Field                                  field_;
    std::vector<FieldValue>                prefix_;
    std::optional<std::vector<FieldValue>> closure_;
    std::vector<FieldValue>                negative_;
  };

  enum class ParamKind { degenerate, nondegenerate };

  inline char const* to_string(ParamKind k) noexcept {
    return k == ParamKind::degenerate ? "degenerate" : "nondegenerate";
  }

  //! w_0 forced by rho^{-1} - rho = (q^{-1} - q)(w_0 - 1).
  inline FieldValue omega0_from_basic_relation(FieldValue const& rho,
                                               FieldValue const& q) {
    FieldValue const d = q.inverse() - q;
    if (d.is_zero()) {
      throw Error(ErrorCode::precondition, "q - q^{-1} = 0");
    }
    return (rho.inverse() - rho) / d + rho.field().one();
  }

  //! Roots u_1..u_r with their omega sequence; in the nondegenerate kind also
  //! rho and q, tied to w_0 by rho^{-1} - rho = (q^{-1} - q)(w_0 - 1).
  class ParamSet {
   public:
    static ParamSet degenerate(std::vector<FieldValue> u, OmegaSeq omega) {
      ParamSet p(ParamKind::degenerate, std::move(u), std::move(omega));
      return p;
    }

    static ParamSet nondegenerate(std::vector<FieldValue> u,
                                  FieldValue              rho,
                                  FieldValue              q,
                                  OmegaSeq                omega) {
      ParamSet p(ParamKind::nondegenerate, std::move(u), std::move(omega));
      for (auto const* x : {&rho, &q}) {
        if (!(x->field() == p.field())) {
          throw Error(ErrorCode::field_mismatch, "rho or q");
        }
      }
      for (std::size_t i = 0; i < p.u_.size(); ++i) {
        if (p.u_[i].is_zero()) {
          throw Error(ErrorCode::precondition,
                      "u_" + std::to_string(i + 1) + " must be invertible");
        }
      }
      if (rho.is_zero() || q.is_zero()) {
        throw Error(ErrorCode::precondition, "rho and q must be invertible");
      }
      if (p.omega_.size() == 0) {
        throw Error(ErrorCode::insufficient_prefix, "w_0 is required");
      }
      FieldValue const lhs = rho.inverse() - rho;
      FieldValue const rhs
          = (q.inverse() - q) * (p.omega_[0] - p.field().one());
      if (!(lhs == rhs)) {
        throw Error(ErrorCode::constraint_violation,
                    "rho^{-1} - rho = (q^{-1} - q)(w_0 - 1) fails: "
                        + lhs.to_string() + " != " + rhs.to_string());
      }
      p.rho_ = std::move(rho);
      p.q_   = std::move(q);
      return p;
    }

    ParamKind kind() const noexcept {
      return kind_;
    }

    bool is_degenerate() const noexcept {
      return kind_ == ParamKind::degenerate;
    }

    Field const& field() const noexcept {
      return omega_.field();
    }

    std::size_t r() const noexcept {
      return u_.size();
    }

    std::vector<FieldValue> const& u() const noexcept {
      return u_;
    }

    OmegaSeq const& omega() const noexcept {
      return omega_;
    }

    FieldValue const& rho() const {
      require_nondegenerate("rho");
      return *rho_;
    }

    FieldValue const& q() const {
      require_nondegenerate("q");
      return *q_;
    }

    //! q - q^{-1}
    FieldValue q_diff() const {
      return q() - q().inverse();
    }

    //! Same data with a different omega sequence (revalidated).
    ParamSet with_omega(OmegaSeq omega) const {
      if (is_degenerate()) {
        return degenerate(u_, std::move(omega));
      }
      return nondegenerate(u_, *rho_, *q_, std::move(omega));
    }

    ParamSet with_u(std::vector<FieldValue> u) const {
      if (is_degenerate()) {
        return degenerate(std::move(u), omega_);
      }
      return nondegenerate(std::move(u), *rho_, *q_, omega_);
    }

   private:
    ParamSet(ParamKind k, std::vector<FieldValue> u, OmegaSeq omega)
        : kind_(k), u_(std::move(u)), omega_(std::move(omega)) {
      if (u_.empty()) {
        throw Error(ErrorCode::invalid_argument, "at least one root is required");
      }
      for (auto const& x : u_) {
        if (!(x.field() == omega_.field())) {
          throw Error(ErrorCode::field_mismatch,
                      "roots in " + x.field().name() + ", omega in "
                          + omega_.field().name());
        }
      }
    }

    void require_nondegenerate(char const* what) const {
      if (is_degenerate()) {
        throw Error(ErrorCode::precondition,
                    std::string(what) + " is only defined for nondegenerate parameters");
      }
    }

    ParamKind                 kind_;
    std::vector<FieldValue>   u_;
    OmegaSeq                  omega_;
    std::optional<FieldValue> rho_;
    std::optional<FieldValue> q_;
  };

}  // namespace cbmw

#endif  // CBMW_PARAMS_HPP_
