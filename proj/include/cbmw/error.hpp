#ifndef CBMW_ERROR_HPP_
#define CBMW_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace cbmw {

  //! Classifies every failure the library can raise.  The CLI maps all of
  //! them to exit code 2; library callers can switch on the code.
  enum class ErrorCode {
    invalid_argument,
    index_out_of_range,
    field_mismatch,
    division_by_zero,
    pole_at_infinity,
    integrality,
    precondition,
    closure_absent,
    insufficient_prefix,
    constraint_violation,
    cap_exceeded,
    size_mismatch,
    label_collision,
    no_recursion,
    not_split,
    verification_failed,
    parse
  };

  inline char const* to_string(ErrorCode c) noexcept {
    switch (c) {
      case ErrorCode::invalid_argument: return "invalid argument";
      case ErrorCode::index_out_of_range: return "index out of range";
      case ErrorCode::field_mismatch: return "field mismatch";
      case ErrorCode::division_by_zero: return "division by zero";
      case ErrorCode::pole_at_infinity: return "pole at infinity";
      case ErrorCode::integrality: return "integrality";
      case ErrorCode::precondition: return "precondition";
      case ErrorCode::closure_absent: return "closure absent";
      case ErrorCode::insufficient_prefix: return "insufficient prefix";
      case ErrorCode::constraint_violation: return "constraint violation";
      case ErrorCode::cap_exceeded: return "cap exceeded";
      case ErrorCode::size_mismatch: return "size mismatch";
      case ErrorCode::label_collision: return "label collision";
      case ErrorCode::no_recursion: return "no recursion";
      case ErrorCode::not_split: return "not split";
      case ErrorCode::verification_failed: return "verification failed";
      case ErrorCode::parse: return "parse error";
    }
    return "unknown";
  }

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          code_(code) {}

    ErrorCode code() const noexcept {
      return code_;
    }

   private:
    ErrorCode code_;
  };

}  // namespace cbmw

#endif  // CBMW_ERROR_HPP_
