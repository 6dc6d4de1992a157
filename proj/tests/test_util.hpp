#ifndef CBMW_TESTS_TEST_UTIL_HPP_
#define CBMW_TESTS_TEST_UTIL_HPP_

#include <cbmw/cbmw.hpp>

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace testutil {

  using cbmw::Field;
  using cbmw::FieldValue;

  inline Field const& Q() {
    static Field const f = Field::rational();
    return f;
  }

  inline FieldValue qv(long n, long d = 1) {
    return Q().from_rational(mpq_class(n, d));
  }

  inline std::vector<FieldValue> ints(Field const& F, std::initializer_list<long> xs) {
    std::vector<FieldValue> out;
    for (long x : xs) {
      out.push_back(F.from_int(x));
    }
    return out;
  }

  inline std::vector<std::string> strs(std::vector<FieldValue> const& v) {
    std::vector<std::string> out;
    for (auto const& x : v) {
      out.push_back(x.to_string());
    }
    return out;
  }

  //! Symbolic variable u_{i+1} among r.
  inline cbmw::MPoly u(std::size_t r, std::size_t i) {
    return cbmw::MPoly::variable(r, i);
  }

  inline cbmw::MPoly k(std::size_t r, long c) {
    return cbmw::MPoly::constant(r, c);
  }

}  // namespace testutil

namespace cbmw {

  // Readable gtest failure messages.
  inline void PrintTo(FieldValue const& v, std::ostream* os) {
    *os << v.to_string();
  }

}  // namespace cbmw

#endif  // CBMW_TESTS_TEST_UTIL_HPP_
