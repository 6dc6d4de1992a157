#ifndef CBMW_CELL_DATUM_HPP_
#define CBMW_CELL_DATUM_HPP_

// Bookkeeping for cell data: a poset of labels with index-set sizes.  Only
// the counting content is modelled (rank = sum of squared sizes).

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "counting.hpp"
#include "error.hpp"

namespace cbmw {

  class CellDatum {
   public:
    //! Adds a label with |T(label)| = size.
    void add(std::string const& label, mpz_class const& size) {
      if (!sizes_.emplace(label, size).second) {
        throw Error(ErrorCode::label_collision, "label " + label);
      }
    }

    //! Records above > below.
    void order(std::string const& above, std::string const& below) {
      if (!sizes_.count(above) || !sizes_.count(below)) {
        throw Error(ErrorCode::invalid_argument, "unknown label in order relation");
      }
      greater_.emplace(above, below);
    }

    bool greater(std::string const& a, std::string const& b) const {
      return greater_.count({a, b}) > 0;
    }

    std::map<std::string, mpz_class> const& sizes() const noexcept {
      return sizes_;
    }

    std::set<std::pair<std::string, std::string>> const& relations() const noexcept {
      return greater_;
    }

    std::size_t label_count() const noexcept {
      return sizes_.size();
    }

    bool empty() const noexcept {
      return sizes_.empty();
    }

    //! sum over labels of |T(label)|^2.
    mpz_class rank() const {
      mpz_class out = 0;
      for (auto const& [l, s] : sizes_) {
        out += s * s;
      }
      return out;
    }

   private:
    std::map<std::string, mpz_class>              sizes_;
    std::set<std::pair<std::string, std::string>> greater_;
  };

  //! Union of the two data with every label of J above every label of H.
  inline CellDatum extend_cell_datum(CellDatum const& J, CellDatum const& H) {
    CellDatum out;
    for (auto const& [l, s] : J.sizes()) {
      out.add(l, s);
    }
    for (auto const& [l, s] : H.sizes()) {
      if (J.sizes().count(l)) {
        throw Error(ErrorCode::label_collision, "label " + l + " in both data");
      }
      out.add(l, s);
    }
    for (auto const* d : {&J, &H}) {
      for (auto const& [a, b] : d->relations()) {
        out.order(a, b);
      }
    }
    for (auto const& [a, sa] : J.sizes()) {
      for (auto const& [b, sb] : H.sizes()) {
        out.order(a, b);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Partitions and standard tableaux counts
  ////////////////////////////////////////////////////////////////////////

  using Partition = std::vector<unsigned>;  // weakly decreasing, no zeros

  inline std::vector<Partition> partitions(unsigned n) {
    std::vector<Partition> out;
    Partition              cur;
    auto rec = [&](auto&& self, unsigned rest, unsigned maxpart) -> void {
      if (rest == 0) {
        out.push_back(cur);
        return;
      }
      for (unsigned p = std::min(rest, maxpart); p >= 1; --p) {
        cur.push_back(p);
        self(self, rest - p, p);
        cur.pop_back();
      }
    };
    rec(rec, n, n);
    return out;
  }

  //! Number of standard tableaux of shape lambda (hook length formula).
  inline mpz_class standard_tableaux(Partition const& lambda) {
    unsigned n = 0;
    for (auto p : lambda) {
      n += p;
    }
    mpz_class hooks = 1;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      for (unsigned j = 0; j < lambda[i]; ++j) {
        unsigned below = 0;
        for (std::size_t k = i + 1; k < lambda.size() && lambda[k] > j; ++k) {
          ++below;
        }
        hooks *= lambda[i] - j - 1 + below + 1;
      }
    }
    return factorial(n) / hooks;
  }

  using Multipartition = std::vector<Partition>;

  inline std::vector<Multipartition> multipartitions(unsigned n, unsigned r) {
    std::vector<Multipartition> out;
    Multipartition              cur(r);
    auto rec = [&](auto&& self, unsigned slot, unsigned rest) -> void {
      if (slot + 1 == r) {
        for (auto const& p : partitions(rest)) {
          cur[slot] = p;
          out.push_back(cur);
        }
        return;
      }
      for (unsigned k = 0; k <= rest; ++k) {
        for (auto const& p : partitions(k)) {
          cur[slot] = p;
          self(self, slot + 1, rest - k);
        }
      }
    };
    if (r > 0) {
      rec(rec, 0, n);
    }
    return out;
  }

  //! Standard tableaux of a multipartition: n!/prod |l_i|! * prod f^{l_i}.
  inline mpz_class standard_tableaux(Multipartition const& lambda) {
    unsigned  n   = 0;
    mpz_class out = 1;
    mpz_class den = 1;
    for (auto const& p : lambda) {
      unsigned m = 0;
      for (auto x : p) {
        m += x;
      }
      n += m;
      out *= standard_tableaux(p);
      den *= factorial(m);
    }
    return out * factorial(n) / den;
  }

  inline std::string to_string(Multipartition const& lambda) {
    std::string out = "(";
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      out += i ? "|" : "";
      for (std::size_t j = 0; j < lambda[i].size(); ++j) {
        out += (j ? "," : "") + std::to_string(lambda[i][j]);
      }
    }
    return out + ")";
  }

  //! Labels: r-multipartitions of n; sizes: standard tableaux counts.
  //! rank = r^n n!.
  inline CellDatum hecke_cell_datum(unsigned n, unsigned r) {
    CellDatum out;
    for (auto const& l : multipartitions(n, r)) {
      out.add("H" + to_string(l), standard_tableaux(l));
    }
    return out;
  }

  //! Labels (f, lambda), 1 <= f <= n/2 and lambda a d-multipartition of
  //! n - 2f; |T| = d^f C(n, 2f) (2f-1)!! f^lambda.  rank = d^n b'(n).
  inline CellDatum ideal_cell_datum(unsigned n, unsigned d) {
    CellDatum out;
    for (unsigned f = 1; 2 * f <= n; ++f) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), n, 2 * f);
      mpz_class const lead = power(d, f) * binom * odd_double_factorial(f);
      for (auto const& l : multipartitions(n - 2 * f, d)) {
        out.add("J" + std::to_string(f) + to_string(l), lead * standard_tableaux(l));
      }
    }
    return out;
  }

}  // namespace cbmw

#endif  // CBMW_CELL_DATUM_HPP_
