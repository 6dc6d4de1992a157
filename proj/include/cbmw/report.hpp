#ifndef CBMW_REPORT_HPP_
#define CBMW_REPORT_HPP_

// Pass/fail reports with reproducible witnesses.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cbmw {

  //! The first equation found to fail: which relation, at which index, and
  //! the two sides as printed field elements.
  struct Witness {
    std::string relation;
    long        index = 0;
    std::string lhs;
    std::string rhs;

    std::string to_string() const {
      return relation + " at index " + std::to_string(index) + ": " + lhs
             + " != " + rhs;
    }
  };

  struct CriterionResult {
    std::string            tag;
    bool                   pass = true;
    std::optional<Witness> witness;
    std::string            detail;

    static CriterionResult passed(std::string tag, std::string detail = "") {
      return {std::move(tag), true, std::nullopt, std::move(detail)};
    }

    static CriterionResult failed(std::string tag, Witness w,
                                  std::string detail = "") {
      return {std::move(tag), false, std::move(w), std::move(detail)};
    }
  };

  class AdmissibilityReport {
   public:
    AdmissibilityReport() = default;

    void add(CriterionResult c) {
      criteria_.push_back(std::move(c));
    }

    //! Appends all criteria of another report.
    void merge(AdmissibilityReport const& o) {
      criteria_.insert(criteria_.end(), o.criteria_.begin(), o.criteria_.end());
    }

    std::vector<CriterionResult> const& criteria() const noexcept {
      return criteria_;
    }

    //! True when every criterion passed (vacuously for an empty report).
    bool pass() const {
      return std::all_of(criteria_.begin(), criteria_.end(),
                         [](auto const& c) { return c.pass; });
    }

    CriterionResult const* find(std::string const& tag) const {
      for (auto const& c : criteria_) {
        if (c.tag == tag) {
          return &c;
        }
      }
      return nullptr;
    }

    CriterionResult const* first_failure() const {
      for (auto const& c : criteria_) {
        if (!c.pass) {
          return &c;
        }
      }
      return nullptr;
    }

    std::string to_string() const {
      std::string out;
      for (auto const& c : criteria_) {
        out += c.tag + ": " + (c.pass ? "pass" : "FAIL");
        if (c.witness) {
          out += " (" + c.witness->to_string() + ")";
        }
        if (!c.detail.empty()) {
          out += " [" + c.detail + "]";
        }
        out += "\n";
      }
      return out;
    }

   private:
    std::vector<CriterionResult> criteria_;
  };

  //! Outcome of a randomized cross-validation run.
  struct HarnessReport {
    std::size_t              samples      = 0;
    std::size_t              agreements   = 0;
    std::size_t              left_passes  = 0;
    std::size_t              right_passes = 0;
    std::vector<std::string> discrepancies;

    bool pass() const {
      return discrepancies.empty() && agreements == samples;
    }

    std::string to_string() const {
      std::string out = "samples " + std::to_string(samples) + ", agreements "
                        + std::to_string(agreements) + ", left passes "
                        + std::to_string(left_passes) + ", right passes "
                        + std::to_string(right_passes) + "\n";
      for (auto const& d : discrepancies) {
        out += "  discrepancy: " + d + "\n";
      }
      return out;
    }
  };

}  // namespace cbmw

#endif  // CBMW_REPORT_HPP_
