#pragma once

#include <string>
#include <vector>

#include "drg/intersection_array.hpp"
#include "drg/spectrum.hpp"

namespace drg {

// One feasibility screen.  `approximate` marks screens that had to use
// interval (irrational-eigenvalue) data; Skipped records screens that do
// not apply (e.g. ordering search beyond the diameter cap) and does not
// count against all_pass().
struct FeasibilityCheck {
  enum class Outcome { Pass, Fail, Skipped };
  std::string name;
  Outcome outcome;
  bool approximate = false;
  std::string detail;
};

struct FeasibilityReport {
  std::vector<FeasibilityCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (c.outcome == FeasibilityCheck::Outcome::Fail) return false;
    return true;
  }
  const FeasibilityCheck* first_failure() const {
    for (const auto& c : checks)
      if (c.outcome == FeasibilityCheck::Outcome::Fail) return &c;
    return nullptr;
  }
};

// Screens, in order: k_i integrality (holds by construction), a_i >= 0
// (by construction), multiplicity integrality at every rational
// eigenvalue, Krein parameter nonnegativity (exact when the spectrum is
// rational, midpoint-based with tolerance 1e-6 otherwise), existence of a
// Q-polynomial ordering (skipped when D > 6 or the spectrum is
// irrational).
FeasibilityReport feasibility_report(const IntersectionArray& arr);

// Same, reusing an already-computed spectrum.
FeasibilityReport feasibility_report(const IntersectionArray& arr, const SpectralData& sd);

}  // namespace drg
