#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drg/classical.hpp"
#include "drg/feasibility.hpp"
#include "drg/intersection_array.hpp"
#include "drg/krein.hpp"
#include "drg/spectrum.hpp"
#include "drg/theorem.hpp"

namespace drg {

// Everything the `analyze` command reports about one intersection array.
// Theorem tables are evaluated at every eigenvalue that occurs as E_1 of
// some Q-polynomial ordering; `theorem_note` records why the list is empty
// when it is (no ordering, irrational spectrum, or diameter beyond the
// search cap).
struct AnalysisReport {
  IntersectionArray arr;
  SpectralData spectrum;
  std::optional<KreinTable> krein;  // present iff the spectrum is rational
  std::vector<QPolyOrdering> orderings;
  std::string orderings_note;  // nonempty when the ordering search was skipped
  std::vector<ClassicalParameters> classical;
  std::optional<std::pair<Integer, Integer>> near_polygon;
  std::vector<TheoremTable> tables;
  std::string theorem_note;
  FeasibilityReport feasibility;

  bool mixed() const {
    for (const auto& t : tables)
      if (t.unanimity == TheoremTable::Unanimity::Mixed) return true;
    return false;
  }
};

AnalysisReport analyze_array(const IntersectionArray& arr);

// Plain-text rendering; non-integer rationals are echoed as "p/q (~decimal)".
std::string render_text(const AnalysisReport& rep);

// JSON rendering with top-level keys input, spectrum, krein, classical,
// near_polygon, theorem, feasibility.  All exact numbers are decimal
// strings ("p/q" for non-integers) so arbitrary-precision values survive.
std::string render_json(const AnalysisReport& rep);

}  // namespace drg
