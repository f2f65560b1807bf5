#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drg/feasibility.hpp"
#include "drg/intersection_array.hpp"

namespace drg {

// Outcome tag for one (D, c_2) candidate of the c_2 <= 5 classification.
enum class ClassificationVerdict {
  ExistsUnique,            // a unique graph with these parameters is known
  NonexistentIntegrality,  // ruled out here by a failed feasibility screen
  NonexistentCited,        // ruled out by a cited classification theorem
  DualPolarFamily,         // the surviving infinite family A_{2D-1}(2)
  InvalidArray,            // the parameter formulas yield no valid array
};

std::string to_string(ClassificationVerdict v);

struct ClassificationEntry {
  int D = 0;
  int c2 = 0;
  // Raw formula values b_i = (g - [i])(sigma - alpha [i]), c_i = [i](1 + alpha [i-1])
  // for (D, b, alpha, sigma) = (D, -2, -1 - c2, 2 + alpha - alpha g), g = [D].
  std::vector<Integer> raw_b, raw_c;
  std::optional<IntersectionArray> array;       // set iff validation passed
  std::string invalid_reason;                   // set iff it did not
  std::optional<FeasibilityReport> feasibility;  // set iff array is present
  ClassificationVerdict verdict = ClassificationVerdict::InvalidArray;
  std::string graph_name;  // for ExistsUnique / DualPolarFamily rows
  std::string citation;    // literature reference or local witness
};

// The classification sweep at diameter D: candidates c_2 = 1..5 of the
// two-parameter family with base -2.  Accepts 2 <= D <= 8 (the D = 8 row
// exceeds 64-bit vertex counts and exercises the bignum path); throws
// DiameterOutOfRange otherwise.
std::vector<ClassificationEntry> classify(int D);

}  // namespace drg
