#pragma once

#include <string>
#include <vector>

#include "drg/classical.hpp"
#include "drg/intersection_array.hpp"
#include "drg/krein.hpp"
#include "drg/spectrum.hpp"

namespace drg {

// Exact inner products of the Cauchy-Schwarz pair used in the c_2 <= 5
// bound: for unit-normalized primitive idempotent data with sigma_1 = -1/2,
//   <u,v> = -c_2 m / n,  <u,u> = 5m/(2n),  <v,v> = (c_2^2 + 3 c_2) m / (4n),
// and slack = <u,u><v,v> - <u,v>^2 = 3 m^2 c_2 (5 - c_2) / (8 n^2), whose
// sign is the sign of c_2 (5 - c_2).
struct CauchySchwarzQuantities {
  Rational uv, uu, vv, slack;
};
CauchySchwarzQuantities cauchy_schwarz_quantities(const Integer& c2, const Rational& m,
                                                  const Integer& n);

// Verdict on one equivalence condition at a fixed eigenvalue.
struct ConditionVerdict {
  std::string label;    // "ii", "iii", "v", "vi" (graph level adds "i", "iv")
  bool holds = false;
  std::string witness;  // human-readable justification either way
};

// (ii) classical parameters (D, -2, alpha, sigma) with
//      sigma = 2 + alpha - alpha [D], at theta = b_1 / (-2) - 1.
ConditionVerdict condition_ii(const IntersectionArray& arr, const Rational& theta);

// (iii) regular near-polygon order (2, t) with theta = -t - 1.
ConditionVerdict condition_iii(const IntersectionArray& arr, const Rational& theta);

// (v) the array is the 3x3 rook graph, GQ(2,2), GH(2,8), the ternary Golay
//     coset graph, the Witt octad graph, or a dual polar graph on
//     A_{2D-1}(2) recognized via the classical fit (D, -2, -6, 6[D] - 4);
//     and theta is the minimal eigenvalue.
ConditionVerdict condition_v(const IntersectionArray& arr, const Rational& theta);

// (vi) the cosine sequence of theta is sigma_i = (-1/2)^i.
ConditionVerdict condition_vi(const IntersectionArray& arr, const Rational& theta);

// Whether theorem_table must insist that theta is the E_1 eigenvalue of
// some Q-polynomial ordering (Require) or merely record that it is not
// (Evaluate).
enum class QPolyEnforcement { Require, Evaluate };

struct TheoremTable {
  Rational theta;
  int theta_index = -1;                  // position of theta in the descending spectrum
  bool qpoly_at_theta = false;           // theta is E_1 of some ordering
  std::vector<QPolyOrdering> orderings;  // all Q-polynomial orderings of the array
  std::vector<ConditionVerdict> verdicts;  // ii, iii, v, vi
  enum class Unanimity { AllHold, AllFail, Mixed } unanimity = Unanimity::AllFail;

  const ConditionVerdict& verdict(const std::string& label) const;
};

// Evaluates the four parameter-level conditions of the dependency theorem
// at the eigenvalue theta.  Throws TerminalIdentityFails when theta is not
// an eigenvalue, DiameterTooLargeForSearch / IrrationalEigenvalue from the
// ordering search, and NotQPolynomialAtTheta in Require mode when no
// Q-polynomial ordering has E_1 at theta.  A Mixed unanimity on a feasible
// array indicates an internal inconsistency; callers decide how to
// surface it.
TheoremTable theorem_table(const IntersectionArray& arr, const Rational& theta,
                           QPolyEnforcement enforce = QPolyEnforcement::Require);

}  // namespace drg
