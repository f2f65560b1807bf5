#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "drg/intersection_array.hpp"
#include "drg/rational.hpp"

namespace drg {

// Classical parameters (D, b, alpha, sigma) with Gaussian-bracket base b:
//   c_i = [i](1 + alpha [i-1]),  b_i = ([D] - [i])(sigma - alpha [i]),
// where [i] = gaussian_bracket(i, b).  b is an integer, not 0 or -1.
struct ClassicalParameters {
  int D = 0;
  Integer b;
  Rational alpha;
  Rational sigma;

  friend bool operator==(const ClassicalParameters& x, const ClassicalParameters& y) {
    return x.D == y.D && x.b == y.b && x.alpha == y.alpha && x.sigma == y.sigma;
  }
  std::string to_string() const {
    return "(" + std::to_string(D) + ", " + b.get_str() + ", " + alpha.to_string() + ", " +
           sigma.to_string() + ")";
  }
};

// Instantiates the formulas and validates the result.  Throws ValidationError
// (kinds as in IntersectionArray::validate, plus NonIntegerEntry when a
// formula value is not an integer).
IntersectionArray classical_array(const ClassicalParameters& cp);

// All classical parameter sets with integer base b in [-k, k] \ {0, -1}
// that reproduce the array exactly (alpha is pinned by c_2, sigma by b_0).
// Requires D >= 2; for D = 1 alpha is underdetermined and the empty list is
// returned.  Result ordered by increasing b.
std::vector<ClassicalParameters> classical_fit(const IntersectionArray& arr);

// Eigenvalue sequence theta_i = b_i / b^i - [i] for i = 0..D, descending in
// the Q-polynomial sense (theta_0 = k).
std::vector<Rational> classical_eigenvalues(const ClassicalParameters& cp);

// Near polygon order: if a_i = a_1 c_i for all 1 <= i <= D and (a_1 + 1)
// divides k, the graph parameters have near-polygon order
// (s, t) = (a_1 + 1, k/(a_1 + 1) - 1); otherwise nullopt.
std::optional<std::pair<Integer, Integer>> near_polygon_order(const IntersectionArray& arr);

}  // namespace drg
