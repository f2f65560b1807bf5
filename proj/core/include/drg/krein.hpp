#pragma once

#include <vector>

#include "drg/intersection_array.hpp"
#include "drg/spectrum.hpp"

namespace drg {

// Krein parameters indexed [h][i][j] by eigenvalue position in the
// descending order of SpectralData (index 0 = k).
using KreinTable = std::vector<std::vector<std::vector<Rational>>>;

// q^h_{ij} = (m_i m_j / n) * sum_l k_l sigma_l(i) sigma_l(j) sigma_l(h).
// Requires an all-rational spectrum; throws IrrationalEigenvalue otherwise.
KreinTable krein_parameters(const IntersectionArray& arr, const SpectralData& sd);

// An ordering is the list of natural (descending) eigenvalue indices in
// Q-sequence position order; position 0 is always natural index 0 (E_0 is
// the trivial idempotent).  An ordering qualifies iff for all positions
// h,i,j: q^{.}_{..} = 0 whenever max(h,i,j) exceeds the sum of the other
// two, and != 0 whenever it equals that sum.
using QPolyOrdering = std::vector<int>;

// Exhaustive search over the D! candidate orderings; deterministic
// (lexicographic) result order.  Throws DiameterTooLargeForSearch when
// D > 6 and IrrationalEigenvalue via krein_parameters.
std::vector<QPolyOrdering> q_polynomial_orderings(const IntersectionArray& arr);

// Same search against a precomputed Krein table.
std::vector<QPolyOrdering> q_polynomial_orderings(const KreinTable& q, int D);

}  // namespace drg
