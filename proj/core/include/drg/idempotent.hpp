#pragma once

#include <cstdint>
#include <vector>

#include "drg/graph.hpp"
#include "drg/krein.hpp"
#include "drg/spectrum.hpp"

namespace drg {

// Primitive idempotent E of a distance-regular graph at a rational
// eigenvalue theta, stored exactly as an int64 matrix M with a common
// denominator L: E = M / L, where E_{xy} = (m/n) sigma_{d(x,y)}.
//
// Construction *verifies* (all in exact integer arithmetic):
//   E^2 = E        (M M = L M; doubles as a distance-regularity check),
//   A E = theta E  (adjacency rows against M),
//   trace E = m.
// Overflow is excluded beforehand from exact bounds; inputs that would
// exceed them throw MatrixOverflow (no supported graph does).
class ExactIdempotent {
 public:
  ExactIdempotent(const Graph& g, const DistanceData& dd, const IntersectionArray& arr,
                  const Rational& theta);

  const Rational& theta() const { return theta_; }
  const Rational& m() const { return m_; }  // rank = multiplicity
  int n() const { return n_; }
  const Integer& denominator() const { return denom_; }
  int64_t scaled(int x, int y) const { return sc_[static_cast<size_t>(x) * n_ + y]; }
  Rational entry(int x, int y) const { return Rational(Integer(scaled(x, y)), denom_); }
  Rational trace() const;
  // Scaled entry value by distance class (entry = value_by_distance[d(x,y)] / L).
  const std::vector<int64_t>& value_by_distance() const { return by_dist_; }

 private:
  int n_;
  Rational theta_, m_;
  Integer denom_;
  std::vector<int64_t> sc_;
  std::vector<int64_t> by_dist_;
};

// Krein parameters recovered from the idempotent matrices themselves:
//   q^h_{ij} = (n / m_h) * sum_{x,y} (E_i)_{xy} (E_j)_{xy} (E_h)_{xy},
// accumulated in 128-bit integers with a proven bound.  The spectrum must
// be fully rational.  Agreement with the parameter-level table is exact.
KreinTable matrix_krein_parameters(const std::vector<ExactIdempotent>& idempotents);

// All D+1 idempotents of the graph, in descending-eigenvalue order.
std::vector<ExactIdempotent> all_idempotents(const Graph& g, const DistanceData& dd,
                                             const IntersectionArray& arr, const SpectralData& sd);

}  // namespace drg
