#pragma once

// Shared fixtures: the frozen reference arrays and a few small graphs
// built inline from first principles (so they are independent of the
// library's own construction code).

#include <utility>
#include <vector>

#include "drg/graph.hpp"
#include "drg/intersection_array.hpp"
#include "drg/rational.hpp"

namespace test_util {

inline drg::IntersectionArray make_array(const std::vector<long>& b, const std::vector<long>& c) {
  std::vector<drg::Integer> bi(b.begin(), b.end()), ci(c.begin(), c.end());
  return drg::IntersectionArray::validate(bi, ci);
}

// The classified family and friends.
inline drg::IntersectionArray grid_array() { return make_array({4, 2}, {1, 2}); }
inline drg::IntersectionArray gq22_array() { return make_array({6, 4}, {1, 3}); }
inline drg::IntersectionArray dpa3_array() { return make_array({10, 8}, {1, 5}); }
inline drg::IntersectionArray gh28_array() { return make_array({18, 16, 16}, {1, 1, 9}); }
inline drg::IntersectionArray golay3_array() { return make_array({24, 22, 20}, {1, 2, 12}); }
inline drg::IntersectionArray octad_array() { return make_array({30, 28, 24}, {1, 3, 15}); }
inline drg::IntersectionArray dpa5_array() { return make_array({42, 40, 32}, {1, 5, 21}); }
// The (D, c2) = (3, 4) candidate, rejected by multiplicity integrality.
inline drg::IntersectionArray phantom_array() { return make_array({36, 34, 28}, {1, 4, 18}); }
// The (D, c2) = (2, 4) candidate, same fate.
inline drg::IntersectionArray d2c4_array() { return make_array({8, 6}, {1, 4}); }
// Controls outside the family.
inline drg::IntersectionArray petersen_array() { return make_array({3, 2}, {1, 1}); }
inline drg::IntersectionArray t5_array() { return make_array({6, 2}, {1, 4}); }

inline drg::Rational Q(long n, long d = 1) { return drg::Rational(n, d); }

// Petersen graph as the Kneser graph K(5,2): duads of {0..4}, adjacent
// iff disjoint.
inline drg::Graph petersen_graph() {
  std::vector<std::pair<int, int>> duads;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) duads.emplace_back(a, b);
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < duads.size(); ++i)
    for (size_t j = i + 1; j < duads.size(); ++j) {
      auto [a, b] = duads[i];
      auto [c, d] = duads[j];
      if (a != c && a != d && b != c && b != d) edges.emplace_back((int)i, (int)j);
    }
  return drg::Graph::from_edges(10, edges);
}

// Triangular graph T(5) = Johnson J(5,2): duads adjacent iff they meet.
inline drg::Graph t5_graph() {
  std::vector<std::pair<int, int>> duads;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) duads.emplace_back(a, b);
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < duads.size(); ++i)
    for (size_t j = i + 1; j < duads.size(); ++j) {
      auto [a, b] = duads[i];
      auto [c, d] = duads[j];
      if (a == c || a == d || b == c || b == d) edges.emplace_back((int)i, (int)j);
    }
  return drg::Graph::from_edges(10, edges);
}

// 3x3 rook graph built directly from the row/column model.
inline drg::Graph rook_graph() {
  std::vector<std::pair<int, int>> edges;
  auto idx = [](int r, int c) { return 3 * r + c; };
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      for (int c2 = c + 1; c2 < 3; ++c2) edges.emplace_back(idx(r, c), idx(r, c2));
      for (int r2 = r + 1; r2 < 3; ++r2) edges.emplace_back(idx(r, c), idx(r2, c));
    }
  return drg::Graph::from_edges(9, edges);
}

inline drg::Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return drg::Graph::from_edges(n, edges);
}

// Octahedron K_{2,2,2}: i adjacent to j unless j = i + 3 (antipode).
inline drg::Graph octahedron_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (j - i != 3) edges.emplace_back(i, j);
  return drg::Graph::from_edges(6, edges);
}

}  // namespace test_util
