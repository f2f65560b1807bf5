#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drg/errors.hpp"
#include "drg/intersection_array.hpp"

namespace drg {

// Simple connected undirected graph on vertices 0..n-1.  Adjacency is kept
// both as per-vertex sorted neighbor lists and as row bitsets (64-bit
// words) for O(n/64) intersection tests.
class Graph {
 public:
  // Throws GraphFormatError: BadIndex, SelfLoop, DuplicateEdge,
  // Disconnected (connectivity is part of the type's invariant).
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  // File format: first line n, then one "u v" pair per line, 0-based,
  // each edge listed once.  Blank lines ignored.
  static Graph parse(std::istream& in);
  static Graph load(const std::string& path);
  void save(const std::string& path) const;
  std::string serialize() const;

  int n() const { return n_; }
  long edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(neighbors_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }
  bool adjacent(int u, int v) const {
    return (adj_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
  }
  // Row bitset of vertex v (words_ 64-bit words).
  const uint64_t* row_bits(int v) const { return adj_.data() + static_cast<size_t>(v) * words_; }
  int words() const { return words_; }

 private:
  Graph() = default;
  int n_ = 0;
  int words_ = 0;
  long edge_count_ = 0;
  std::vector<uint64_t> adj_;
  std::vector<std::vector<int>> neighbors_;
};

// All-pairs distances (BFS from every vertex) and the diameter.
class DistanceData {
 public:
  explicit DistanceData(const Graph& g);
  int diameter() const { return diameter_; }
  int dist(int u, int v) const { return dist_[static_cast<size_t>(u) * n_ + v]; }
  // Boolean distance-i matrix as row bitsets, built on demand; rows are
  // words() 64-bit words long.  distance_matrix(0) is the identity and the
  // matrices over i = 0..diameter partition the all-ones matrix.
  std::vector<uint64_t> distance_matrix(int i) const;
  int n() const { return n_; }
  int words() const { return words_; }

 private:
  int n_ = 0;
  int words_ = 0;
  int diameter_ = 0;
  std::vector<uint8_t> dist_;
};

// Distance-regularity certificate: either the intersection array (every
// (c_i, a_i, b_i) count depends only on i = d(x, y)) or a concrete witness
// pair where some count deviates.
struct DistanceRegularityWitness {
  int x = 0, y = 0;      // d(x, y) = i
  int i = 0;
  char which = 'c';      // 'c', 'a' or 'b' count
  long expected = 0, found = 0;
  std::string to_string() const;
};

struct DistanceRegularityResult {
  std::optional<IntersectionArray> array;
  std::optional<DistanceRegularityWitness> witness;
  bool is_distance_regular() const { return array.has_value(); }
};

DistanceRegularityResult intersection_numbers(const Graph& g, const DistanceData& dd);

// Convenience: certify and return the array, throwing NotDistanceRegular
// (with the witness in the message) when certification fails.
IntersectionArray require_intersection_array(const Graph& g, const DistanceData& dd);

}  // namespace drg
