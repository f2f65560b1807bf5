#include "drg/graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <fstream>
#include <sstream>

namespace drg {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  using K = GraphFormatError::Kind;
  if (n <= 0) throw GraphFormatError(K::Parse, "graph: vertex count must be positive");
  Graph g;
  g.n_ = n;
  g.words_ = (n + 63) / 64;
  g.adj_.assign(static_cast<size_t>(n) * g.words_, 0);
  g.neighbors_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw GraphFormatError(K::BadIndex, "graph: edge (" + std::to_string(u) + "," +
                                              std::to_string(v) + ") out of range for n = " +
                                              std::to_string(n));
    if (u == v)
      throw GraphFormatError(K::SelfLoop, "graph: self-loop at vertex " + std::to_string(u));
    if (g.adjacent(u, v))
      throw GraphFormatError(K::DuplicateEdge, "graph: duplicate edge (" + std::to_string(u) + "," +
                                                   std::to_string(v) + ")");
    g.adj_[static_cast<size_t>(u) * g.words_ + (v >> 6)] |= uint64_t(1) << (v & 63);
    g.adj_[static_cast<size_t>(v) * g.words_ + (u >> 6)] |= uint64_t(1) << (u & 63);
    g.neighbors_[u].push_back(v);
    g.neighbors_[v].push_back(u);
    ++g.edge_count_;
  }
  for (auto& nb : g.neighbors_) std::sort(nb.begin(), nb.end());

  // Connectivity.
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors_[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
  }
  if (reached != n)
    throw GraphFormatError(K::Disconnected, "graph: not connected (" + std::to_string(reached) +
                                                " of " + std::to_string(n) + " vertices reachable)");
  return g;
}

Graph Graph::parse(std::istream& in) {
  using K = GraphFormatError::Kind;
  std::string line;
  long n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n) || n <= 0) throw GraphFormatError(K::Parse, "graph: bad header line '" + line + "'");
      continue;
    }
    long u, v;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v)) throw GraphFormatError(K::Parse, "graph: bad edge line '" + line + "'");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw GraphFormatError(K::Parse, "graph: empty input");
  return from_edges(static_cast<int>(n), edges);
}

Graph Graph::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphFormatError(GraphFormatError::Kind::Parse, "graph: cannot open " + path);
  return parse(in);
}

std::string Graph::serialize() const {
  std::string out = std::to_string(n_) + "\n";
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors_[u])
      if (u < v) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

void Graph::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw GraphFormatError(GraphFormatError::Kind::Parse, "graph: cannot write " + path);
  out << serialize();
}

DistanceData::DistanceData(const Graph& g) : n_(g.n()), words_(g.words()) {
  dist_.assign(static_cast<size_t>(n_) * n_, 255);
  std::vector<int> frontier, next;
  for (int s = 0; s < n_; ++s) {
    uint8_t* row = dist_.data() + static_cast<size_t>(s) * n_;
    row[s] = 0;
    frontier.assign(1, s);
    int d = 0;
    while (!frontier.empty()) {
      ++d;
      next.clear();
      for (int u : frontier)
        for (int w : g.neighbors(u))
          if (row[w] == 255) {
            row[w] = static_cast<uint8_t>(d);
            next.push_back(w);
          }
      frontier.swap(next);
      if (!frontier.empty() && d > diameter_) diameter_ = d;
    }
  }
}

std::vector<uint64_t> DistanceData::distance_matrix(int i) const {
  std::vector<uint64_t> m(static_cast<size_t>(n_) * words_, 0);
  for (int u = 0; u < n_; ++u) {
    const uint8_t* row = dist_.data() + static_cast<size_t>(u) * n_;
    uint64_t* out = m.data() + static_cast<size_t>(u) * words_;
    for (int v = 0; v < n_; ++v)
      if (row[v] == i) out[v >> 6] |= uint64_t(1) << (v & 63);
  }
  return m;
}

std::string DistanceRegularityWitness::to_string() const {
  return std::string("pair (") + std::to_string(x) + "," + std::to_string(y) + ") at distance " +
         std::to_string(i) + ": " + which + "_" + std::to_string(i) + " = " +
         std::to_string(found) + " != " + std::to_string(expected);
}

DistanceRegularityResult intersection_numbers(const Graph& g, const DistanceData& dd) {
  DistanceRegularityResult res;
  const int n = g.n();
  const int D = dd.diameter();
  // counts[i] = (c_i, a_i, b_i) from the first pair seen at distance i.
  std::vector<std::array<long, 3>> counts(D + 1, {-1, -1, -1});
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int i = dd.dist(x, y);
      long c = 0, a = 0, b = 0;
      for (int w : g.neighbors(y)) {
        int dw = dd.dist(x, w);
        if (dw == i - 1)
          ++c;
        else if (dw == i)
          ++a;
        else
          ++b;
      }
      auto& expect = counts[i];
      if (expect[0] < 0) {
        expect = {c, a, b};
        continue;
      }
      const long found[3] = {c, a, b};
      for (int t = 0; t < 3; ++t)
        if (expect[t] != found[t]) {
          res.witness = DistanceRegularityWitness{x, y, i, "cab"[t], expect[t], found[t]};
          return res;
        }
    }
  }
  std::vector<Integer> bs, cs;
  for (int i = 0; i < D; ++i) bs.emplace_back(counts[i][2]);
  for (int i = 1; i <= D; ++i) cs.emplace_back(counts[i][0]);
  res.array = IntersectionArray::validate(bs, cs);
  return res;
}

IntersectionArray require_intersection_array(const Graph& g, const DistanceData& dd) {
  DistanceRegularityResult res = intersection_numbers(g, dd);
  if (!res.is_distance_regular())
    throw NotDistanceRegular("graph is not distance-regular: " + res.witness->to_string());
  return *res.array;
}

}  // namespace drg
