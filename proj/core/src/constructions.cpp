#include "drg/constructions.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>

#include "drg/errors.hpp"
#include "drg/gf4.hpp"

namespace drg {
namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// ---------------------------------------------------------------- small ones

Graph grid_3x3_impl() {
  EdgeList edges;
  auto idx = [](int r, int c) { return 3 * r + c; };
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      for (int c2 = c + 1; c2 < 3; ++c2) edges.emplace_back(idx(r, c), idx(r, c2));
      for (int r2 = r + 1; r2 < 3; ++r2) edges.emplace_back(idx(r, c), idx(r2, c));
    }
  return Graph::from_edges(9, edges);
}

Graph gq22_impl() {
  // Duads of {0..5} in lexicographic order; adjacent iff disjoint.
  std::vector<std::pair<int, int>> duads;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) duads.emplace_back(a, b);
  EdgeList edges;
  for (size_t i = 0; i < duads.size(); ++i)
    for (size_t j = i + 1; j < duads.size(); ++j) {
      auto [a, b] = duads[i];
      auto [c, d] = duads[j];
      if (a != c && a != d && b != c && b != d) edges.emplace_back((int)i, (int)j);
    }
  return Graph::from_edges((int)duads.size(), edges);
}

// ------------------------------------------------------------- dual polar

// Totally isotropic D-subspaces of GF(4)^{2D}, one RREF basis each.
// A subspace is stored as its sorted set of projective point codes
// (code = sum v[c] 4^c over the leading-coefficient-1 representative).
std::vector<std::vector<uint32_t>> isotropic_subspaces(int D) {
  const int n = 2 * D;
  std::vector<std::vector<uint32_t>> spaces;
  const uint32_t full = (1u << n) - 1;
  for (uint32_t pivots = 0; pivots <= full; ++pivots) {
    if (__builtin_popcount(pivots) != D) continue;
    std::vector<int> piv;
    for (int c = 0; c < n; ++c)
      if (pivots >> c & 1) piv.push_back(c);
    // Free slots (row, col): non-pivot columns right of the row's pivot.
    std::vector<std::pair<int, int>> free_slots;
    for (int i = 0; i < D; ++i)
      for (int c = piv[i] + 1; c < n; ++c)
        if (!(pivots >> c & 1)) free_slots.emplace_back(i, c);
    const size_t F = free_slots.size();
    std::vector<std::vector<uint8_t>> rows(D, std::vector<uint8_t>(n, 0));
    for (int i = 0; i < D; ++i) rows[i][piv[i]] = 1;
    for (uint64_t t = 0; t < (1ull << (2 * F)); ++t) {
      uint64_t v = t;
      for (size_t s = 0; s < F; ++s, v >>= 2) rows[free_slots[s].first][free_slots[s].second] = v & 3;
      bool iso = true;
      for (int i = 0; i < D && iso; ++i)
        for (int j = i; j < D; ++j)
          if (gf4::hermitian(rows[i].begin(), rows[i].end(), rows[j].begin()) != 0) {
            iso = false;
            break;
          }
      if (!iso) continue;
      // Projective points: canonicalize every nonzero combination.
      std::vector<uint32_t> pts;
      std::vector<uint8_t> w(n);
      for (uint32_t lam = 1; lam < (1u << (2 * D)); ++lam) {
        std::fill(w.begin(), w.end(), 0);
        for (int i = 0; i < D; ++i) {
          uint8_t l = (lam >> (2 * i)) & 3;
          if (l)
            for (int c = 0; c < n; ++c) w[c] = gf4::add(w[c], gf4::mul(l, rows[i][c]));
        }
        int lead = 0;
        while (w[lead] == 0) ++lead;
        uint8_t s = gf4::inv(w[lead]);
        uint32_t code = 0;
        for (int c = 0; c < n; ++c) code |= (uint32_t)gf4::mul(s, w[c]) << (2 * c);
        pts.push_back(code);
      }
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      if ((int)pts.size() != ((1 << (2 * D)) - 1) / 3)
        throw Error("isotropic subspace has wrong projective point count");
      spaces.push_back(std::move(pts));
    }
  }
  return spaces;
}

Graph dual_polar_impl(int D) {
  if (D != 2 && D != 3) throw Error("dual polar construction implemented for D = 2, 3 only");
  auto spaces = isotropic_subspaces(D);
  const int expected = D == 2 ? 27 : 891;  // prod_{i<=D} (2^{2i-1} + 1)
  if ((int)spaces.size() != expected) throw Error("unexpected count of totally isotropic subspaces");
  const size_t meet = ((1u << (2 * (D - 1))) - 1) / 3;  // points shared at dim D-1
  EdgeList edges;
  for (size_t i = 0; i < spaces.size(); ++i)
    for (size_t j = i + 1; j < spaces.size(); ++j) {
      // Sorted-merge intersection count.
      size_t a = 0, b = 0, shared = 0;
      const auto &P = spaces[i], &Q = spaces[j];
      while (a < P.size() && b < Q.size()) {
        if (P[a] < Q[b])
          ++a;
        else if (P[a] > Q[b])
          ++b;
        else
          ++shared, ++a, ++b;
      }
      if (shared == meet) edges.emplace_back((int)i, (int)j);
    }
  return Graph::from_edges((int)spaces.size(), edges);
}

Graph dual_polar_a3() { return dual_polar_impl(2); }
Graph dual_polar_a5() { return dual_polar_impl(3); }

// ------------------------------------------------------------- Golay codes

// Bordered-circulant generator half of the [12,6,6] ternary Golay code.
constexpr uint8_t kTernaryB[6][6] = {
    {0, 1, 1, 1, 1, 1}, {1, 0, 1, 2, 2, 1}, {1, 1, 0, 1, 2, 2},
    {1, 2, 1, 0, 1, 2}, {1, 2, 2, 1, 0, 1}, {1, 1, 2, 2, 1, 0},
};

// Icosahedron on 12 vertices: poles 0 and 11, upper cycle 1..5, lower 6..10.
EdgeList icosahedron_edges() {
  EdgeList e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(0, 1 + i);
    e.emplace_back(11, 6 + i);
    e.emplace_back(1 + i, 1 + (i + 1) % 5);
    e.emplace_back(6 + i, 6 + (i + 1) % 5);
    e.emplace_back(1 + i, 6 + i);
    e.emplace_back(1 + i, 6 + (i + 1) % 5);
  }
  return e;
}

LinearCode ternary_golay_impl() {
  std::vector<std::vector<uint8_t>> gen(6, std::vector<uint8_t>(12, 0));
  for (int i = 0; i < 6; ++i) {
    gen[i][i] = 1;
    for (int j = 0; j < 6; ++j) gen[i][6 + j] = kTernaryB[i][j];
  }
  return LinearCode(3, std::move(gen), 6, {{0, 1}, {6, 264}, {9, 440}, {12, 24}});
}

LinearCode binary_golay_impl() {
  // B = J - A(icosahedron): ones on the diagonal and at non-adjacent pairs.
  uint8_t adj[12][12] = {};
  for (auto [u, v] : icosahedron_edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<std::vector<uint8_t>> gen(12, std::vector<uint8_t>(24, 0));
  for (int i = 0; i < 12; ++i) {
    gen[i][i] = 1;
    for (int j = 0; j < 12; ++j) gen[i][12 + j] = (i == j) ? 1 : 1 - adj[i][j];
  }
  return LinearCode(2, std::move(gen), 8,
                    {{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}});
}

Graph golay3_coset_impl() {
  LinearCode code = ternary_golay_impl();  // build-time weight-distribution check
  (void)code;
  // Parity check H = [-B^T | I] for G = [I | B]; syndromes live in GF(3)^6.
  uint8_t H[6][12];
  for (int r = 0; r < 6; ++r)
    for (int j = 0; j < 12; ++j)
      H[r][j] = j < 6 ? (3 - kTernaryB[j][r]) % 3 : (r == j - 6 ? 1 : 0);
  // Syndromes of the 24 weight-1 vectors; must be distinct and nonzero,
  // and come in negation pairs (lambda = 1, 2 per position).
  std::vector<std::array<uint8_t, 6>> steps;
  for (int j = 0; j < 12; ++j)
    for (uint8_t lam = 1; lam <= 2; ++lam) {
      std::array<uint8_t, 6> s;
      for (int r = 0; r < 6; ++r) s[r] = (uint8_t)((lam * H[r][j]) % 3);
      steps.push_back(s);
    }
  {
    auto sorted = steps;
    std::sort(sorted.begin(), sorted.end());
    if (std::unique(sorted.begin(), sorted.end()) != sorted.end() ||
        sorted.front() == std::array<uint8_t, 6>{})
      throw Error("weight-1 syndromes are not 24 distinct nonzero vectors");
  }
  const int n = 729;
  EdgeList edges;
  for (int u = 0; u < n; ++u) {
    std::array<uint8_t, 6> du;
    for (int r = 0, t = u; r < 6; ++r, t /= 3) du[r] = t % 3;
    for (const auto& s : steps) {
      int v = 0;
      for (int r = 5; r >= 0; --r) v = 3 * v + (du[r] + s[r]) % 3;
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph octad_impl() {
  LinearCode code = binary_golay_impl();
  std::vector<uint32_t> octads;
  for (const auto& w : code.codewords()) {
    uint32_t mask = 0;
    int wt = 0;
    for (int c = 0; c < 24; ++c)
      if (w[c]) mask |= 1u << c, ++wt;
    if (wt == 8) octads.push_back(mask);
  }
  if (octads.size() != 759) throw Error("binary Golay code does not have 759 octads");
  EdgeList edges;
  for (size_t i = 0; i < octads.size(); ++i)
    for (size_t j = i + 1; j < octads.size(); ++j)
      if ((octads[i] & octads[j]) == 0) edges.emplace_back((int)i, (int)j);
  return Graph::from_edges((int)octads.size(), edges);
}

}  // namespace

Graph build_grid_3x3() { return grid_3x3_impl(); }
Graph build_gq22() { return gq22_impl(); }
Graph build_dual_polar(int D) { return dual_polar_impl(D); }
LinearCode ternary_golay_code() { return ternary_golay_impl(); }
LinearCode binary_golay_code() { return binary_golay_impl(); }
Graph build_golay3_coset() { return golay3_coset_impl(); }
Graph build_octad() { return octad_impl(); }

const std::vector<Construction>& constructions() {
  static const std::vector<Construction> kCatalog = {
      {"grid3x3", "3x3 rook graph", {4, 2}, {1, 2}, &build_grid_3x3},
      {"gq22", "collinearity graph of GQ(2,2)", {6, 4}, {1, 3}, &build_gq22},
      {"dual-polar-a3", "Hermitian dual polar graph A_3(2)", {10, 8}, {1, 5}, &dual_polar_a3},
      {"dual-polar-a5", "Hermitian dual polar graph A_5(2)",
       {42, 40, 32}, {1, 5, 21}, &dual_polar_a5},
      {"golay3-coset", "coset graph of the ternary Golay code",
       {24, 22, 20}, {1, 2, 12}, &build_golay3_coset},
      {"octad", "Witt octad graph", {30, 28, 24}, {1, 3, 15}, &build_octad},
  };
  return kCatalog;
}

}  // namespace drg
