#include "drg/clique_geometry.hpp"

#include <algorithm>

namespace drg {

Gram3Clique gram_3clique(const Rational& sigma1) {
  Gram3Clique g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g.matrix[i][j] = (i == j) ? Rational(1) : sigma1;
  g.eigenvalues = {Rational(1) - sigma1, Rational(1) - sigma1, Rational(1) + 2 * sigma1};
  g.singular = (sigma1 == Rational(-1, 2)) || (sigma1 == Rational(1));
  return g;
}

std::vector<std::array<int, 3>> triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  const int words = g.words();
  for (int x = 0; x < g.n(); ++x) {
    for (int y : g.neighbors(x)) {
      if (y <= x) continue;
      const uint64_t* rx = g.row_bits(x);
      const uint64_t* ry = g.row_bits(y);
      for (int w = 0; w < words; ++w) {
        uint64_t both = rx[w] & ry[w];
        while (both) {
          int z = w * 64 + __builtin_ctzll(both);
          both &= both - 1;
          if (z > y) out.push_back({x, y, z});
        }
      }
    }
  }
  return out;
}

CliqueSumReport clique_sum_check(const Graph& g, const ExactIdempotent& E) {
  CliqueSumReport rep;
  auto tris = triangles(g);
  rep.clique_count = static_cast<long>(tris.size());
  if (tris.empty()) return rep;

  const int n = g.n();
  for (const auto& t : tris) {
    bool zero = true;
    for (int r = 0; r < n && zero; ++r)
      if (E.scaled(r, t[0]) + E.scaled(r, t[1]) + E.scaled(r, t[2]) != 0) zero = false;
    if (zero)
      ++rep.zero_sum_count;
    else if (!rep.nonzero_witness)
      rep.nonzero_witness = t;

    // Gram determinant from actual matrix entries: with u = column x etc.,
    // <u,v> = (E^2)_{xv} = E_{xv}.  Diagonal entries are E_{xx}.
    Rational a = E.entry(t[0], t[0]), d = E.entry(t[0], t[1]), e = E.entry(t[0], t[2]),
             b = E.entry(t[1], t[1]), f = E.entry(t[1], t[2]), c = E.entry(t[2], t[2]);
    Rational det = a * (b * c - f * f) - d * (d * c - f * e) + e * (d * f - b * e);
    if (det == Rational(0)) {
      ++rep.singular_gram_count;
      if (!rep.dependent_witness) rep.dependent_witness = t;
    }
  }

  using V = CliqueSumReport::Verdict;
  if (rep.zero_sum_count == rep.clique_count)
    rep.verdict = V::AllDependent;
  else if (rep.zero_sum_count == 0)
    rep.verdict = V::NoneDependent;
  else
    rep.verdict = V::SomeDependent;
  return rep;
}

std::optional<Kite> find_kite(const Graph& g, const DistanceData& dd) {
  auto tris = triangles(g);
  const int n = g.n();
  for (const auto& t : tris) {
    for (int w = 0; w < n; ++w) {
      int d0 = dd.dist(w, t[0]), d1 = dd.dist(w, t[1]), d2 = dd.dist(w, t[2]);
      // One corner at distance i >= 2, the other two at i - 1.
      if (d1 == d2 && d0 == d1 + 1 && d0 >= 2) return Kite{t[0], t[1], t[2], w, d0};
      if (d0 == d2 && d1 == d0 + 1 && d1 >= 2) return Kite{t[1], t[0], t[2], w, d1};
      if (d0 == d1 && d2 == d0 + 1 && d2 >= 2) return Kite{t[2], t[0], t[1], w, d2};
    }
  }
  return std::nullopt;
}

LocalStructure local_structure(const Graph& g) {
  LocalStructure ls;
  const int n = g.n();
  const int k = g.degree(0);
  for (int v = 1; v < n; ++v)
    if (g.degree(v) != k) {
      ls.witness_vertex = v;
      ls.detail = "graph is not regular: deg(" + std::to_string(v) + ") = " +
                  std::to_string(g.degree(v)) + " != " + std::to_string(k);
      return ls;
    }

  long comp_size = -1;
  for (int v = 0; v < n; ++v) {
    const auto& nb = g.neighbors(v);
    // Components of the induced neighborhood graph; each must be a clique
    // and all must share one size.
    std::vector<char> seen(nb.size(), 0);
    for (size_t i = 0; i < nb.size(); ++i) {
      if (seen[i]) continue;
      std::vector<int> comp{nb[i]};
      seen[i] = 1;
      for (size_t qi = 0; qi < comp.size(); ++qi) {
        for (size_t j = 0; j < nb.size(); ++j)
          if (!seen[j] && g.adjacent(comp[qi], nb[j])) {
            seen[j] = 1;
            comp.push_back(nb[j]);
          }
      }
      for (size_t a = 0; a < comp.size(); ++a)
        for (size_t b = a + 1; b < comp.size(); ++b)
          if (!g.adjacent(comp[a], comp[b])) {
            ls.witness_vertex = v;
            ls.detail = "neighborhood of " + std::to_string(v) +
                        " has a non-clique component containing " + std::to_string(comp[a]) +
                        " and " + std::to_string(comp[b]);
            return ls;
          }
      if (comp_size < 0) comp_size = static_cast<long>(comp.size());
      if (static_cast<long>(comp.size()) != comp_size) {
        ls.witness_vertex = v;
        ls.detail = "neighborhood cliques of mixed sizes " + std::to_string(comp_size) + " and " +
                    std::to_string(comp.size());
        return ls;
      }
    }
  }
  // Each local clique has s = a_1 + 1 vertices and k = s (t + 1).
  Integer s = comp_size;
  if (Integer(k) % s != 0) {
    ls.detail = "local clique size s = " + s.get_str() + " does not divide k = " + std::to_string(k);
    return ls;
  }
  ls.is_clique_union = true;
  ls.s = s;
  ls.t = Integer(k) / s - 1;
  return ls;
}

}  // namespace drg
