#pragma once

#include <array>
#include <optional>
#include <vector>

#include "drg/graph.hpp"
#include "drg/idempotent.hpp"
#include "drg/rational.hpp"

namespace drg {

// Gram matrix of the three normalized idempotent columns of a 3-clique in
// units of m/n: diagonal 1, off-diagonal sigma_1.  Its exact eigenvalues
// are {1 - sigma_1 (twice), 1 + 2 sigma_1}; the triple is linearly
// dependent iff sigma_1 = -1/2.
struct Gram3Clique {
  std::array<std::array<Rational, 3>, 3> matrix;
  std::array<Rational, 3> eigenvalues;  // {1 - s, 1 - s, 1 + 2s}
  bool singular = false;                // iff sigma_1 = -1/2
};
Gram3Clique gram_3clique(const Rational& sigma1);

// All 3-cliques {x < y < z}.
std::vector<std::array<int, 3>> triangles(const Graph& g);

// For every 3-clique, tests in exact arithmetic whether the three columns
// of E sum to zero, and whether their 3x3 Gram matrix (entries of E, since
// E^2 = E makes column inner products plain entries) is singular.
struct CliqueSumReport {
  enum class Verdict { AllDependent, NoneDependent, SomeDependent, NoTriangles };
  Verdict verdict = Verdict::NoTriangles;
  long clique_count = 0;
  long zero_sum_count = 0;     // cliques whose E-columns sum to zero exactly
  long singular_gram_count = 0;
  std::optional<std::array<int, 3>> nonzero_witness;   // a clique with nonzero sum
  std::optional<std::array<int, 3>> dependent_witness; // a clique with singular Gram
};
CliqueSumReport clique_sum_check(const Graph& g, const ExactIdempotent& E);

// A kite on {x,y,z,w}: xyz a 3-clique, d(w,x) = i and d(w,y) = d(w,z) = i-1
// for some 2 <= i <= D.  Returns nullopt when kite-free, else a witness
// (x, y, z, w, i) with x the far vertex.
struct Kite {
  int x, y, z, w, i;
};
std::optional<Kite> find_kite(const Graph& g, const DistanceData& dd);

// Checks the graph is regular and every vertex neighborhood induces a
// disjoint union of cliques of one common size s; then t = k/s - 1.
struct LocalStructure {
  bool is_clique_union = false;
  Integer s, t;
  int witness_vertex = -1;  // a vertex whose neighborhood breaks the form
  std::string detail;
};
LocalStructure local_structure(const Graph& g);

}  // namespace drg
