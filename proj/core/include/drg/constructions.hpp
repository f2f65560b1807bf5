#pragma once

#include <string>
#include <vector>

#include "drg/graph.hpp"
#include "drg/linear_code.hpp"

namespace drg {

// The 3x3 rook graph: vertices (r, c) -> 3r + c, edges within rows and
// columns.  Intersection array {4,2;1,2}.
Graph build_grid_3x3();

// Collinearity graph of GQ(2,2): 2-subsets of {0..5}, adjacent iff
// disjoint.  Intersection array {6,4;1,3}.
Graph build_gq22();

// Hermitian dual polar graph A_{2D-1}(2), D in {2, 3}: totally isotropic
// D-subspaces of GF(4)^{2D} under h(u,v) = sum u_i conj(v_i), enumerated
// as reduced row-echelon matrices; adjacent iff the subspaces meet in
// dimension D-1.  Arrays {10,8;1,5} (27 vertices) and {42,40,32;1,5,21}
// (891 vertices).
Graph build_dual_polar(int D);

// The [12,6,6] ternary Golay code used by the coset construction, and the
// [24,12,8] binary Golay code used by the octad construction.  Both verify
// their full weight distributions at build time.
LinearCode ternary_golay_code();
LinearCode binary_golay_code();

// Coset graph of the ternary Golay code: 729 syndromes, adjacent iff they
// differ by the syndrome of a weight-1 vector.  Array {24,22,20;1,2,12}.
Graph build_golay3_coset();

// Witt octad graph: the 759 weight-8 codewords of the binary Golay code,
// adjacent iff their supports are disjoint.  Array {30,28,24;1,3,15}.
Graph build_octad();

// Catalog entry for the CLI and the self-tests.
struct Construction {
  std::string name;         // CLI token, e.g. "dual-polar-a5"
  std::string description;
  std::vector<Integer> expected_b, expected_c;
  Graph (*build)();
};
const std::vector<Construction>& constructions();

}  // namespace drg
