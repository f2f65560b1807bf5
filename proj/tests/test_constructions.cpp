#include <set>

#include "doctest.h"
#include "drg/constructions.hpp"
#include "drg/errors.hpp"
#include "drg/gf4.hpp"
#include "drg/graph.hpp"
#include "test_util.hpp"

using namespace drg;
using namespace test_util;

TEST_CASE("GF(4) field axioms (exhaustive)") {
  using namespace gf4;
  for (int a = 0; a < 4; ++a) {
    CHECK(add(a, 0) == a);
    CHECK(add(a, a) == 0);  // characteristic 2
    CHECK(mul(a, 1) == a);
    CHECK(mul(a, 0) == 0);
    if (a) CHECK(mul(a, inv(a)) == 1);
    CHECK(conj(conj(a)) == a);
    CHECK(conj(a) == mul(a, a));  // Frobenius x -> x^2
    for (int b = 0; b < 4; ++b) {
      CHECK(add(a, b) == add(b, a));
      CHECK(mul(a, b) == mul(b, a));
      CHECK(conj(mul(a, b)) == mul(conj(a), conj(b)));
      for (int c = 0; c < 4; ++c) {
        CHECK(mul(a, mul(b, c)) == mul(mul(a, b), c));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
      }
    }
  }
  // The multiplicative group is cyclic of order 3: w^2 = w-bar, w^3 = 1.
  CHECK(mul(2, 2) == 3);
  CHECK(mul(2, 3) == 1);
  // Hermitian form conjugate-symmetry on a couple of vectors.
  std::vector<uint8_t> u = {1, 2, 3, 0}, v = {2, 2, 1, 3};
  uint8_t huv = hermitian(u.begin(), u.end(), v.begin());
  uint8_t hvu = hermitian(v.begin(), v.end(), u.begin());
  CHECK(huv == conj(hvu));
}

TEST_CASE("linear code verification") {
  SUBCASE("ternary Golay [12,6,6]") {
    LinearCode code = ternary_golay_code();
    CHECK(code.q() == 3);
    CHECK(code.length() == 12);
    CHECK(code.dimension() == 6);
    CHECK(code.min_distance() == 6);
    CHECK(code.codewords().size() == 729);
    std::map<int, long> expect = {{0, 1}, {6, 264}, {9, 440}, {12, 24}};
    CHECK(code.weight_distribution() == expect);
  }
  SUBCASE("binary Golay [24,12,8]") {
    LinearCode code = binary_golay_code();
    CHECK(code.q() == 2);
    CHECK(code.length() == 24);
    CHECK(code.dimension() == 12);
    CHECK(code.min_distance() == 8);
    CHECK(code.codewords().size() == 4096);
    std::map<int, long> expect = {{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
    CHECK(code.weight_distribution() == expect);
  }
  SUBCASE("a wrong declaration is caught") {
    // Repetition code [3,1,3] over GF(2), declared with the wrong distance.
    std::vector<std::vector<uint8_t>> gen = {{1, 1, 1}};
    CHECK_THROWS_AS(LinearCode(2, gen, 2), CodeVerificationFailed);
    CHECK_THROWS_AS(LinearCode(2, gen, 3, {{0, 1}, {2, 1}}), CodeVerificationFailed);
    LinearCode ok(2, gen, 3, {{0, 1}, {3, 1}});
    CHECK(ok.min_distance() == 3);
  }
}

TEST_CASE("catalog: every construction certifies to its declared array") {
  // The two largest builders are exercised in the acceptance suite (with
  // timing); here the small and mid-size ones keep unit runs quick.
  std::set<std::string> small = {"grid3x3", "gq22", "dual-polar-a3", "golay3-coset"};
  for (const auto& c : constructions()) {
    CAPTURE(c.name);
    if (!small.count(c.name)) continue;
    Graph g = c.build();
    DistanceData dd(g);
    IntersectionArray arr = require_intersection_array(g, dd);
    CHECK(arr.b_list() == c.expected_b);
    CHECK(arr.c_list() == c.expected_c);
  }
}

TEST_CASE("construction details") {
  SUBCASE("grid3x3 matches the inline rook model") {
    Graph g = build_grid_3x3();
    CHECK(g.n() == 9);
    CHECK(g.edge_count() == 18);
    CHECK(g.serialize() == rook_graph().serialize());
  }
  SUBCASE("GQ(2,2) collinearity graph") {
    Graph g = build_gq22();
    CHECK(g.n() == 15);
    CHECK(g.edge_count() == 45);  // 15 * 6 / 2
  }
  SUBCASE("dual polar A_3(2)") {
    Graph g = build_dual_polar(2);
    CHECK(g.n() == 27);
    CHECK(g.edge_count() == 135);  // 27 * 10 / 2
    CHECK_THROWS_AS(build_dual_polar(4), Error);
  }
  SUBCASE("ternary Golay coset graph") {
    Graph g = build_golay3_coset();
    CHECK(g.n() == 729);
    CHECK(g.edge_count() == 729 * 24 / 2);
    // Vertex 0 is the zero syndrome; its neighbors are the 24 weight-1
    // syndromes and the graph is vertex-transitive under translation, so
    // degree is uniformly 24.
    for (int v = 0; v < g.n(); ++v) CHECK(g.degree(v) == 24);
  }
}

TEST_CASE("catalog covers exactly the six buildable names") {
  std::vector<std::string> names;
  for (const auto& c : constructions()) names.push_back(c.name);
  CHECK(names == std::vector<std::string>{"grid3x3", "gq22", "dual-polar-a3", "dual-polar-a5",
                                          "golay3-coset", "octad"});
}
