#pragma once

#include <optional>
#include <vector>

#include "drg/clique_geometry.hpp"
#include "drg/graph.hpp"
#include "drg/theorem.hpp"

namespace drg {

// Evaluation of all six equivalent conditions of the dependency theorem on
// an actual graph at an eigenvalue theta:
//   (i)  some 3-clique has linearly dependent normalized idempotent columns,
//   (ii) classical parameters (D, -2, alpha, sigma), sigma = 2+alpha-alpha[D],
//   (iii) regular near polygon of order (2, t) with theta = -t-1
//        (graph side: kite-free with a_i = a_1 c_i),
//   (iv) every 3-clique's idempotent columns sum to zero,
//   (v)  membership in the classified family at the minimal eigenvalue,
//   (vi) cosine sequence (-1/2)^i.
// Conditions (i)/(iv) are decided on the graph in exact arithmetic; on a
// triangle-free graph (i) is false-by-vacuity, (iv) vacuously true, and
// unanimity is NotApplicable (the equivalence presumes 3-cliques exist).
struct SixConditionReport {
  IntersectionArray array;
  Rational theta;
  int theta_index = -1;
  bool qpoly_at_theta = false;
  std::vector<QPolyOrdering> orderings;
  std::vector<ConditionVerdict> verdicts;  // labels "i".."vi" in order
  CliqueSumReport clique_report;
  std::optional<Kite> kite;
  LocalStructure local;
  bool no_triangles = false;
  enum class Unanimity { AllHold, AllFail, Mixed, NotApplicable } unanimity = Unanimity::AllFail;

  const ConditionVerdict& verdict(const std::string& label) const;
};

// Certifies distance-regularity (NotDistanceRegular otherwise), checks
// theta against the spectrum (TerminalIdentityFails), builds and verifies
// the idempotent at theta, and evaluates all six conditions.  Q-polynomial
// enforcement as in theorem_table.
SixConditionReport theorem_conditions_graph(const Graph& g, const Rational& theta,
                                            QPolyEnforcement enforce = QPolyEnforcement::Require);

}  // namespace drg
