#include "drg/classify.hpp"

#include "drg/classical.hpp"
#include "drg/errors.hpp"

namespace drg {

std::string to_string(ClassificationVerdict v) {
  switch (v) {
    case ClassificationVerdict::ExistsUnique: return "exists-unique";
    case ClassificationVerdict::NonexistentIntegrality: return "nonexistent-integrality";
    case ClassificationVerdict::NonexistentCited: return "nonexistent-cited";
    case ClassificationVerdict::DualPolarFamily: return "dual-polar-family";
    case ClassificationVerdict::InvalidArray: return "invalid-array";
  }
  return "?";
}

namespace {

// Known unique graphs for the D = 2 and D = 3 rows, keyed by c_2.
const char* unique_name(int D, int c2) {
  if (D == 2) {
    switch (c2) {
      case 2: return "3x3 rook graph (near 4-gon of order (2,1))";
      case 3: return "collinearity graph of GQ(2,2) (near 4-gon of order (2,2))";
      case 5: return "dual polar graph A_3(2) (near 4-gon of order (2,4))";
    }
  }
  if (D == 3) {
    switch (c2) {
      case 1: return "collinearity graph of the generalized hexagon GH(2,8)";
      case 2: return "coset graph of the ternary Golay code";
      case 3: return "Witt octad graph (M24)";
      case 5: return "dual polar graph A_5(2)";
    }
  }
  return "";
}

}  // namespace

std::vector<ClassificationEntry> classify(int D) {
  if (D < 2 || D > 8)
    throw DiameterOutOfRange("classify: diameter must be in 2..8, got " + std::to_string(D));

  std::vector<ClassificationEntry> entries;
  const Integer g = gaussian_bracket(D, Integer(-2));
  for (int c2 = 1; c2 <= 5; ++c2) {
    ClassificationEntry e;
    e.D = D;
    e.c2 = c2;
    const Rational alpha(-1 - c2);
    const Rational sigma = Rational(2) + alpha - alpha * Rational(g);

    // Raw formula lists (always integers for b = -2, integer alpha, sigma).
    for (int i = 0; i < D; ++i) {
      Rational bi = Rational(g - gaussian_bracket(i, Integer(-2))) *
                    (sigma - alpha * Rational(gaussian_bracket(i, Integer(-2))));
      e.raw_b.push_back(bi.to_integer());
    }
    for (int i = 1; i <= D; ++i) {
      Rational ci = Rational(gaussian_bracket(i, Integer(-2))) *
                    (Rational(1) + alpha * Rational(gaussian_bracket(i - 1, Integer(-2))));
      e.raw_c.push_back(ci.to_integer());
    }

    try {
      e.array = IntersectionArray::validate(e.raw_b, e.raw_c);
    } catch (const ValidationError& err) {
      e.invalid_reason = err.what();
      e.verdict = ClassificationVerdict::InvalidArray;
      e.citation = "parameter formulas yield no valid intersection array";
      entries.push_back(std::move(e));
      continue;
    }

    e.feasibility = feasibility_report(*e.array);

    if (D <= 3) {
      if (c2 == 4) {
        e.verdict = ClassificationVerdict::NonexistentIntegrality;
        const FeasibilityCheck* fail = e.feasibility->first_failure();
        e.citation = fail ? fail->detail : "feasibility screen failed";
      } else {
        e.verdict = ClassificationVerdict::ExistsUnique;
        e.graph_name = unique_name(D, c2);
        e.citation = "existence and uniqueness per Brouwer-Cohen-Neumaier";
      }
    } else {
      if (c2 == 5) {
        e.verdict = ClassificationVerdict::DualPolarFamily;
        e.graph_name = "dual polar graph A_" + std::to_string(2 * D - 1) + "(2)";
        e.citation = "the infinite family surviving at every diameter";
      } else if (c2 == 1) {
        e.verdict = ClassificationVerdict::NonexistentCited;
        e.citation = "no near hexagon continuation: De Bruyn-Vanhove, Cor. 5.4";
      } else {
        e.verdict = ClassificationVerdict::NonexistentCited;
        e.citation = "negative-type classical classification: Weng, Thm. B";
      }
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace drg
