#include "drg/classical.hpp"

#include <stdexcept>

namespace drg {

namespace {

// c_i and b_i formula values as rationals, i = 0..D (c) and 0..D (b).
struct FormulaLists {
  std::vector<Rational> c;  // c_0..c_D (c_0 = 0)
  std::vector<Rational> b;  // b_0..b_D (b_D = 0 by construction)
};

FormulaLists classical_formulas(const ClassicalParameters& cp) {
  if (cp.D < 1) throw std::invalid_argument("classical parameters: D must be >= 1");
  if (cp.b == 0 || cp.b == -1)
    throw std::invalid_argument("classical parameters: base b must not be 0 or -1");
  std::vector<Rational> br;  // [0], [1], ..., [D]
  for (int i = 0; i <= cp.D; ++i) br.emplace_back(gaussian_bracket(i, cp.b));
  FormulaLists f;
  for (int i = 0; i <= cp.D; ++i) {
    f.c.push_back(br[i] * (Rational(1) + cp.alpha * br[i == 0 ? 0 : i - 1]));
    f.b.push_back((br[cp.D] - br[i]) * (cp.sigma - cp.alpha * br[i]));
  }
  f.c[0] = 0;  // [0] = 0 already gives 0; keep explicit
  return f;
}

}  // namespace

IntersectionArray classical_array(const ClassicalParameters& cp) {
  FormulaLists f = classical_formulas(cp);
  std::vector<Integer> b, c;
  for (int i = 0; i < cp.D; ++i) {
    if (!f.b[i].is_integer())
      throw ValidationError(ValidationError::Kind::NonIntegerEntry,
                            "classical parameters " + cp.to_string() + ": b_" + std::to_string(i) +
                                " = " + f.b[i].to_string() + " is not an integer");
    b.push_back(f.b[i].num());
  }
  for (int i = 1; i <= cp.D; ++i) {
    if (!f.c[i].is_integer())
      throw ValidationError(ValidationError::Kind::NonIntegerEntry,
                            "classical parameters " + cp.to_string() + ": c_" + std::to_string(i) +
                                " = " + f.c[i].to_string() + " is not an integer");
    c.push_back(f.c[i].num());
  }
  return IntersectionArray::validate(b, c);
}

std::vector<ClassicalParameters> classical_fit(const IntersectionArray& arr) {
  std::vector<ClassicalParameters> fits;
  const int D = arr.D();
  if (D < 2) return fits;  // alpha underdetermined for D = 1
  const Integer& k = arr.k();
  for (Integer b = -k; b <= k; ++b) {
    if (b == 0 || b == -1) continue;
    // alpha is pinned by c_2 = (1 + b)(1 + alpha), sigma by b_0 = [D] sigma.
    Rational alpha = Rational(arr.c(2)) / Rational(Integer(1) + b) - 1;
    Integer bracket_D = gaussian_bracket(D, b);
    Rational sigma = Rational(k) / Rational(bracket_D);
    ClassicalParameters cp{D, b, alpha, sigma};
    FormulaLists f = classical_formulas(cp);
    bool ok = true;
    for (int i = 0; i <= D && ok; ++i) {
      if (f.c[i] != Rational(arr.c(i))) ok = false;
      if (f.b[i] != Rational(arr.b(i))) ok = false;
    }
    if (ok) fits.push_back(std::move(cp));
  }
  return fits;
}

std::vector<Rational> classical_eigenvalues(const ClassicalParameters& cp) {
  FormulaLists f = classical_formulas(cp);
  std::vector<Rational> thetas;
  Integer pw = 1;
  for (int i = 0; i <= cp.D; ++i) {
    thetas.push_back(f.b[i] / Rational(pw) - Rational(gaussian_bracket(i, cp.b)));
    pw *= cp.b;
  }
  return thetas;
}

std::optional<std::pair<Integer, Integer>> near_polygon_order(const IntersectionArray& arr) {
  const Integer a1 = arr.a(1);
  for (int i = 1; i <= arr.D(); ++i)
    if (arr.a(i) != a1 * arr.c(i)) return std::nullopt;
  Integer s = a1 + 1;
  if (arr.k() % s != 0) return std::nullopt;
  return std::make_pair(s, arr.k() / s - 1);
}

}  // namespace drg
