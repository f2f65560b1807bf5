#include "drg/theorem.hpp"

#include "drg/errors.hpp"

namespace drg {

CauchySchwarzQuantities cauchy_schwarz_quantities(const Integer& c2, const Rational& m,
                                                  const Integer& n) {
  CauchySchwarzQuantities q;
  Rational ratio = m / Rational(n);
  q.uv = -Rational(c2) * ratio;
  q.uu = Rational(5, 2) * ratio;
  q.vv = Rational(c2 * c2 + 3 * c2) / 4 * ratio;
  q.slack = q.uu * q.vv - q.uv * q.uv;
  return q;
}

ConditionVerdict condition_ii(const IntersectionArray& arr, const Rational& theta) {
  ConditionVerdict v{"ii", false, ""};
  const int D = arr.D();
  Rational expected_theta = Rational(arr.b(1)) / Rational(-2) - 1;
  for (const auto& cp : classical_fit(arr)) {
    if (cp.b != -2) continue;
    Rational sigma_expected =
        Rational(2) + cp.alpha - cp.alpha * Rational(gaussian_bracket(D, Integer(-2)));
    if (cp.sigma != sigma_expected) {
      v.witness = "classical fit " + cp.to_string() + " exists but sigma != 2 + alpha - alpha [D] = " +
                  sigma_expected.to_string();
      continue;
    }
    if (theta != expected_theta) {
      v.witness = "classical fit " + cp.to_string() + " matches but theta = " + theta.to_string() +
                  " != b_1/(-2) - 1 = " + expected_theta.to_string();
      continue;
    }
    v.holds = true;
    v.witness = "classical parameters " + cp.to_string() + " with sigma = 2 + alpha - alpha [D], theta = " +
                theta.to_string();
    return v;
  }
  if (v.witness.empty()) v.witness = "no classical fit with base b = -2";
  return v;
}

ConditionVerdict condition_iii(const IntersectionArray& arr, const Rational& theta) {
  ConditionVerdict v{"iii", false, ""};
  auto order = near_polygon_order(arr);
  if (!order) {
    v.witness = "parameters are not of regular near-polygon type (a_i != a_1 c_i or (a_1+1) does not divide k)";
    return v;
  }
  if (order->first != 2) {
    v.witness = "near-polygon order (" + order->first.get_str() + "," + order->second.get_str() +
                ") has s != 2";
    return v;
  }
  Rational expected = -Rational(order->second) - 1;
  if (theta != expected) {
    v.witness = "near-polygon order (2," + order->second.get_str() + ") but theta = " +
                theta.to_string() + " != -t - 1 = " + expected.to_string();
    return v;
  }
  v.holds = true;
  v.witness = "regular near-polygon order (2," + order->second.get_str() + ") with theta = -t - 1";
  return v;
}

namespace {

struct NamedArray {
  const char* name;
  std::vector<Integer> b, c;
};

const std::vector<NamedArray>& sporadic_members() {
  static const std::vector<NamedArray> tbl = {
      {"3x3 rook graph", {4, 2}, {1, 2}},
      {"collinearity graph of GQ(2,2)", {6, 4}, {1, 3}},
      {"collinearity graph of the generalized hexagon GH(2,8)", {18, 16, 16}, {1, 1, 9}},
      {"coset graph of the ternary Golay code", {24, 22, 20}, {1, 2, 12}},
      {"Witt octad graph (M24)", {30, 28, 24}, {1, 3, 15}},
  };
  return tbl;
}

}  // namespace

ConditionVerdict condition_v(const IntersectionArray& arr, const Rational& theta) {
  ConditionVerdict v{"v", false, ""};
  std::string member;
  for (const auto& named : sporadic_members()) {
    if (arr.b_list() == named.b && arr.c_list() == named.c) {
      member = named.name;
      break;
    }
  }
  if (member.empty()) {
    // Dual polar recognition via the classical fit (D, -2, -6, 6[D] - 4).
    const int D = arr.D();
    ClassicalParameters dp{D, Integer(-2), Rational(-6),
                           Rational(6) * Rational(gaussian_bracket(D, Integer(-2))) - 4};
    for (const auto& cp : classical_fit(arr)) {
      if (cp == dp) {
        member = "dual polar graph A_" + std::to_string(2 * D - 1) + "(2)";
        break;
      }
    }
  }
  if (member.empty()) {
    v.witness = "array is not one of the five sporadic members and has no dual polar classical fit (D, -2, -6, 6[D]-4)";
    return v;
  }
  SpectralData sd = spectrum(arr);
  const Eigenvalue& least = sd.eigenvalues.back();
  if (!least.is_exact() || theta != least.value()) {
    v.witness = member + ", but theta = " + theta.to_string() + " is not the minimal eigenvalue " +
                least.to_string();
    return v;
  }
  v.holds = true;
  v.witness = member + " at its minimal eigenvalue " + theta.to_string();
  return v;
}

ConditionVerdict condition_vi(const IntersectionArray& arr, const Rational& theta) {
  ConditionVerdict v{"vi", false, ""};
  CosineSequence cs = cosine_sequence(arr, theta);
  Rational pow(1);
  for (int i = 0; i <= arr.D(); ++i) {
    if (cs.sigma[i] != pow) {
      v.witness = "sigma_" + std::to_string(i) + " = " + cs.sigma[i].to_string() + " != (-1/2)^" +
                  std::to_string(i) + " = " + pow.to_string();
      return v;
    }
    pow *= Rational(-1, 2);
  }
  v.holds = true;
  v.witness = "cosine sequence is exactly ((-1/2)^i)_{i=0..D}";
  return v;
}

const ConditionVerdict& TheoremTable::verdict(const std::string& label) const {
  for (const auto& v : verdicts)
    if (v.label == label) return v;
  throw Error("TheoremTable: no verdict labelled '" + label + "'");
}

TheoremTable theorem_table(const IntersectionArray& arr, const Rational& theta,
                           QPolyEnforcement enforce) {
  cosine_sequence(arr, theta);  // throws TerminalIdentityFails if theta is not an eigenvalue

  TheoremTable t;
  t.theta = theta;

  SpectralData sd = spectrum(arr);
  for (int i = 0; i < sd.count(); ++i)
    if (sd.eigenvalues[i].is_exact() && sd.eigenvalues[i].value() == theta) {
      t.theta_index = i;
      break;
    }
  if (t.theta_index < 0)
    throw TerminalIdentityFails("theorem_table: theta = " + theta.to_string() +
                                " not found in the spectrum of " + arr.to_string());

  t.orderings = q_polynomial_orderings(krein_parameters(arr, sd), arr.D());
  for (const auto& ord : t.orderings)
    if (ord.size() > 1 && ord[1] == t.theta_index) t.qpoly_at_theta = true;
  if (!t.qpoly_at_theta && enforce == QPolyEnforcement::Require)
    throw NotQPolynomialAtTheta("theorem_table: " + arr.to_string() +
                                " has no Q-polynomial ordering with E_1 at theta = " +
                                theta.to_string());

  t.verdicts.push_back(condition_ii(arr, theta));
  t.verdicts.push_back(condition_iii(arr, theta));
  t.verdicts.push_back(condition_v(arr, theta));
  t.verdicts.push_back(condition_vi(arr, theta));

  bool all = true, none = true;
  for (const auto& v : t.verdicts) {
    if (v.holds)
      none = false;
    else
      all = false;
  }
  t.unanimity = all    ? TheoremTable::Unanimity::AllHold
                : none ? TheoremTable::Unanimity::AllFail
                       : TheoremTable::Unanimity::Mixed;
  return t;
}

}  // namespace drg
