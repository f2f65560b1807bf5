#include "drg/feasibility.hpp"

#include "drg/errors.hpp"
#include "drg/krein.hpp"

namespace drg {

FeasibilityReport feasibility_report(const IntersectionArray& arr) {
  return feasibility_report(arr, spectrum(arr));
}

FeasibilityReport feasibility_report(const IntersectionArray& arr, const SpectralData& sd) {
  using O = FeasibilityCheck::Outcome;
  FeasibilityReport rep;
  const int D = arr.D();

  rep.checks.push_back({"k_i integrality", O::Pass, false,
                        "all k_i are positive integers; n = " + arr.n().get_str()});
  rep.checks.push_back({"a_i nonnegativity", O::Pass, false, "all a_i >= 0"});

  // Multiplicity integrality at rational eigenvalues.
  {
    FeasibilityCheck chk{"multiplicity integrality", O::Pass, false, ""};
    for (int i = 0; i < sd.count(); ++i) {
      if (sd.approximate[i]) {
        chk.approximate = true;
        continue;
      }
      const Rational& m = sd.multiplicities[i];
      if (!m.is_integer() || m.sign() <= 0) {
        chk.outcome = O::Fail;
        if (!chk.detail.empty()) chk.detail += "; ";
        chk.detail += "m(" + sd.eigenvalues[i].value().to_string() + ") = " + m.to_string() +
                      " is not a positive integer";
      }
    }
    if (chk.outcome == O::Pass)
      chk.detail = chk.approximate
                       ? "all rational-eigenvalue multiplicities integral (irrational ones unchecked)"
                       : "all multiplicities are positive integers";
    rep.checks.push_back(std::move(chk));
  }

  // Krein nonnegativity.
  {
    FeasibilityCheck chk{"Krein nonnegativity", O::Pass, false, ""};
    if (sd.all_rational()) {
      KreinTable q = krein_parameters(arr, sd);
      for (int h = 0; h <= D && chk.outcome == O::Pass; ++h)
        for (int i = 0; i <= D && chk.outcome == O::Pass; ++i)
          for (int j = 0; j <= D; ++j)
            if (q[h][i][j].sign() < 0) {
              chk.outcome = O::Fail;
              chk.detail = "q^" + std::to_string(h) + "_{" + std::to_string(i) + "," +
                           std::to_string(j) + "} = " + q[h][i][j].to_string() + " < 0";
              break;
            }
      if (chk.outcome == O::Pass) chk.detail = "all (D+1)^3 Krein parameters >= 0 (exact)";
    } else {
      // Midpoint-based table; a genuine negative value below -1e-6 fails.
      chk.approximate = true;
      const Rational tol(Integer(-1), Integer(1000000));
      KreinTable q(D + 1, std::vector<std::vector<Rational>>(D + 1, std::vector<Rational>(D + 1)));
      for (int h = 0; h <= D; ++h)
        for (int i = 0; i <= D; ++i)
          for (int j = 0; j <= D; ++j) {
            Rational s = 0;
            for (int l = 0; l <= D; ++l)
              s += Rational(arr.k_i(l)) * sd.cosines[i].sigma[l] * sd.cosines[j].sigma[l] *
                   sd.cosines[h].sigma[l];
            q[h][i][j] = sd.multiplicities[i] * sd.multiplicities[j] / Rational(arr.n()) * s;
          }
      for (int h = 0; h <= D && chk.outcome == O::Pass; ++h)
        for (int i = 0; i <= D && chk.outcome == O::Pass; ++i)
          for (int j = 0; j <= D; ++j)
            if (q[h][i][j] < tol) {
              chk.outcome = O::Fail;
              chk.detail = "approximate q^" + std::to_string(h) + "_{" + std::to_string(i) + "," +
                           std::to_string(j) + "} ~ " + std::to_string(q[h][i][j].to_double()) +
                           " < 0";
              break;
            }
      if (chk.outcome == O::Pass) chk.detail = "no Krein parameter below -1e-6 (midpoint approximation)";
    }
    rep.checks.push_back(std::move(chk));
  }

  // Q-polynomial ordering existence.
  {
    FeasibilityCheck chk{"Q-polynomial ordering exists", O::Pass, false, ""};
    if (D > 6) {
      chk.outcome = O::Skipped;
      chk.detail = "exhaustive ordering search capped at D = 6";
    } else if (!sd.all_rational()) {
      chk.outcome = O::Skipped;
      chk.detail = "spectrum has irrational eigenvalues; exact Krein table unavailable";
    } else {
      auto orderings = q_polynomial_orderings(krein_parameters(arr, sd), D);
      if (orderings.empty()) {
        chk.outcome = O::Fail;
        chk.detail = "no eigenvalue ordering satisfies the Q-polynomial condition";
      } else {
        std::string list;
        for (const auto& ord : orderings) {
          list += list.empty() ? "" : " ";
          list += "(";
          for (size_t i = 0; i < ord.size(); ++i) list += (i ? "," : "") + std::to_string(ord[i]);
          list += ")";
        }
        chk.detail = std::to_string(orderings.size()) + " ordering(s): " + list;
      }
    }
    rep.checks.push_back(std::move(chk));
  }

  return rep;
}

}  // namespace drg
