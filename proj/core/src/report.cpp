#include "drg/report.hpp"

#include <cstdio>
#include <set>
#include <sstream>

#include "json.hpp"

namespace drg {
namespace {

std::string approx_str(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// "12" for integers, "112/5 (~22.4)" otherwise.
std::string echo(const Rational& r) {
  if (r.is_integer()) return r.to_string();
  return r.to_string() + " (~" + approx_str(r.to_double()) + ")";
}

std::string fmt_eigenvalue(const Eigenvalue& e) {
  return e.is_exact() ? echo(e.value()) : e.to_string();
}

std::string fmt_ordering(const QPolyOrdering& ord) {
  std::string s = "(";
  for (size_t i = 0; i < ord.size(); ++i) s += (i ? "," : "") + std::to_string(ord[i]);
  return s + ")";
}

const char* unanimity_str(TheoremTable::Unanimity u) {
  switch (u) {
    case TheoremTable::Unanimity::AllHold: return "all hold";
    case TheoremTable::Unanimity::AllFail: return "all fail";
    default: return "mixed";
  }
}

const char* outcome_str(FeasibilityCheck::Outcome o) {
  switch (o) {
    case FeasibilityCheck::Outcome::Pass: return "pass";
    case FeasibilityCheck::Outcome::Fail: return "FAIL";
    default: return "skip";
  }
}

}  // namespace

AnalysisReport analyze_array(const IntersectionArray& arr) {
  AnalysisReport rep{arr, spectrum(arr), std::nullopt, {}, "", classical_fit(arr),
                     near_polygon_order(arr), {}, "", {}};
  rep.feasibility = feasibility_report(arr, rep.spectrum);
  if (rep.spectrum.all_rational()) rep.krein = krein_parameters(arr, rep.spectrum);

  if (!rep.spectrum.all_rational()) {
    rep.orderings_note = "ordering search skipped: spectrum has irrational eigenvalues";
  } else if (arr.D() > 6) {
    rep.orderings_note = "ordering search skipped: exhaustive search capped at D = 6";
  } else {
    rep.orderings = q_polynomial_orderings(*rep.krein, arr.D());
  }

  if (!rep.orderings_note.empty()) {
    rep.theorem_note = rep.orderings_note;
  } else if (rep.orderings.empty()) {
    rep.theorem_note = "no Q-polynomial ordering exists";
  } else {
    std::set<int> candidates;
    for (const auto& ord : rep.orderings) candidates.insert(ord[1]);
    for (int idx : candidates)
      rep.tables.push_back(
          theorem_table(arr, rep.spectrum.eigenvalues[idx].value(), QPolyEnforcement::Require));
  }
  return rep;
}

std::string render_text(const AnalysisReport& rep) {
  std::ostringstream out;
  const auto& arr = rep.arr;
  const int D = arr.D();
  out << "intersection array " << arr.to_string() << "\n";
  out << "D = " << D << ", k = " << arr.k().get_str() << ", n = " << arr.n().get_str() << "\n";
  out << "a_i:";
  for (int i = 0; i <= D; ++i) out << " " << arr.a(i).get_str();
  out << "\nk_i:";
  for (int i = 0; i <= D; ++i) out << " " << arr.k_i(i).get_str();
  out << "\n\nspectrum:\n";
  for (int i = 0; i < rep.spectrum.count(); ++i) {
    out << "  theta_" << i << " = " << fmt_eigenvalue(rep.spectrum.eigenvalues[i])
        << "   m = " << echo(rep.spectrum.multiplicities[i]);
    if (rep.spectrum.approximate[i]) out << " (approx)";
    out << "   cosines:";
    for (const auto& s : rep.spectrum.cosines[i].sigma) out << " " << s.to_string();
    out << "\n";
  }

  if (rep.krein) {
    out << "\nKrein parameters q^h_{ij} (one block per h):\n";
    for (int h = 0; h <= D; ++h) {
      out << "  h = " << h << ":\n";
      for (int i = 0; i <= D; ++i) {
        out << "   ";
        for (int j = 0; j <= D; ++j) out << " " << (*rep.krein)[h][i][j].to_string();
        out << "\n";
      }
    }
  } else {
    out << "\nKrein parameters: not computed (irrational eigenvalues)\n";
  }

  out << "\nQ-polynomial orderings:";
  if (!rep.orderings_note.empty()) {
    out << " " << rep.orderings_note << "\n";
  } else if (rep.orderings.empty()) {
    out << " none\n";
  } else {
    for (const auto& ord : rep.orderings) out << " " << fmt_ordering(ord);
    out << "\n";
  }

  out << "\nclassical parameters (D, b, alpha, sigma):";
  if (rep.classical.empty())
    out << " none\n";
  else {
    for (const auto& cp : rep.classical) out << " " << cp.to_string();
    out << "\n";
  }
  out << "near polygon order:";
  if (rep.near_polygon)
    out << " (s, t) = (" << rep.near_polygon->first.get_str() << ", "
        << rep.near_polygon->second.get_str() << ")\n";
  else
    out << " none\n";

  out << "\nequivalence conditions";
  if (!rep.tables.empty()) {
    out << ":\n";
    for (const auto& t : rep.tables) {
      out << "  at theta = " << echo(t.theta) << " (index " << t.theta_index << "):\n";
      for (const auto& v : t.verdicts)
        out << "    [" << (v.holds ? "holds" : "fails") << "] (" << v.label << ") " << v.witness
            << "\n";
      out << "    unanimity: " << unanimity_str(t.unanimity) << "\n";
    }
  } else {
    out << ": " << rep.theorem_note << "\n";
  }

  out << "\nfeasibility:\n";
  for (const auto& c : rep.feasibility.checks) {
    out << "  [" << outcome_str(c.outcome) << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    if (c.approximate) out << " (approximate)";
    out << "\n";
  }
  out << "overall: " << (rep.feasibility.all_pass() ? "feasible" : "infeasible")
      << (rep.feasibility.all_pass() && rep.mixed() ? " (MIXED equivalence verdicts)" : "")
      << "\n";
  return out.str();
}

std::string render_json(const AnalysisReport& rep) {
  using nlohmann::json;
  const auto& arr = rep.arr;
  const int D = arr.D();
  json j;

  json input;
  input["D"] = D;
  input["k"] = arr.k().get_str();
  input["n"] = arr.n().get_str();
  for (int i = 0; i < D; ++i) input["b"].push_back(arr.b(i).get_str());
  for (int i = 1; i <= D; ++i) input["c"].push_back(arr.c(i).get_str());
  for (int i = 0; i <= D; ++i) input["a"].push_back(arr.a(i).get_str());
  for (int i = 0; i <= D; ++i) input["k_i"].push_back(arr.k_i(i).get_str());
  j["input"] = input;

  j["spectrum"] = json::array();
  for (int i = 0; i < rep.spectrum.count(); ++i) {
    json e;
    const auto& ev = rep.spectrum.eigenvalues[i];
    if (ev.is_exact())
      e["theta"] = ev.value().to_string();
    else
      e["theta"] = {{"lo", ev.lo().to_string()}, {"hi", ev.hi().to_string()}};
    e["approx"] = ev.approx().to_double();
    e["exact"] = ev.is_exact();
    e["multiplicity"] = rep.spectrum.multiplicities[i].to_string();
    for (const auto& s : rep.spectrum.cosines[i].sigma) e["cosines"].push_back(s.to_string());
    j["spectrum"].push_back(e);
  }

  if (rep.krein) {
    json q = json::array();
    for (int h = 0; h <= D; ++h) {
      json qh = json::array();
      for (int i = 0; i <= D; ++i) {
        json qi = json::array();
        for (int jj = 0; jj <= D; ++jj) qi.push_back((*rep.krein)[h][i][jj].to_string());
        qh.push_back(qi);
      }
      q.push_back(qh);
    }
    j["krein"] = q;
  } else {
    j["krein"] = nullptr;
  }

  j["classical"] = json::array();
  for (const auto& cp : rep.classical)
    j["classical"].push_back({{"D", cp.D},
                              {"b", cp.b.get_str()},
                              {"alpha", cp.alpha.to_string()},
                              {"sigma", cp.sigma.to_string()}});
  if (rep.near_polygon)
    j["near_polygon"] = {{"s", rep.near_polygon->first.get_str()},
                         {"t", rep.near_polygon->second.get_str()}};
  else
    j["near_polygon"] = nullptr;

  json th;
  th["orderings"] = json::array();
  for (const auto& ord : rep.orderings) th["orderings"].push_back(ord);
  if (!rep.orderings_note.empty()) th["orderings_note"] = rep.orderings_note;
  th["tables"] = json::array();
  for (const auto& t : rep.tables) {
    json jt;
    jt["theta"] = t.theta.to_string();
    jt["theta_index"] = t.theta_index;
    jt["qpoly_at_theta"] = t.qpoly_at_theta;
    jt["conditions"] = json::array();
    for (const auto& v : t.verdicts)
      jt["conditions"].push_back({{"label", v.label}, {"holds", v.holds}, {"witness", v.witness}});
    jt["unanimity"] = unanimity_str(t.unanimity);
    th["tables"].push_back(jt);
  }
  if (!rep.theorem_note.empty()) th["note"] = rep.theorem_note;
  j["theorem"] = th;

  json fz;
  fz["all_pass"] = rep.feasibility.all_pass();
  fz["checks"] = json::array();
  for (const auto& c : rep.feasibility.checks)
    fz["checks"].push_back({{"name", c.name},
                            {"outcome", outcome_str(c.outcome)},
                            {"approximate", c.approximate},
                            {"detail", c.detail}});
  j["feasibility"] = fz;

  return j.dump(2);
}

}  // namespace drg
