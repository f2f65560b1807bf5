#include "drg/spectrum.hpp"

#include "drg/errors.hpp"

namespace drg {

namespace {

// Recurrence only; no terminal check.
CosineSequence cosine_recurrence(const IntersectionArray& arr, const Rational& theta) {
  CosineSequence cs;
  cs.theta = theta;
  cs.sigma.reserve(arr.D() + 1);
  cs.sigma.emplace_back(1);
  cs.sigma.push_back(theta / Rational(arr.k()));
  for (int i = 1; i < arr.D(); ++i) {
    Rational num = (theta - Rational(arr.a(i))) * cs.sigma[i] - Rational(arr.c(i)) * cs.sigma[i - 1];
    cs.sigma.push_back(num / Rational(arr.b(i)));
  }
  return cs;
}

}  // namespace

CosineSequence cosine_sequence(const IntersectionArray& arr, const Rational& theta) {
  CosineSequence cs = cosine_recurrence(arr, theta);
  const int D = arr.D();
  Rational lhs = Rational(arr.c(D)) * cs.sigma[D - 1] + Rational(arr.a(D)) * cs.sigma[D];
  if (lhs != theta * cs.sigma[D])
    throw TerminalIdentityFails("terminal cosine identity fails at theta = " + theta.to_string() +
                                ": " + theta.to_string() + " is not an eigenvalue of " +
                                arr.to_string());
  return cs;
}

Rational multiplicity(const IntersectionArray& arr, const CosineSequence& cs) {
  Rational denom = 0;
  for (int i = 0; i <= arr.D(); ++i) denom += Rational(arr.k_i(i)) * cs.sigma[i] * cs.sigma[i];
  return Rational(arr.n()) / denom;
}

IntegerPolynomial charpoly(const IntersectionArray& arr) {
  std::vector<Rational> c, a, b;
  for (int i = 1; i <= arr.D(); ++i) c.emplace_back(arr.c(i));
  for (int i = 0; i <= arr.D(); ++i) a.emplace_back(arr.a(i));
  for (int i = 0; i < arr.D(); ++i) b.emplace_back(arr.b(i));
  return charpoly_tridiagonal(c, a, b);
}

SpectralData spectrum(const IntersectionArray& arr) {
  SpectralData sd;
  sd.eigenvalues = real_roots(charpoly(arr));
  if (static_cast<int>(sd.eigenvalues.size()) != arr.D() + 1)
    throw Error("spectrum: expected " + std::to_string(arr.D() + 1) + " distinct eigenvalues, got " +
                std::to_string(sd.eigenvalues.size()) + " for " + arr.to_string());
  if (!sd.eigenvalues[0].is_exact() || sd.eigenvalues[0].value() != Rational(arr.k()))
    throw Error("spectrum: largest eigenvalue is not k for " + arr.to_string());

  for (const auto& ev : sd.eigenvalues) {
    bool approx = !ev.is_exact();
    Rational theta = approx ? ev.approx() : ev.value();
    CosineSequence cs = approx ? cosine_recurrence(arr, theta) : cosine_sequence(arr, theta);
    sd.multiplicities.push_back(multiplicity(arr, cs));
    sd.cosines.push_back(std::move(cs));
    sd.approximate.push_back(approx);
  }

  if (sd.multiplicities[0] != Rational(1))
    throw Error("spectrum: eigenvalue k must have multiplicity 1");
  if (sd.all_rational()) {
    Rational total = 0;
    for (const auto& m : sd.multiplicities) {
      if (m.sign() <= 0) throw Error("spectrum: nonpositive multiplicity for " + arr.to_string());
      total += m;
    }
    if (total != Rational(arr.n()))
      throw Error("spectrum: multiplicities sum to " + total.to_string() + " != n for " +
                  arr.to_string());
  }
  return sd;
}

}  // namespace drg
