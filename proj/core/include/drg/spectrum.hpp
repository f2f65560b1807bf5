#pragma once

#include <vector>

#include "drg/intersection_array.hpp"
#include "drg/polynomial.hpp"
#include "drg/rational.hpp"

namespace drg {

// Cosine sequence sigma_0 = 1, sigma_1 = theta/k,
// c_i sigma_{i-1} + a_i sigma_i + b_i sigma_{i+1} = theta sigma_i.
struct CosineSequence {
  Rational theta;
  std::vector<Rational> sigma;  // sigma_0 .. sigma_D
};

// Builds the cosine sequence of theta and checks the terminal identity
// c_D sigma_{D-1} + a_D sigma_D = theta sigma_D, which holds iff theta is
// an eigenvalue of the array.  Throws TerminalIdentityFails otherwise.
CosineSequence cosine_sequence(const IntersectionArray& arr, const Rational& theta);

// The Biggs multiplicity m(theta) = n / sum_i k_i sigma_i^2.
Rational multiplicity(const IntersectionArray& arr, const CosineSequence& cs);

// Characteristic polynomial of the intersection matrix (monic, degree D+1).
IntegerPolynomial charpoly(const IntersectionArray& arr);

// Full spectral data: eigenvalues strictly descending with index 0 = k,
// plus per-eigenvalue multiplicity and cosine sequence.  Irrational
// eigenvalues get midpoint-based values with approximate[i] = true; the
// terminal identity is not enforced for those.
struct SpectralData {
  std::vector<Eigenvalue> eigenvalues;
  std::vector<Rational> multiplicities;
  std::vector<CosineSequence> cosines;
  std::vector<bool> approximate;

  bool all_rational() const {
    for (const auto& e : eigenvalues)
      if (!e.is_exact()) return false;
    return true;
  }
  int count() const { return static_cast<int>(eigenvalues.size()); }
};

// Computes eigenvalues (exact where rational), multiplicities and cosine
// sequences.  Postconditions verified at runtime: D+1 distinct real
// eigenvalues, largest = k with multiplicity 1; when the spectrum is fully
// rational, multiplicities are positive and sum to n.
SpectralData spectrum(const IntersectionArray& arr);

}  // namespace drg
