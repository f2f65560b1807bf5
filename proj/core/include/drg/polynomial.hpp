#pragma once

#include <string>
#include <vector>

#include "drg/errors.hpp"
#include "drg/rational.hpp"

namespace drg {

// Dense univariate polynomial with integer coefficients, lowest degree
// first.  Normalized: empty vector is the zero polynomial, otherwise the
// leading coefficient is nonzero.
struct IntegerPolynomial {
  std::vector<Integer> coeffs;

  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<Integer> c) : coeffs(std::move(c)) { normalize(); }

  void normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const Integer& leading() const { return coeffs.back(); }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
  }
  Integer eval_int(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  IntegerPolynomial derivative() const;

  friend IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b);
  friend IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b);
  friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
  friend bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    return a.coeffs == b.coeffs;
  }

  // Human-readable form, highest degree first, e.g. "x^3 - 19x - 30".
  std::string to_string() const;
};

// A real algebraic number that is either an exact rational or an open
// isolating interval of width <= 1e-12 around a single irrational root.
class Eigenvalue {
 public:
  static Eigenvalue exact(Rational v) {
    Eigenvalue e;
    e.exact_ = true;
    e.lo_ = v;
    e.hi_ = std::move(v);
    return e;
  }
  static Eigenvalue interval(Rational lo, Rational hi) {
    Eigenvalue e;
    e.exact_ = false;
    e.lo_ = std::move(lo);
    e.hi_ = std::move(hi);
    return e;
  }

  bool is_exact() const { return exact_; }
  // Exact value; throws IrrationalEigenvalue when only an interval is known.
  const Rational& value() const {
    if (!exact_) throw IrrationalEigenvalue("eigenvalue known only as interval " + to_string());
    return lo_;
  }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational approx() const { return exact_ ? lo_ : (lo_ + hi_) / 2; }
  std::string to_string() const;

 private:
  bool exact_ = true;
  Rational lo_, hi_;
};

// Characteristic polynomial (monic, degree D+1) of the tridiagonal
// intersection matrix with diagonal a_0..a_D, subdiagonal c_1..c_D and
// superdiagonal b_0..b_{D-1}, via the principal-minor recurrence
// p_{i+1} = (x - a_i) p_i - b_{i-1} c_i p_{i-1}.  Entries must be integers.
IntegerPolynomial charpoly_tridiagonal(const std::vector<Rational>& c,
                                       const std::vector<Rational>& a,
                                       const std::vector<Rational>& b);

// All distinct real roots of p, strictly descending.  Rational roots are
// returned exactly (detected via the monic transform y = lead * x, which
// maps rational roots to integer roots); irrational roots as isolating
// intervals of width <= 1e-12.  Throws std::invalid_argument on the zero
// polynomial.
std::vector<Eigenvalue> real_roots(const IntegerPolynomial& p);

}  // namespace drg
