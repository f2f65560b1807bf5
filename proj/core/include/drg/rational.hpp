#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace drg {

// Arbitrary-precision integer.  All derived graph quantities (k_i, n,
// polynomial coefficients) use this type; classification rows reach
// n ~ 3e19, past uint64.
using Integer = mpz_class;

// Exact rational, always kept in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(n) {}                             // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : v_(n) {}                  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  // Accept unevaluated gmpxx integer expressions (a*b + c, ...) directly.
  template <typename U>
  Rational(const __gmp_expr<mpz_t, U>& e) : v_(Integer(e)) {}  // NOLINT

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  const mpq_class& raw() const { return v_; }

  // Integer value; throws if not an integer.
  Integer to_integer() const {
    if (!is_integer()) throw std::invalid_argument("Rational: not an integer: " + to_string());
    return v_.get_num();
  }

  double to_double() const { return v_.get_d(); }

  // "p/q", or "p" when the denominator is 1.
  std::string to_string() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
  }

  // Parses "p", "p/q", or "-p/q" (whitespace-free).
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(Integer(s));
      return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.v_ == 0) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Gaussian bracket [i, 1]_b = 1 + b + b^2 + ... + b^{i-1}; [0,1]_b = 0.
// Defined for any nonzero integer base (the base b = 0 degenerate case is
// rejected rather than given a conventional value).
inline Integer gaussian_bracket(int i, const Integer& b) {
  if (i < 0) throw std::invalid_argument("gaussian_bracket: negative index");
  if (b == 0) throw std::invalid_argument("gaussian_bracket: base 0 not supported");
  Integer acc = 0, pow = 1;
  for (int j = 0; j < i; ++j) {
    acc += pow;
    pow *= b;
  }
  return acc;
}

// lcm of a list of positive integers.
inline Integer lcm_all(const std::vector<Integer>& xs) {
  Integer l = 1;
  for (const auto& x : xs) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), x.get_mpz_t());
    l = l / g * x;
  }
  return l;
}

}  // namespace drg
