#include "drg/polynomial.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace drg {

IntegerPolynomial IntegerPolynomial::derivative() const {
  std::vector<Integer> d;
  for (size_t i = 1; i < coeffs.size(); ++i) d.push_back(coeffs[i] * static_cast<long>(i));
  return IntegerPolynomial(std::move(d));
}

IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  std::vector<Integer> r(std::max(a.coeffs.size(), b.coeffs.size()), Integer(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) r[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) r[i] += b.coeffs[i];
  return IntegerPolynomial(std::move(r));
}

IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  std::vector<Integer> r(std::max(a.coeffs.size(), b.coeffs.size()), Integer(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) r[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) r[i] -= b.coeffs[i];
  return IntegerPolynomial(std::move(r));
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntegerPolynomial();
  std::vector<Integer> r(a.coeffs.size() + b.coeffs.size() - 1, Integer(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    for (size_t j = 0; j < b.coeffs.size(); ++j) r[i + j] += a.coeffs[i] * b.coeffs[j];
  return IntegerPolynomial(std::move(r));
}

std::string IntegerPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Integer& ci = coeffs[i];
    if (ci == 0) continue;
    Integer mag = ::abs(ci);
    if (s.empty()) {
      if (ci < 0) s += "-";
    } else {
      s += ci < 0 ? " - " : " + ";
    }
    bool unit = (mag == 1 && i > 0);
    if (!unit) s += mag.get_str();
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

std::string Eigenvalue::to_string() const {
  if (is_exact()) return lo_.to_string();
  char buf[48];
  std::snprintf(buf, sizeof buf, "~%.12f", approx().to_double());
  return buf;
}

IntegerPolynomial charpoly_tridiagonal(const std::vector<Rational>& c,
                                       const std::vector<Rational>& a,
                                       const std::vector<Rational>& b) {
  const size_t D = c.size();
  if (a.size() != D + 1 || b.size() != D)
    throw std::invalid_argument("charpoly_tridiagonal: need |a| = |c| + 1 = |b| + 1");
  auto as_int = [](const Rational& r, const char* who) {
    if (!r.is_integer())
      throw std::invalid_argument(std::string("charpoly_tridiagonal: non-integer ") + who +
                                  " entry " + r.to_string());
    return r.num();
  };
  std::vector<Integer> ai, bi, ci;
  for (const auto& x : a) ai.push_back(as_int(x, "a"));
  for (const auto& x : b) bi.push_back(as_int(x, "b"));
  for (const auto& x : c) ci.push_back(as_int(x, "c"));

  // p_prev = charpoly of the empty matrix, p_cur of the leading 1x1 block.
  IntegerPolynomial p_prev(std::vector<Integer>{Integer(1)});
  IntegerPolynomial p_cur(std::vector<Integer>{-ai[0], Integer(1)});
  for (size_t i = 1; i <= D; ++i) {
    IntegerPolynomial x_minus_a(std::vector<Integer>{-ai[i], Integer(1)});
    IntegerPolynomial off(std::vector<Integer>{bi[i - 1] * ci[i - 1]});
    IntegerPolynomial next = x_minus_a * p_cur - off * p_prev;
    p_prev = std::move(p_cur);
    p_cur = std::move(next);
  }
  return p_cur;
}

namespace {

// Polynomial with rational coefficients, lowest degree first; internal to
// the Sturm machinery.
struct RatPoly {
  std::vector<Rational> c;

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  static RatPoly from(const IntegerPolynomial& p) {
    RatPoly r;
    for (const auto& x : p.coeffs) r.c.emplace_back(x);
    return r;
  }

  RatPoly derivative() const {
    RatPoly d;
    for (size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * Rational(static_cast<long>(i)));
    return d;
  }
};

// Remainder of a by b (b nonzero).
RatPoly poly_rem(RatPoly a, const RatPoly& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    Rational q = a.c.back() / b.c.back();
    int shift = a.degree() - b.degree();
    for (int i = 0; i <= b.degree(); ++i) a.c[i + shift] -= q * b.c[i];
    a.c.pop_back();
    a.normalize();
  }
  return a;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  a.normalize();
  b.normalize();
  while (!b.is_zero()) {
    RatPoly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  // Make monic for stability.
  if (!a.is_zero()) {
    Rational lead = a.c.back();
    for (auto& x : a.c) x /= lead;
  }
  return a;
}

// Primitive integer polynomial proportional to p (clears denominators,
// divides by content, makes the leading coefficient positive).
IntegerPolynomial to_primitive(const RatPoly& p) {
  std::vector<Integer> dens;
  for (const auto& x : p.c) dens.push_back(x.den());
  Integer l = lcm_all(dens);
  std::vector<Integer> ints;
  for (const auto& x : p.c) ints.push_back(x.num() * (l / x.den()));
  Integer content = 0;
  for (const auto& x : ints) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  if (content == 0) return IntegerPolynomial();
  for (auto& x : ints) x /= content;
  if (ints.back() < 0)
    for (auto& x : ints) x = -x;
  return IntegerPolynomial(std::move(ints));
}

// Sturm chain of a squarefree polynomial.
std::vector<RatPoly> sturm_chain(const RatPoly& q) {
  std::vector<RatPoly> chain;
  chain.push_back(q);
  chain.push_back(q.derivative());
  while (!chain.back().is_zero()) {
    RatPoly r = poly_rem(chain[chain.size() - 2], chain.back());
    for (auto& x : r.c) x = -x;
    r.normalize();
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    int s = p.eval(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

}  // namespace

std::vector<Eigenvalue> real_roots(const IntegerPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("real_roots: zero polynomial");
  if (p.degree() == 0) return {};

  // Squarefree part q = p / gcd(p, p'), as a primitive integer polynomial
  // with positive leading coefficient.
  RatPoly rp = RatPoly::from(p);
  RatPoly g = poly_gcd(rp, rp.derivative());
  RatPoly q_rat;
  if (g.degree() <= 0) {
    q_rat = rp;
  } else {
    // Exact division p / g via repeated subtraction (long division).
    RatPoly quo;
    quo.c.assign(rp.c.size() - g.c.size() + 1, Rational(0));
    RatPoly rem = rp;
    while (!rem.is_zero() && rem.degree() >= g.degree()) {
      Rational qc = rem.c.back() / g.c.back();
      int shift = rem.degree() - g.degree();
      quo.c[shift] = qc;
      for (int i = 0; i <= g.degree(); ++i) rem.c[i + shift] -= qc * g.c[i];
      rem.c.pop_back();
      rem.normalize();
    }
    q_rat = quo;
  }
  IntegerPolynomial q = to_primitive(q_rat);
  if (q.degree() == 0) return {};

  // Monic transform: roots of q are y/L for integer roots y of
  // Q(y) = L^{d-1} q(y/L), L = leading coefficient of q (> 0).
  const Integer L = q.leading();
  const int d = q.degree();
  std::vector<Integer> Qc(d + 1);
  {
    Integer pw = 1;  // L^{d-1-i}
    for (int i = d; i >= 0; --i) {
      Qc[i] = q.coeffs[i] * pw;
      if (i > 0) pw *= L;
    }
  }
  IntegerPolynomial Q(std::move(Qc));  // monic, integer roots <-> rational roots of q

  std::vector<RatPoly> chain = sturm_chain(RatPoly::from(q));

  // Cauchy bound: all real roots lie in (-B, B).
  Rational B = 0;
  for (int i = 0; i < d; ++i) {
    Rational t = abs(Rational(q.coeffs[i], L));
    if (t > B) B = t;
  }
  B += 2;

  struct Range {
    Rational lo, hi;
    int count;
  };
  std::vector<Range> stack{{-B, B, sign_variations(chain, -B) - sign_variations(chain, B)}};
  std::vector<Eigenvalue> roots;
  const Rational tol(Integer(1), Integer("1000000000000"));  // 1e-12

  auto finish_interval = [&](Rational lo, Rational hi) {
    // Exactly one simple root in (lo, hi].  Try the rational-root snap,
    // otherwise bisect to width <= tol.  The single simple root keeps the
    // sign of q constant on each side, so every bisection decision compares
    // against q(hi); q(lo) may legitimately be zero (a root owned by the
    // neighboring half-open interval).
    Rational qhi = q.eval(hi);
    if (qhi == 0) {
      roots.push_back(Eigenvalue::exact(hi));
      return;
    }
    // Halve [lo, hi]; returns true when the midpoint was the exact root.
    auto bisect_once = [&]() {
      Rational mid = (lo + hi) / 2;
      Rational qm = q.eval(mid);
      if (qm == 0) {
        roots.push_back(Eigenvalue::exact(mid));
        return true;
      }
      if (qm.sign() == qhi.sign()) {
        hi = mid;
        qhi = qm;
      } else {
        lo = mid;
      }
      return false;
    };
    while (true) {
      // Integer candidate for y = L * x in (L*lo, L*hi].
      Rational ylo = Rational(L) * lo, yhi = Rational(L) * hi;
      if (yhi - ylo <= 1) {
        Integer cand;
        mpz_fdiv_q(cand.get_mpz_t(), yhi.num().get_mpz_t(), yhi.den().get_mpz_t());  // floor(yhi)
        if (Rational(cand) > ylo && Q.eval_int(cand) == 0) {
          roots.push_back(Eigenvalue::exact(Rational(cand, L)));
          return;
        }
        // No rational root in the interval; bisect down to tolerance.
        while (hi - lo > tol)
          if (bisect_once()) return;
        roots.push_back(Eigenvalue::interval(lo, hi));
        return;
      }
      if (bisect_once()) return;
    }
  };

  while (!stack.empty()) {
    Range r = stack.back();
    stack.pop_back();
    if (r.count == 0) continue;
    if (r.count == 1) {
      finish_interval(r.lo, r.hi);
      continue;
    }
    Rational mid = (r.lo + r.hi) / 2;
    int vm = sign_variations(chain, mid);
    int left = sign_variations(chain, r.lo) - vm;
    stack.push_back({r.lo, mid, left});
    stack.push_back({mid, r.hi, r.count - left});
  }

  std::sort(roots.begin(), roots.end(),
            [](const Eigenvalue& a, const Eigenvalue& b) { return a.approx() > b.approx(); });
  return roots;
}

}  // namespace drg
