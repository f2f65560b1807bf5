#pragma once

#include <string>
#include <vector>

#include "drg/errors.hpp"
#include "drg/rational.hpp"

namespace drg {

// Validated intersection array {b_0,...,b_{D-1}; c_1,...,c_D} of a
// distance-regular graph, together with the derived quantities
// a_i = k - b_i - c_i, subconstituent sizes k_i (k_i c_i = k_{i-1} b_{i-1})
// and vertex count n = sum k_i.  Instances exist only via validate(), so
// every object satisfies: all b_i, c_i positive, c_1 = 1, all a_i >= 0,
// all k_i positive integers.
class IntersectionArray {
 public:
  // Checks the defining constraints and derives a_i, k_i, n.
  // Throws ValidationError with kind SizeMismatch, NonPositive, C1NotOne,
  // NonIntegralKi or NegativeAi.
  static IntersectionArray validate(const std::vector<Integer>& b,
                                    const std::vector<Integer>& c);

  int D() const { return static_cast<int>(b_.size()); }
  const Integer& k() const { return b_[0]; }
  const Integer& n() const { return n_; }

  // b_i for 0 <= i <= D (b_D = 0), c_i for 0 <= i <= D (c_0 = 0), and
  // a_i = k - b_i - c_i for 0 <= i <= D.
  Integer b(int i) const { return i == D() ? Integer(0) : b_.at(i); }
  Integer c(int i) const { return i == 0 ? Integer(0) : c_.at(i - 1); }
  Integer a(int i) const { return k() - b(i) - c(i); }
  const Integer& k_i(int i) const { return ks_.at(i); }

  const std::vector<Integer>& b_list() const { return b_; }  // b_0..b_{D-1}
  const std::vector<Integer>& c_list() const { return c_; }  // c_1..c_D

  // "{b_0,...,b_{D-1};c_1,...,c_D}"
  std::string to_string() const;

  friend bool operator==(const IntersectionArray& x, const IntersectionArray& y) {
    return x.b_ == y.b_ && x.c_ == y.c_;
  }

 private:
  IntersectionArray() = default;
  std::vector<Integer> b_, c_, ks_;
  Integer n_;
};

}  // namespace drg
