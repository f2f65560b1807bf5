#include "drg/intersection_array.hpp"

namespace drg {

IntersectionArray IntersectionArray::validate(const std::vector<Integer>& b,
                                              const std::vector<Integer>& c) {
  using K = ValidationError::Kind;
  if (b.empty() || b.size() != c.size())
    throw ValidationError(K::SizeMismatch, "intersection array: b and c must be nonempty lists of equal length");
  const int D = static_cast<int>(b.size());
  for (int i = 0; i < D; ++i) {
    if (b[i] <= 0)
      throw ValidationError(K::NonPositive, "intersection array: b_" + std::to_string(i) +
                                                " = " + b[i].get_str() + " must be positive");
    if (c[i] <= 0)
      throw ValidationError(K::NonPositive, "intersection array: c_" + std::to_string(i + 1) +
                                                " = " + c[i].get_str() + " must be positive");
  }
  if (c[0] != 1)
    throw ValidationError(K::C1NotOne, "intersection array: c_1 = " + c[0].get_str() + " != 1");

  IntersectionArray arr;
  arr.b_ = b;
  arr.c_ = c;
  const Integer& k = b[0];
  for (int i = 0; i <= D; ++i) {
    Integer ai = k - arr.b(i) - arr.c(i);
    if (ai < 0)
      throw ValidationError(K::NegativeAi, "intersection array: a_" + std::to_string(i) + " = " +
                                               ai.get_str() + " is negative");
  }
  arr.ks_.assign(1, Integer(1));
  for (int i = 1; i <= D; ++i) {
    Integer num = arr.ks_.back() * b[i - 1];
    if (num % c[i - 1] != 0)
      throw ValidationError(K::NonIntegralKi,
                            "intersection array: k_" + std::to_string(i) + " = " + num.get_str() +
                                "/" + c[i - 1].get_str() + " is not an integer");
    arr.ks_.push_back(num / c[i - 1]);
  }
  arr.n_ = 0;
  for (const auto& ki : arr.ks_) arr.n_ += ki;
  return arr;
}

std::string IntersectionArray::to_string() const {
  std::string s = "{";
  for (size_t i = 0; i < b_.size(); ++i) s += (i ? "," : "") + b_[i].get_str();
  s += ";";
  for (size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + c_[i].get_str();
  return s + "}";
}

}  // namespace drg
