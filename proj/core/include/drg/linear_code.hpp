#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "drg/errors.hpp"

namespace drg {

// Linear [n, k, d] code over a prime field GF(q), q in {2, 3}, given by a
// k x n generator matrix.  Construction enumerates all q^k codewords and
// verifies the declared minimum distance (and, if given, the full weight
// distribution); mismatches throw CodeVerificationFailed.  Scales are tiny
// here (q^k <= 4096), so exhaustive verification is the point, not a cost.
class LinearCode {
 public:
  LinearCode(int q, std::vector<std::vector<uint8_t>> generator, int declared_distance,
             const std::map<int, long>& declared_weights = {});

  int q() const { return q_; }
  int length() const { return n_; }
  int dimension() const { return k_; }
  int min_distance() const { return d_; }
  const std::vector<std::vector<uint8_t>>& generator() const { return gen_; }
  // All q^k codewords, message-lexicographic order; [0] is the zero word.
  const std::vector<std::vector<uint8_t>>& codewords() const { return words_; }
  const std::map<int, long>& weight_distribution() const { return weights_; }

 private:
  int q_, n_, k_, d_;
  std::vector<std::vector<uint8_t>> gen_;
  std::vector<std::vector<uint8_t>> words_;
  std::map<int, long> weights_;
};

}  // namespace drg
