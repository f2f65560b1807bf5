#include "drg/linear_code.hpp"

#include <string>

namespace drg {

LinearCode::LinearCode(int q, std::vector<std::vector<uint8_t>> generator, int declared_distance,
                       const std::map<int, long>& declared_weights)
    : q_(q), gen_(std::move(generator)) {
  if (q_ != 2 && q_ != 3) throw CodeVerificationFailed("linear code: only GF(2) and GF(3) supported");
  if (gen_.empty() || gen_[0].empty()) throw CodeVerificationFailed("linear code: empty generator");
  k_ = static_cast<int>(gen_.size());
  n_ = static_cast<int>(gen_[0].size());
  for (const auto& row : gen_) {
    if (static_cast<int>(row.size()) != n_)
      throw CodeVerificationFailed("linear code: ragged generator matrix");
    for (uint8_t x : row)
      if (x >= q_) throw CodeVerificationFailed("linear code: entry not in GF(q)");
  }

  long count = 1;
  for (int i = 0; i < k_; ++i) count *= q_;
  words_.reserve(count);
  std::vector<uint8_t> msg(k_, 0), word(n_, 0);
  for (long idx = 0; idx < count; ++idx) {
    long rem = idx;
    for (int i = 0; i < k_; ++i) {
      msg[i] = static_cast<uint8_t>(rem % q_);
      rem /= q_;
    }
    std::fill(word.begin(), word.end(), 0);
    for (int i = 0; i < k_; ++i) {
      if (!msg[i]) continue;
      for (int j = 0; j < n_; ++j)
        word[j] = static_cast<uint8_t>((word[j] + msg[i] * gen_[i][j]) % q_);
    }
    int w = 0;
    for (uint8_t x : word) w += (x != 0);
    if (idx > 0) ++weights_[w];
    words_.push_back(word);
  }
  weights_[0] = 1;

  d_ = 0;
  for (const auto& [w, cnt] : weights_)
    if (w > 0) {
      d_ = w;
      break;
    }
  if (d_ != declared_distance)
    throw CodeVerificationFailed("linear code: computed minimum distance " + std::to_string(d_) +
                                 " != declared " + std::to_string(declared_distance));
  if (!declared_weights.empty() && weights_ != declared_weights) {
    std::string got;
    for (const auto& [w, cnt] : weights_)
      got += (got.empty() ? "" : ", ") + std::to_string(w) + ":" + std::to_string(cnt);
    throw CodeVerificationFailed("linear code: weight distribution {" + got +
                                 "} differs from the declared one");
  }
}

}  // namespace drg
