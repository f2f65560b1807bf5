#include "drg/krein.hpp"

#include <algorithm>
#include <numeric>

#include "drg/errors.hpp"

namespace drg {

KreinTable krein_parameters(const IntersectionArray& arr, const SpectralData& sd) {
  if (!sd.all_rational())
    throw IrrationalEigenvalue("krein_parameters: spectrum of " + arr.to_string() +
                               " has irrational eigenvalues");
  const int D = arr.D();
  const Rational n{arr.n()};
  KreinTable q(D + 1, std::vector<std::vector<Rational>>(D + 1, std::vector<Rational>(D + 1)));
  for (int h = 0; h <= D; ++h)
    for (int i = 0; i <= D; ++i)
      for (int j = i; j <= D; ++j) {
        Rational s = 0;
        for (int l = 0; l <= D; ++l)
          s += Rational(arr.k_i(l)) * sd.cosines[i].sigma[l] * sd.cosines[j].sigma[l] *
               sd.cosines[h].sigma[l];
        Rational val = sd.multiplicities[i] * sd.multiplicities[j] / n * s;
        q[h][i][j] = val;
        q[h][j][i] = val;
      }
  return q;
}

std::vector<QPolyOrdering> q_polynomial_orderings(const KreinTable& q, int D) {
  if (D > 6)
    throw DiameterTooLargeForSearch("q_polynomial_orderings: exhaustive search capped at D = 6, got D = " +
                                    std::to_string(D));
  std::vector<int> perm(D);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<QPolyOrdering> found;
  do {
    QPolyOrdering natural_of_pos(D + 1);
    natural_of_pos[0] = 0;
    std::copy(perm.begin(), perm.end(), natural_of_pos.begin() + 1);
    bool ok = true;
    for (int h = 0; h <= D && ok; ++h)
      for (int i = 0; i <= D && ok; ++i)
        for (int j = 0; j <= D && ok; ++j) {
          int m = std::max({h, i, j});
          int rest = h + i + j - m;
          const Rational& val = q[natural_of_pos[h]][natural_of_pos[i]][natural_of_pos[j]];
          if (m > rest && val != Rational(0)) ok = false;
          if (m == rest && val == Rational(0)) ok = false;
        }
    if (ok) found.push_back(std::move(natural_of_pos));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return found;
}

std::vector<QPolyOrdering> q_polynomial_orderings(const IntersectionArray& arr) {
  if (arr.D() > 6)
    throw DiameterTooLargeForSearch("q_polynomial_orderings: exhaustive search capped at D = 6, got D = " +
                                    std::to_string(arr.D()));
  SpectralData sd = spectrum(arr);
  return q_polynomial_orderings(krein_parameters(arr, sd), arr.D());
}

}  // namespace drg
