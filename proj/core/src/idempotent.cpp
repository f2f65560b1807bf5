#include "drg/idempotent.hpp"

#include <limits>

#include "drg/errors.hpp"

namespace drg {

namespace {

// Largest |scaled entry|.
int64_t max_abs(const std::vector<int64_t>& v) {
  int64_t m = 0;
  for (int64_t x : v) m = std::max(m, x < 0 ? -x : x);
  return m;
}

Integer int128_to_mpz(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  Integer hi(static_cast<uint64_t>(u >> 64));
  Integer out = (hi << 64) + Integer(static_cast<uint64_t>(u));
  return neg ? -out : out;
}

}  // namespace

ExactIdempotent::ExactIdempotent(const Graph& g, const DistanceData& dd,
                                 const IntersectionArray& arr, const Rational& theta)
    : n_(g.n()), theta_(theta) {
  if (dd.diameter() != arr.D())
    throw Error("idempotent: graph diameter != array diameter");

  CosineSequence cs = cosine_sequence(arr, theta);  // TerminalIdentityFails if not an eigenvalue
  m_ = multiplicity(arr, cs);

  // Exact entry values v_d = (m/n) sigma_d; L = lcm of their denominators.
  const int D = arr.D();
  std::vector<Rational> vals;
  std::vector<Integer> dens;
  for (int d = 0; d <= D; ++d) {
    vals.push_back(m_ / Rational(arr.n()) * cs.sigma[d]);
    dens.push_back(vals.back().den());
  }
  denom_ = lcm_all(dens);

  by_dist_.resize(D + 1);
  Integer max_scaled = 0;
  for (int d = 0; d <= D; ++d) {
    Integer s = vals[d].num() * (denom_ / vals[d].den());
    if (::abs(s) > max_scaled) max_scaled = ::abs(s);
    if (!s.fits_slong_p())
      throw MatrixOverflow("idempotent: scaled entry " + s.get_str() + " exceeds int64");
    by_dist_[d] = s.get_si();
  }

  // Bounds: the E^2 accumulation n * maxM^2 and the comparison value
  // L * maxM must both stay clear of int64.
  const Integer int64_budget(std::numeric_limits<int64_t>::max() / 4);
  Integer bound = Integer(n_) * max_scaled * max_scaled;
  if (bound > int64_budget)
    throw MatrixOverflow("idempotent: E^2 accumulation bound " + bound.get_str() +
                         " exceeds the int64 budget");
  if (!denom_.fits_slong_p() || denom_ * max_scaled > int64_budget)
    throw MatrixOverflow("idempotent: denominator " + denom_.get_str() +
                         " exceeds the int64 budget");

  sc_.resize(static_cast<size_t>(n_) * n_);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) sc_[static_cast<size_t>(x) * n_ + y] = by_dist_[dd.dist(x, y)];

  // --- Verification ---
  // A E = theta E, row by row: q * sum_{w ~ x} M[w][y] == p * M[x][y].
  const Integer& tn = theta.num();
  const Integer& td = theta.den();
  if (!tn.fits_slong_p() || !td.fits_slong_p() ||
      ::abs(tn) * max_scaled > int64_budget || ::abs(td) * Integer(n_) * max_scaled > int64_budget)
    throw MatrixOverflow("idempotent: theta = " + theta.to_string() +
                         " does not fit the int64 fast path");
  const int64_t tnum = tn.get_si(), tden = td.get_si();
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      int64_t acc = 0;
      for (int w : g.neighbors(x)) acc += sc_[static_cast<size_t>(w) * n_ + y];
      if (tden * acc != tnum * sc_[static_cast<size_t>(x) * n_ + y])
        throw IdempotencyFailed("idempotent: (A E)[" + std::to_string(x) + "][" +
                                std::to_string(y) + "] != theta E entry at theta = " +
                                theta.to_string());
    }
  }

  // E^2 = E: for each row x, accumulate row_x(M) * M and compare with L * M.
  std::vector<int64_t> acc(n_);
  for (int x = 0; x < n_; ++x) {
    std::fill(acc.begin(), acc.end(), 0);
    const int64_t* rowx = sc_.data() + static_cast<size_t>(x) * n_;
    for (int z = 0; z < n_; ++z) {
      const int64_t mxz = rowx[z];
      if (mxz == 0) continue;
      const int64_t* rowz = sc_.data() + static_cast<size_t>(z) * n_;
      for (int y = 0; y < n_; ++y) acc[y] += mxz * rowz[y];
    }
    const int64_t L = denom_.get_si();
    for (int y = 0; y < n_; ++y)
      if (acc[y] != L * rowx[y])
        throw IdempotencyFailed("idempotent: (E^2)[" + std::to_string(x) + "][" +
                                std::to_string(y) + "] != E entry at theta = " + theta.to_string());
  }

  if (trace() != m_)
    throw IdempotencyFailed("idempotent: trace != multiplicity at theta = " + theta.to_string());
}

Rational ExactIdempotent::trace() const {
  // All diagonal entries equal by_dist_[0].
  return Rational(Integer(by_dist_[0]) * n_, denom_);
}

std::vector<ExactIdempotent> all_idempotents(const Graph& g, const DistanceData& dd,
                                             const IntersectionArray& arr, const SpectralData& sd) {
  if (!sd.all_rational())
    throw IrrationalEigenvalue("all_idempotents: spectrum has irrational eigenvalues");
  std::vector<ExactIdempotent> out;
  out.reserve(sd.count());
  for (int i = 0; i < sd.count(); ++i) out.emplace_back(g, dd, arr, sd.eigenvalues[i].value());
  return out;
}

KreinTable matrix_krein_parameters(const std::vector<ExactIdempotent>& idem) {
  if (idem.empty()) throw Error("matrix_krein_parameters: no idempotents");
  const int n = idem[0].n();
  const int E = static_cast<int>(idem.size());  // = D + 1

  // Bound: n^2 * maxM_i * maxM_j * maxM_h must fit __int128 (with slack),
  // and the elementwise product maxM_i * maxM_j must fit int64.
  std::vector<int64_t> maxes;
  for (const auto& e : idem) {
    int64_t m = 0;
    for (int64_t v : e.value_by_distance()) m = std::max(m, v < 0 ? -v : v);
    maxes.push_back(m);
  }
  for (int i = 0; i < E; ++i)
    for (int j = 0; j < E; ++j) {
      Integer prod = Integer(maxes[i]) * Integer(maxes[j]);
      if (prod > Integer(std::numeric_limits<int64_t>::max() / 4))
        throw MatrixOverflow("matrix_krein_parameters: Hadamard product exceeds int64");
      Integer full = Integer(n) * n * prod * Integer(maxes[0]);
      for (int h = 0; h < E; ++h) {
        Integer fh = Integer(n) * n * prod * Integer(maxes[h]);
        if (fh > full) full = fh;
      }
      Integer cap = (Integer(1) << 126);
      if (full >= cap) throw MatrixOverflow("matrix_krein_parameters: accumulation exceeds int128");
    }

  KreinTable q(E, std::vector<std::vector<Rational>>(E, std::vector<Rational>(E)));
  std::vector<__int128> sums(E);
  for (int i = 0; i < E; ++i)
    for (int j = i; j < E; ++j) {
      std::fill(sums.begin(), sums.end(), 0);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          const int64_t p = idem[i].scaled(x, y) * idem[j].scaled(x, y);
          if (p == 0) continue;
          for (int h = 0; h < E; ++h) sums[h] += static_cast<__int128>(p) * idem[h].scaled(x, y);
        }
      for (int h = 0; h < E; ++h) {
        // q^h_{ij} = n * S / (L_i L_j L_h m_h).
        Rational s(int128_to_mpz(sums[h]),
                   idem[i].denominator() * idem[j].denominator() * idem[h].denominator());
        Rational val = Rational(Integer(n)) * s / idem[h].m();
        q[h][i][j] = val;
        q[h][j][i] = val;
      }
    }
  return q;
}

}  // namespace drg
