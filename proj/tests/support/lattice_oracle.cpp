#include "lattice_oracle.hpp"

#include <limits>

namespace oracle {

NaiveShortest naive_shortest(const syscat::lattice::Lattice& lat, int box) {
  const int n = lat.rank();
  NaiveShortest out;
  out.norm2 = std::numeric_limits<double>::infinity();
  std::vector<long long> c(n, -box);
  for (;;) {
    bool zero = true;
    for (long long x : c) zero = zero && x == 0;
    if (!zero) {
      double q = 0.0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) q += static_cast<double>(c[i] * c[j]) * lat.gram(i, j);
      }
      if (q < out.norm2 * (1 - 1e-12)) {
        out.norm2 = q;
        out.minimizers = {c};
      } else if (q <= out.norm2 * (1 + 1e-12)) {
        out.minimizers.push_back(c);
      }
    }
    int i = 0;
    while (i < n && c[i] == box) c[i++] = -box;
    if (i == n) break;
    ++c[i];
  }
  return out;
}

std::vector<std::vector<long long>> random_unimodular(int rank, syscat::Rng& rng, int steps) {
  std::vector<std::vector<long long>> u(rank, std::vector<long long>(rank, 0));
  for (int i = 0; i < rank; ++i) u[i][i] = 1;
  if (rank == 1) {
    if (syscat::below(rng, 2)) u[0][0] = -1;
    return u;
  }
  for (int s = 0; s < steps; ++s) {
    const int i = static_cast<int>(syscat::below(rng, rank));
    int j = static_cast<int>(syscat::below(rng, rank - 1));
    if (j >= i) ++j;
    if (syscat::below(rng, 4) == 0) {
      for (int r = 0; r < rank; ++r) std::swap(u[r][i], u[r][j]);
    } else {
      const long long q = syscat::below(rng, 2) ? 1 : -1;
      for (int r = 0; r < rank; ++r) u[r][i] += q * u[r][j];
    }
  }
  return u;
}

}  // namespace oracle
