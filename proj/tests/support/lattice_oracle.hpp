#pragma once

#include <vector>

#include "syscat/lattice.hpp"

namespace oracle {

struct NaiveShortest {
  double norm2 = 0.0;
  std::vector<std::vector<long long>> minimizers;  // both signs
};

/// Every nonzero integer vector with |c_i| <= box, evaluated directly.
NaiveShortest naive_shortest(const syscat::lattice::Lattice& lat, int box);

/// Random unimodular matrix: a product of elementary integer shears and swaps.
std::vector<std::vector<long long>> random_unimodular(int rank, syscat::Rng& rng, int steps = 6);

}  // namespace oracle
