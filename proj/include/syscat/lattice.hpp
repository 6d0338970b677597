#pragma once

// Flat tori R^b / L given by the Gram matrix of a lattice basis: shortest
// vectors, covolume, Hermite constants and the torus case of the
// stsys_1^b <= gamma_b^{b/2} vol inequality.

#include <string>
#include <string_view>
#include <vector>

#include "syscat/error.hpp"
#include "syscat/random.hpp"

namespace syscat::lattice {

constexpr int kMaxRank = 8;

class Lattice {
 public:
  /// Throws NotPositiveDefinite (also for asymmetric input) or UnsupportedRank
  /// outside 1..kMaxRank.
  static Lattice from_gram(std::vector<std::vector<double>> gram);

  int rank() const { return static_cast<int>(gram_.size()); }
  double gram(int i, int j) const { return gram_[i][j]; }
  const std::vector<std::vector<double>>& gram() const { return gram_; }

  /// Gram matrix multiplied by factor (lengths scale by sqrt(factor)).
  Lattice scaled(double factor) const;
  /// Gram matrix U^T G U of the basis changed by the integer matrix U.
  Lattice transformed(const std::vector<std::vector<long long>>& u) const;

 private:
  explicit Lattice(std::vector<std::vector<double>> gram) : gram_(std::move(gram)) {}
  std::vector<std::vector<double>> gram_;
};

Lattice integer_lattice(int rank);
/// Gram [[1, 1/2], [1/2, 1]].
Lattice hexagonal();
/// Cartan matrix of D4: minimum 2, determinant 4.
Lattice d4();
/// Gram matrix B^T B of a basis with entries uniform in [-1, 1], redrawn
/// until well conditioned.
Lattice random_lattice(int rank, Rng& rng);

struct ShortestVectorResult {
  std::vector<long long> coeffs;
  double length = 0.0;
};

/// Exhaustive search over the integer vectors inside a provable radius after
/// LLL reduction. Among minimizers the sign is fixed so that the first
/// nonzero coefficient is positive and the lexicographically greatest vector
/// is returned.
ShortestVectorResult shortest_vector(const Lattice& lat);

/// sqrt(det gram).
double covolume(const Lattice& lat);

/// Stored classical values for b = 1..4; UnsupportedRank otherwise.
double hermite_constant(int b);

struct Eq75Report {
  int rank = 0;
  double lhs = 0.0;  ///< shortest length ^ b
  double rhs = 0.0;  ///< gamma_b^{b/2} covolume
  bool holds = false;
  bool equality = false;
};

/// Flat-torus case (Abel-Jacobi degree 1). UnsupportedRank for b > 4.
Eq75Report check_eq75(const Lattice& lat);

/// `lattice v1`, `rank b`, then b rows of b decimals; `#` starts a comment.
Lattice load_lattice(std::string_view text);
Lattice load_lattice_file(const std::string& path);
std::string write_lattice(const Lattice& lat);

}  // namespace syscat::lattice
