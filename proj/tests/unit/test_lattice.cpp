#include <doctest.h>

#include <cmath>

#include "lattice_oracle.hpp"
#include "syscat/lattice.hpp"

using namespace syscat;
using namespace syscat::lattice;

TEST_CASE("shortest vector examples") {
  auto z2 = shortest_vector(integer_lattice(2));
  CHECK(z2.coeffs == std::vector<long long>{1, 0});
  CHECK(z2.length == 1.0);

  auto hex = shortest_vector(hexagonal());
  CHECK(hex.length == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(hex.coeffs == std::vector<long long>{1, 0});
  // six minimizers among |c| <= 3
  CHECK(oracle::naive_shortest(hexagonal(), 3).minimizers.size() == 6);

  Lattice s = hexagonal().scaled(9.0);
  CHECK(shortest_vector(s).length == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("covolume") {
  for (int b = 1; b <= 4; ++b) CHECK(covolume(integer_lattice(b)) == doctest::Approx(1.0));
  CHECK(covolume(hexagonal()) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));
  Lattice block = Lattice::from_gram({{1, 0.5, 0, 0}, {0.5, 1, 0, 0}, {0, 0, 2, 0.3}, {0, 0, 0.3, 1}});
  Lattice other = Lattice::from_gram({{2, 0.3}, {0.3, 1}});
  CHECK(covolume(block) == doctest::Approx(covolume(hexagonal()) * covolume(other)).epsilon(1e-14));
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(Lattice::from_gram({{1, 2}, {2, 1}}), NotPositiveDefinite);
  CHECK_THROWS_AS(Lattice::from_gram({{1, 0.2}, {0.3, 1}}), NotPositiveDefinite);
  CHECK_THROWS_AS(Lattice::from_gram({{0}}), NotPositiveDefinite);
  CHECK_THROWS_AS(hermite_constant(5), UnsupportedRank);
  CHECK_THROWS_AS(check_eq75(integer_lattice(5)), UnsupportedRank);
  CHECK_THROWS_AS(load_lattice("lattice v1\nrank 2\n1 0\n"), ParseError);
  CHECK_THROWS_AS(load_lattice("lattice v2\nrank 1\n1\n"), ParseError);
  Lattice back = load_lattice("lattice v1\n# hex\nrank 2\n1 0.5\n0.5 1\n");
  CHECK(back.gram() == hexagonal().gram());
  CHECK(load_lattice(write_lattice(d4())).gram() == d4().gram());
}

TEST_CASE("hermite constants") {
  CHECK(hermite_constant(1) == 1.0);
  CHECK(hermite_constant(2) == doctest::Approx(2 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(hermite_constant(3) == doctest::Approx(std::pow(2.0, 1.0 / 3)).epsilon(1e-15));
  CHECK(hermite_constant(4) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  // D4 attains gamma_4
  auto sv = shortest_vector(d4());
  CHECK(sv.length * sv.length / std::sqrt(covolume(d4())) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  // Monte-Carlo: no random 2-lattice beats the hexagonal one
  Rng rng(2024);
  double worst = 0.0;
  for (int i = 0; i < 100000; ++i) {
    Lattice l = random_lattice(2, rng);
    const double q = std::pow(shortest_vector(l).length, 2) / covolume(l);
    worst = std::max(worst, q);
  }
  CHECK(worst <= hermite_constant(2) * (1 + 1e-12));
  CHECK(worst > 1.1);
}

TEST_CASE("check_eq75 examples") {
  auto hex = check_eq75(hexagonal());
  CHECK(hex.lhs == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(hex.rhs == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(hex.holds);
  CHECK(hex.equality);

  auto z2 = check_eq75(integer_lattice(2));
  CHECK(z2.lhs == 1.0);
  CHECK(z2.rhs == doctest::Approx(2 / std::sqrt(3.0)));
  CHECK(z2.holds);
  CHECK(!z2.equality);

  Rng rng(5);
  for (int b = 1; b <= 4; ++b) {
    Lattice l = random_lattice(b, rng);
    CHECK(check_eq75(l.scaled(7.3)).holds == check_eq75(l).holds);
  }
}

TEST_CASE("enumeration agrees with the naive box search") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int b = 1 + trial % 4;
    // entries in [0.5, 2] on the diagonal, off-diagonal small enough to stay definite
    std::vector<std::vector<double>> g(b, std::vector<double>(b));
    for (int i = 0; i < b; ++i) g[i][i] = uniform(rng, 0.5, 2.0);
    for (int i = 0; i < b; ++i) {
      for (int j = i + 1; j < b; ++j) g[i][j] = g[j][i] = uniform(rng, -0.5, 0.5) * std::sqrt(g[i][i] * g[j][j]) / b;
    }
    Lattice l = Lattice::from_gram(g);
    auto sv = shortest_vector(l);
    auto naive = oracle::naive_shortest(l, b <= 3 ? 5 : 4);
    CHECK(sv.length * sv.length == doctest::Approx(naive.norm2).epsilon(1e-12));
    bool listed = false;
    for (const auto& c : naive.minimizers) listed = listed || c == sv.coeffs;
    CHECK(listed);
  }
}

TEST_CASE("unimodular invariance") {
  Rng rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const int b = 1 + trial % 4;
    Lattice l = random_lattice(b, rng);
    auto u = oracle::random_unimodular(b, rng);
    const double a = shortest_vector(l).length;
    const double c = shortest_vector(l.transformed(u)).length;
    CHECK(std::abs(a - c) <= 1e-12 * std::max(1.0, a));
  }
}
