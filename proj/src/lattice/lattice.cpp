#include "syscat/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

namespace syscat::lattice {

namespace {

using Matrix = std::vector<std::vector<double>>;
using IntMatrix = std::vector<std::vector<long long>>;

// Upper-triangular R with G = R^T R; nullopt-like empty result when G is not
// numerically positive definite.
bool cholesky(const Matrix& g, Matrix& r) {
  const std::size_t n = g.size();
  r.assign(n, std::vector<double>(n, 0.0));
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(g[i][i]));
  for (std::size_t i = 0; i < n; ++i) {
    double d = g[i][i];
    for (std::size_t k = 0; k < i; ++k) d -= r[k][i] * r[k][i];
    if (!(d > 1e-14 * scale)) return false;
    r[i][i] = std::sqrt(d);
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = g[i][j];
      for (std::size_t k = 0; k < i; ++k) s -= r[k][i] * r[k][j];
      r[i][j] = s / r[i][i];
    }
  }
  return true;
}

Matrix identity(int n) {
  Matrix m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

// Gram-Schmidt data of the basis described by g.
void gram_schmidt(const Matrix& g, Matrix& mu, std::vector<double>& bstar) {
  const std::size_t n = g.size();
  mu.assign(n, std::vector<double>(n, 0.0));
  bstar.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      double s = g[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= mu[j][k] * mu[i][k] * bstar[k];
      mu[i][j] = s / bstar[j];
    }
    double s = g[i][i];
    for (std::size_t k = 0; k < i; ++k) s -= mu[i][k] * mu[i][k] * bstar[k];
    bstar[i] = s;
  }
}

// LLL with delta = 0.99 on the Gram matrix; u collects the basis change
// (column k holds the coefficients of the new k-th basis vector).
void lll(Matrix& g, IntMatrix& u) {
  const int n = static_cast<int>(g.size());
  u.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) u[i][i] = 1;
  Matrix mu;
  std::vector<double> bstar;
  gram_schmidt(g, mu, bstar);
  int k = 1;
  int guard = 0;
  while (k < n && ++guard < 100000) {
    for (int j = k - 1; j >= 0; --j) {
      const double q = std::nearbyint(mu[k][j]);
      if (q == 0.0) continue;
      for (int i = 0; i < n; ++i) g[k][i] -= q * g[j][i];
      for (int i = 0; i < n; ++i) g[i][k] -= q * g[i][j];
      const auto qi = static_cast<long long>(q);
      for (int i = 0; i < n; ++i) u[i][k] -= qi * u[i][j];
      gram_schmidt(g, mu, bstar);
    }
    if (bstar[k] < (0.99 - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
      std::swap(g[k], g[k - 1]);
      for (int i = 0; i < n; ++i) std::swap(g[i][k], g[i][k - 1]);
      for (int i = 0; i < n; ++i) std::swap(u[i][k], u[i][k - 1]);
      gram_schmidt(g, mu, bstar);
      k = std::max(k - 1, 1);
    } else {
      ++k;
    }
  }
}

double quadratic(const Matrix& g, const std::vector<long long>& c) {
  double s = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    double row = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) row += g[i][j] * static_cast<double>(c[j]);
    s += static_cast<double>(c[i]) * row;
  }
  return s;
}

void normalize_sign(std::vector<long long>& c) {
  for (long long x : c) {
    if (x == 0) continue;
    if (x < 0) {
      for (long long& y : c) y = -y;
    }
    return;
  }
}

}  // namespace

Lattice Lattice::from_gram(Matrix gram) {
  const std::size_t n = gram.size();
  if (n < 1 || n > static_cast<std::size_t>(kMaxRank)) {
    throw UnsupportedRank("rank " + std::to_string(n) + " outside 1.." + std::to_string(kMaxRank));
  }
  double scale = 0.0;
  for (const auto& row : gram) {
    if (row.size() != n) throw NotPositiveDefinite("Gram matrix is not square");
    for (double x : row) {
      if (!std::isfinite(x)) throw NotPositiveDefinite("Gram matrix has a non-finite entry");
      scale = std::max(scale, std::abs(x));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(gram[i][j] - gram[j][i]) > 1e-12 * scale) {
        throw NotPositiveDefinite("Gram matrix is not symmetric at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
      }
      gram[j][i] = gram[i][j];
    }
  }
  Matrix r;
  if (!cholesky(gram, r)) throw NotPositiveDefinite("a leading principal minor is not positive");
  return Lattice(std::move(gram));
}

Lattice Lattice::scaled(double factor) const {
  Matrix g = gram_;
  for (auto& row : g) {
    for (double& x : row) x *= factor;
  }
  return from_gram(std::move(g));
}

Lattice Lattice::transformed(const IntMatrix& u) const {
  const int n = rank();
  Matrix g(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      long double s = 0.0L;
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          s += static_cast<long double>(u[a][i]) * gram_[a][b] * static_cast<long double>(u[b][j]);
        }
      }
      g[i][j] = static_cast<double>(s);
    }
  }
  return from_gram(std::move(g));
}

Lattice integer_lattice(int rank) { return Lattice::from_gram(identity(rank)); }

Lattice hexagonal() { return Lattice::from_gram({{1.0, 0.5}, {0.5, 1.0}}); }

Lattice d4() {
  return Lattice::from_gram({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
}

Lattice random_lattice(int rank, Rng& rng) {
  if (rank < 1 || rank > kMaxRank) throw UnsupportedRank("rank " + std::to_string(rank));
  for (;;) {
    Matrix b(rank, std::vector<double>(rank));
    for (auto& row : b) {
      for (double& x : row) x = uniform(rng, -1.0, 1.0);
    }
    Matrix g(rank, std::vector<double>(rank, 0.0));
    for (int i = 0; i < rank; ++i) {
      for (int j = 0; j < rank; ++j) {
        for (int k = 0; k < rank; ++k) g[i][j] += b[k][i] * b[k][j];
      }
    }
    Matrix r;
    if (!cholesky(g, r)) continue;
    double det = 1.0, maxdiag = 0.0;
    for (int i = 0; i < rank; ++i) {
      det *= r[i][i] * r[i][i];
      maxdiag = std::max(maxdiag, g[i][i]);
    }
    if (std::pow(det, 1.0 / rank) < 1e-3 * maxdiag) continue;
    return Lattice::from_gram(std::move(g));
  }
}

ShortestVectorResult shortest_vector(const Lattice& lat) {
  const int n = lat.rank();
  Matrix g = lat.gram();
  IntMatrix u;
  lll(g, u);
  Matrix r;
  if (!cholesky(g, r)) throw NotPositiveDefinite("reduced Gram matrix lost definiteness");

  // Every lattice vector of squared norm <= bound lies in the region searched.
  double bound = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) bound = std::min(bound, g[i][i]);
  bound *= 1 + 1e-9;

  std::vector<std::vector<long long>> found;
  std::vector<long long> x(n, 0);
  std::function<void(int, double)> descend = [&](int i, double partial) {
    // center of coordinate i given x_{i+1..n-1}
    double c = 0.0;
    for (int j = i + 1; j < n; ++j) c -= r[i][j] * static_cast<double>(x[j]);
    c /= r[i][i];
    const double room = (bound - partial) / (r[i][i] * r[i][i]);
    if (room < 0) return;
    const double w = std::sqrt(room);
    const auto lo = static_cast<long long>(std::ceil(c - w - 1e-9));
    const auto hi = static_cast<long long>(std::floor(c + w + 1e-9));
    for (long long v = lo; v <= hi; ++v) {
      x[i] = v;
      const double t = r[i][i] * (static_cast<double>(v) - c);
      const double next = partial + t * t;
      if (next > bound) continue;
      if (i == 0) {
        bool zero = std::all_of(x.begin(), x.end(), [](long long y) { return y == 0; });
        if (!zero) found.push_back(x);
      } else {
        descend(i - 1, next);
      }
    }
    x[i] = 0;
  };
  descend(n - 1, 0.0);

  const Matrix& g0 = lat.gram();
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, std::vector<long long>>> cand;
  for (const auto& y : found) {
    std::vector<long long> c(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) c[i] += u[i][j] * y[j];
    }
    normalize_sign(c);
    const double q = quadratic(g0, c);
    best = std::min(best, q);
    cand.emplace_back(q, std::move(c));
  }
  if (cand.empty()) throw NotPositiveDefinite("enumeration found no vector");
  ShortestVectorResult out;
  for (auto& [q, c] : cand) {
    if (q > best * (1 + 1e-12)) continue;
    if (out.coeffs.empty() || c > out.coeffs) out.coeffs = c;
  }
  out.length = std::sqrt(quadratic(g0, out.coeffs));
  return out;
}

double covolume(const Lattice& lat) {
  Matrix r;
  if (!cholesky(lat.gram(), r)) throw NotPositiveDefinite("Gram matrix is not positive definite");
  double v = 1.0;
  for (std::size_t i = 0; i < r.size(); ++i) v *= r[i][i];
  return v;
}

double hermite_constant(int b) {
  switch (b) {
    case 1:
      return 1.0;
    case 2:
      return 2.0 / std::sqrt(3.0);
    case 3:
      return std::cbrt(2.0);
    case 4:
      return std::sqrt(2.0);
    default:
      throw UnsupportedRank("no stored Hermite constant for rank " + std::to_string(b));
  }
}

Eq75Report check_eq75(const Lattice& lat) {
  Eq75Report rep;
  rep.rank = lat.rank();
  const double gamma = hermite_constant(rep.rank);
  rep.lhs = std::pow(shortest_vector(lat).length, rep.rank);
  rep.rhs = std::pow(gamma, rep.rank / 2.0) * covolume(lat);
  rep.holds = rep.lhs <= rep.rhs + 1e-9;
  rep.equality = std::abs(rep.lhs - rep.rhs) <= 1e-9 * rep.rhs;
  return rep;
}

Lattice load_lattice(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string>>> lines;
  std::istringstream in{std::string(text)};
  int number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (!tokens.empty()) lines.emplace_back(number, std::move(tokens));
  }
  const auto fail = [](int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
  };
  if (lines.empty() || lines[0].second != std::vector<std::string>{"lattice", "v1"}) {
    fail(lines.empty() ? 1 : lines[0].first, "expected header 'lattice v1'");
  }
  if (lines.size() < 2 || lines[1].second.size() != 2 || lines[1].second[0] != "rank") {
    fail(lines.size() < 2 ? number : lines[1].first, "expected 'rank b'");
  }
  int b = 0;
  {
    const std::string& tok = lines[1].second[1];
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), b);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || b < 1) {
      fail(lines[1].first, "rank must be a positive integer");
    }
  }
  if (b > kMaxRank) throw UnsupportedRank("rank " + std::to_string(b) + " exceeds " + std::to_string(kMaxRank));
  if (static_cast<int>(lines.size()) != 2 + b) fail(number, "expected exactly " + std::to_string(b) + " Gram rows");
  Matrix g(b, std::vector<double>(b));
  for (int i = 0; i < b; ++i) {
    const auto& [ln, tokens] = lines[2 + i];
    if (static_cast<int>(tokens.size()) != b) fail(ln, "expected " + std::to_string(b) + " entries");
    for (int j = 0; j < b; ++j) {
      const std::string& tok = tokens[j];
      auto res = std::from_chars(tok.data(), tok.data() + tok.size(), g[i][j]);
      if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) fail(ln, "bad number '" + tok + "'");
    }
  }
  return Lattice::from_gram(std::move(g));
}

Lattice load_lattice_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_lattice(buf.str());
}

std::string write_lattice(const Lattice& lat) {
  std::string out = "lattice v1\nrank " + std::to_string(lat.rank()) + "\n";
  char buf[64];
  for (const auto& row : lat.gram()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      auto res = std::to_chars(buf, buf + sizeof(buf), row[j]);
      if (j) out += ' ';
      out.append(buf, res.ptr);
    }
    out += '\n';
  }
  return out;
}

}  // namespace syscat::lattice
