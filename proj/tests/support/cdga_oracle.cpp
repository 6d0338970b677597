#include "cdga_oracle.hpp"

#include <map>

namespace oracle {

using syscat::cdga::Field;
using syscat::cdga::Monomial;

namespace {

long rank_mod_p(long p, const std::vector<std::vector<Scalar>>& rows) {
  std::vector<std::vector<long>> m;
  for (const auto& r : rows) {
    std::vector<long> v;
    for (const auto& x : r) {
      mpz_class num = x.get_num() % p, den = x.get_den() % p, inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
      mpz_class y = (num * inv) % p;
      if (y < 0) y += p;
      v.push_back(y.get_si());
    }
    m.push_back(std::move(v));
  }
  const auto power = [p](long b, long e) {
    long r = 1;
    for (b %= p; e > 0; e >>= 1, b = b * b % p) {
      if (e & 1) r = r * b % p;
    }
    return r;
  };
  long rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<long>(m.size()); ++c) {
    std::size_t k = rank;
    while (k < m.size() && m[k][c] == 0) ++k;
    if (k == m.size()) continue;
    std::swap(m[rank], m[k]);
    const long inv = power(m[rank][c], p - 2);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      const long f = m[i][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

long rank_rational(const std::vector<std::vector<Scalar>>& rows) {
  // Clear denominators, then Bareiss elimination over the integers.
  std::vector<std::vector<mpz_class>> m;
  for (const auto& r : rows) {
    mpz_class l = 1;
    for (const auto& x : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<mpz_class> v;
    for (const auto& x : r) v.push_back(x.get_num() * (l / x.get_den()));
    m.push_back(std::move(v));
  }
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  long rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rank < static_cast<long>(m.size()); ++c) {
    std::size_t k = rank;
    while (k < m.size() && m[k][c] == 0) ++k;
    if (k == m.size()) continue;
    std::swap(m[rank], m[k]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

std::vector<Scalar> coords(const std::vector<Monomial>& basis, const Polynomial& p) {
  std::vector<Scalar> v(basis.size(), Scalar(0));
  for (const auto& [m, c] : p) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] == m) v[i] = c;
    }
  }
  return v;
}

std::vector<std::vector<Scalar>> image_rows(const FreeCDGA& a, int n) {
  std::vector<std::vector<Scalar>> rows;
  const auto target = a.basis(n);
  for (const auto& m : a.basis(n - 1)) rows.push_back(coords(target, a.d(m)));
  return rows;
}

}  // namespace

long rank(const Field& field, std::vector<std::vector<Scalar>> rows) {
  return field.is_rational() ? rank_rational(rows) : rank_mod_p(field.characteristic(), rows);
}

int betti(const FreeCDGA& a, int n) {
  const long dim = static_cast<long>(a.basis(n).size());
  return static_cast<int>(dim - rank(a.field(), image_rows(a, n + 1)) - rank(a.field(), image_rows(a, n)));
}

bool in_image_plus(const FreeCDGA& a, int n, const Polynomial& target, const std::vector<Polynomial>& extra) {
  auto rows = image_rows(a, n);
  const auto basis = a.basis(n);
  for (const auto& e : extra) rows.push_back(coords(basis, e));
  const long before = rank(a.field(), rows);
  rows.push_back(coords(basis, target));
  return rank(a.field(), rows) == before;
}

}  // namespace oracle
