#include "syscat/bounds.hpp"

namespace syscat::bounds {

namespace {

mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

}  // namespace

InequalitySpec massey_inequality_spec(int n, int p1, int p2) {
  if (n < 1 || p1 < 1 || p2 < 1) throw InvalidPartition("n, p1 and p2 must be positive");
  const int p3 = n - (2 * p1 + p2 - 1);
  if (p3 < 1) {
    throw InvalidPartition("p3 = n - (2 p1 + p2 - 1) = " + std::to_string(p3) + " for n = " + std::to_string(n) +
                           ", p1 = " + std::to_string(p1) + ", p2 = " + std::to_string(p2));
  }
  InequalitySpec s;
  s.n = n;
  s.p1 = p1;
  s.p2 = p2;
  s.p3 = p3;
  s.n_factorial = factorial(n);
  const auto a = [&](int pj) {
    mpq_class v(s.n_factorial * binomial(p1 + pj, p1), factorial(pj) * factorial(p1 + pj) * factorial(p3));
    v.canonicalize();
    return v;
  };
  s.a1 = a(p1);
  s.a2 = a(p2);
  s.statement = "stsys_" + std::to_string(p1) + "^2 * stsys_" + std::to_string(p2) + " * stsys_" +
                std::to_string(p3) + " <= (A1 + A2) * IQ(G) * vol_" + std::to_string(n) + "(G),  A1 = " +
                rational_text(s.a1) + ", A2 = " + rational_text(s.a2) + ", A1 + A2 = " + rational_text(s.constant());
  return s;
}

std::optional<IqBound> iq_modified_syscat_lower(const ManifoldDescriptor& d) {
  if (d.massey_nontrivial != Tri::yes || !d.betti) return std::nullopt;
  const auto& b = *d.betti;
  if (static_cast<int>(b.size()) != d.dim + 1) return std::nullopt;
  const int n = d.dim;
  for (int p1 = 1; 2 * p1 + 1 <= n; ++p1) {
    for (int p2 = 1; 2 * p1 + p2 <= n; ++p2) {
      const int p3 = n - (2 * p1 + p2 - 1);
      if (p3 < 1) continue;
      if (b[p1] == 1 && b[p2] == 1 && b[p3] == 1) {
        IqBound r;
        // four systole factors on the left, one IQ factor on the right
        r.value = 4 - 1;
        r.p1 = p1;
        r.p2 = p2;
        r.p3 = p3;
        r.citation = "Massey-product systolic inequality stsys_p1^2 stsys_p2 stsys_p3 <= C IQ vol_n: "
                     "4 systole factors minus 1 IQ factor";
        return r;
      }
    }
  }
  return std::nullopt;
}

}  // namespace syscat::bounds
