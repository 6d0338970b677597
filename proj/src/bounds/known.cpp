#include <algorithm>
#include <cctype>

#include "syscat/bounds.hpp"

namespace syscat::bounds {

namespace {

std::string cpn_descriptor(int n) {
  std::string betti = "1";
  for (int k = 1; k <= 2 * n; ++k) betti += k % 2 == 0 ? " 1" : " 0";
  const std::string s = std::to_string(n);
  return "name: CP^" + s + "\ndim: " + std::to_string(2 * n) + "\norientable: yes\npi1: trivial\nbetti_Q: " + betti +
         "\ncuplength_R: " + s + "\ncuplength_any: " + s + "\n";
}

std::vector<KnownCase> table() {
  std::vector<KnownCase> t;

  KnownCase rp3;
  rp3.name = "rp3";
  rp3.title = "real projective 3-space";
  rp3.variants.push_back({"RP^3", "name: RP^3\ndim: 3\norientable: yes\npi1: other\nbetti_Q: 1 0 0 1\n",
                          Interval{3, 3}, Interval{3, 3}});
  rp3.citations = {"RP^3 is essential, hence cat(RP^3) = syscat(RP^3) = 3"};
  t.push_back(rp3);

  KnownCase surfaces;
  surfaces.name = "surfaces";
  surfaces.title = "closed surfaces";
  surfaces.variants = {
      {"S^2", "name: S^2\ndim: 2\norientable: yes\npi1: trivial\nbetti_Q: 1 0 1\n", Interval{1, 1}, Interval{1, 1}},
      {"T^2", "name: T^2\ndim: 2\norientable: yes\npi1: other\nbetti_Q: 1 2 1\n", Interval{2, 2}, Interval{2, 2}},
      {"RP^2", "name: RP^2\ndim: 2\norientable: no\npi1: other\nbetti_Q: 1 0 0\n", Interval{2, 2}, Interval{2, 2}},
      {"Klein bottle", "name: Klein bottle\ndim: 2\norientable: no\npi1: other\nbetti_Q: 1 1 0\n", Interval{2, 2},
       Interval{2, 2}},
      {"genus 2", "name: genus 2 surface\ndim: 2\norientable: yes\npi1: other\nbetti_Q: 1 4 1\n", Interval{2, 2},
       Interval{2, 2}},
  };
  surfaces.citations = {"cat S^2 = 1", "cat M = syscat M for all closed surfaces, equal to 2 unless M = S^2"};
  t.push_back(surfaces);

  KnownCase cpn;
  cpn.name = "cpn";
  cpn.title = "complex projective spaces CP^n";
  for (int n = 1; n <= 4; ++n) {
    cpn.variants.push_back({"CP^" + std::to_string(n), cpn_descriptor(n), Interval{n, n}, Interval{n, n}});
  }
  cpn.citations = {"syscat(CP^n) = n from Gromov's stable inequality stsys_2^n <= n! vol_2n",
                   "cat(CP^n) = n (cup-length n, and CP^n is 1-connected of dimension 2n)"};
  t.push_back(cpn);

  KnownCase m16;
  m16.name = "singhof-m16";
  m16.title = "Singhof's S^2-bundle M^16 over S^14";
  m16.variants.push_back({"M^16",
                          "name: M^16\ndim: 16\norientable: yes\npi1: trivial\n"
                          "betti_Q: 1 0 1 0 0 0 0 0 0 0 0 0 0 0 1 0 1\ncuplength_R: 2\n",
                          Interval{3, 3}, std::nullopt});
  m16.stable_syscat = 2;
  m16.citations = {"S^2-bundles over spheres with cat(M) = 3 (Singhof)",
                   "M^16 has stable systolic category 2 by Poincare duality and the Betti number inequality"};
  t.push_back(m16);

  KnownCase m19;
  m19.name = "m19";
  m19.title = "the 19-manifold with a nontrivial Massey product";
  m19.variants.push_back({"M^19",
                          "name: M^19\ndim: 19\norientable: yes\npi1: trivial\n"
                          "betti_Q: 1 0 0 0 1 0 1 0 0 0 0 0 0 1 0 1 0 0 0 1\n"
                          "connectivity_k: 4\ncuplength_R: 2\ncuplength_any: 3\n"
                          "toomer_e0: 3\nmassey_nontrivial: yes\n",
                          Interval{3, 4}, std::nullopt});
  m19.rational_cat = 3;
  m19.iq_syscat_lower = 3;
  m19.citations = {"3 <= cat M^19 <= 4", "rational category of M^19 equals 3 (Toomer invariant e0 = 3)",
                   "IQ-modified systolic category of M^19 is at least 4 - 1 = 3"};
  t.push_back(m19);

  KnownCase smale;
  smale.name = "smale-mk";
  smale.title = "Smale's spin rational homology 5-spheres M_k";
  smale.variants.push_back({"M_k",
                            "name: M_k\ndim: 5\norientable: yes\npi1: trivial\nbetti_Q: 1 0 0 0 0 1\n"
                            "is_homotopy_sphere: no\ncuplength_any: 2\n",
                            Interval{2, 2}, std::nullopt});
  smale.citations = {"cat(M_k) = 2 for simply connected 5-manifolds that are not homotopy spheres",
                     "the systolic category of M_k is open"};
  t.push_back(smale);

  return t;
}

std::string normalize(std::string_view name) {
  std::string s;
  for (char c : name) {
    if (c == '_' || c == ' ') c = '-';
    s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

}  // namespace

KnownCase lookup_known(std::string_view name) {
  const std::string key = normalize(name);
  for (auto& c : table()) {
    if (c.name == key) return c;
  }
  std::string names;
  for (const auto& n : known_names()) names += (names.empty() ? "" : ", ") + n;
  throw UnknownName("no known case '" + std::string(name) + "' (available: " + names + ")");
}

std::vector<std::string> known_names() {
  std::vector<std::string> out;
  for (const auto& c : table()) out.push_back(c.name);
  return out;
}

}  // namespace syscat::bounds
