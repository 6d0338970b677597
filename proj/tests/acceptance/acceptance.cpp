// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status 1
// if any criterion fails. Independent checks come from tests/support.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cdga_oracle.hpp"
#include "mesh_oracle.hpp"
#include "syscat/bounds.hpp"
#include "syscat/cdga.hpp"
#include "syscat/lab.hpp"
#include "syscat/mesh.hpp"
#include "syscat/random.hpp"

#ifndef SYSCAT_DATA_DIR
#error "SYSCAT_DATA_DIR must point at the data directory"
#endif

namespace fs = std::filesystem;
using namespace syscat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome from_report(const lab::RunReport& r, const std::vector<std::string>& only = {}) {
  Outcome o;
  int checked = 0;
  for (const auto& v : r.verdicts) {
    if (!only.empty() && std::none_of(only.begin(), only.end(),
                                      [&](const std::string& p) { return v.name.rfind(p, 0) == 0; })) {
      continue;
    }
    ++checked;
    if (!v.pass) {
      o.pass = false;
      o.detail += "; failed " + v.name + " = " + v.measured + " (target " + v.target + ")";
    }
  }
  if (checked == 0) {
    o.pass = false;
    o.detail += "; no verdicts matched";
  }
  o.detail = std::to_string(checked) + " verdicts" + o.detail;
  return o;
}

std::string verdict_value(const lab::RunReport& r, const std::string& name) {
  for (const auto& v : r.verdicts) {
    if (v.name.rfind(name, 0) == 0) return v.measured;
  }
  return "?";
}

// ---------------------------------------------------------------------------

Outcome loewner() {
  lab::ExperimentConfig c;
  c.experiment = "loewner";
  const auto r = lab::run_experiment(c);
  auto o = from_report(r);
  o.detail += "; optimized " + verdict_value(r, "optimized torus ratio") + ", perturbed over bound " +
              verdict_value(r, "perturbed");
  return o;
}

Outcome pu() {
  lab::ExperimentConfig c;
  c.experiment = "pu";
  const auto r = lab::run_experiment(c);
  auto o = from_report(r);
  o.detail += "; optimized " + verdict_value(r, "optimized RP^2 ratio") + ", round levels 3 " +
              verdict_value(r, "round RP^2");
  return o;
}

Outcome mesh_corpus() {
  Outcome o;
  std::map<std::string, int> kinds;
  int total = 0;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(fs::path(SYSCAT_DATA_DIR) / "meshes")) {
    if (e.path().extension() == ".mesh") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    std::string kind;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
      if (line.rfind("# ", 0) == 0) {
        kind = line.substr(2);
        break;
      }
    }
    const auto m = mesh::load_mesh(text);
    if (m.vertex_count() > 12) {
      o.pass = false;
      o.detail += "; " + f.filename().string() + " has more than 12 vertices";
      continue;
    }
    ++total;
    ++kinds[kind];
    const auto brute = oracle::brute_force_systole(m);
    std::optional<mesh::LoopResult> fast;
    try {
      fast = mesh::systole_h1z2(m);
    } catch (const NoNontrivialClass&) {
    }
    bool ok;
    if (kind == "sphere") {
      ok = !brute && !fast;
    } else {
      ok = brute && fast && brute->length == fast->length && brute->cycle == fast->cycle;
    }
    if (!ok) {
      o.pass = false;
      o.detail += "; mismatch on " + f.filename().string();
    }
  }
  if (total < 20 || kinds.size() < 4) {
    o.pass = false;
    o.detail += "; corpus too small or missing a surface type";
  }
  std::string summary = std::to_string(total) + " meshes (";
  bool first = true;
  for (const auto& [k, n] : kinds) {
    summary += (first ? "" : ", ") + k + " " + std::to_string(n);
    first = false;
  }
  o.detail = summary + "), exact agreement with brute force" + o.detail;
  return o;
}

Outcome lattice_sweep() {
  lab::ExperimentConfig c;
  c.experiment = "lattice-sweep";
  c.seed = 1;
  c.samples = 10000;
  const auto r = lab::run_experiment(c);
  auto o = from_report(r);
  o.detail += "; D4 invariant " + verdict_value(r, "D4");
  return o;
}

// Massey product <[x4],[x4],[x6]> on the su6 model, checked against the
// linear-algebra oracle rather than the library's own class coordinates.
Outcome massey() {
  using namespace cdga;
  Outcome o;
  const FreeCDGA a = su6_model();
  Cohomology h(a);
  const auto u = h.basis_class(4, 0), w = h.basis_class(6, 0);
  const auto base = massey_triple(h, u, u, w);
  std::vector<Polynomial> indet;
  for (const auto& c : base.indeterminacy) indet.push_back(h.representative(c));

  const bool nontrivial = base.nontrivial && !oracle::in_image_plus(a, 13, base.cochain, indet);
  const auto expected = a.parse_polynomial("y7*x6 - x4*y9");
  const bool rep = oracle::in_image_plus(a, 13, a.add(base.cochain, a.scale(-1, expected)), indet);
  if (!nontrivial) o.pass = false;
  if (!rep) o.pass = false;

  o.detail = std::string(nontrivial ? "nontrivial" : "TRIVIAL") + ", cochain " + a.format(base.cochain) +
             (rep ? " ~ " : " !~ ") + "y7*x6 - x4*y9";

  // In su6 itself Z^7 = Z^9 = 0, so re-choices only bite after adjoining t3.
  const FreeCDGA wide = parse_cdga(
      "cdga v1\ncap 20\ngen x4 : 4\ngen x6 : 6\ngen y7 : 7\ngen y9 : 9\ngen y11 : 11\ngen t3 : 3\n"
      "d y7 = x4^2\nd y9 = x4*x6\nd y11 = x6^2\n");
  Rng rng(5);
  for (const auto* model : {&a, &wide}) {
    Cohomology hm(*model);
    const auto& b = hm.algebra();
    const auto um = hm.basis_class(4, 0), wm = hm.basis_class(6, 0);
    const auto first = massey_triple(hm, um, um, wm);
    std::vector<Polynomial> ind;
    for (const auto& c : first.indeterminacy) ind.push_back(hm.representative(c));
    const auto z7 = cocycles(b, 7), z9 = cocycles(b, 9);
    const auto combo = [&](const std::vector<Polynomial>& basis) {
      Polynomial p;
      for (const auto& v : basis) p = b.add(p, b.scale(Scalar(static_cast<long>(uniform_int(rng, -3, 3))), v));
      return p;
    };
    int same = 0;
    for (int t = 0; t < 100; ++t) {
      const auto x = b.add(first.x, combo(z7));
      const auto y = b.add(first.y, combo(z9));
      const auto other = massey_triple(hm, um, um, wm, x, y);
      same += oracle::in_image_plus(b, 13, b.add(other.cochain, b.scale(-1, first.cochain)), ind);
    }
    if (same != 100) o.pass = false;
    o.detail += "; " + std::string(model == &a ? "su6" : "su6 + t3") + ": " + std::to_string(same) +
                "/100 re-choices in one coset (dim Z^7 = " + std::to_string(z7.size()) +
                ", indeterminacy rank " + std::to_string(ind.size()) + ")";
  }
  return o;
}

Outcome toomer() {
  using namespace cdga;
  Outcome o;
  const FreeCDGA su6 = su6_model();
  const auto e = toomer_e0(su6, 19);
  bool long_words = !e.witness.empty();
  for (const auto& [m, c] : e.witness) long_words = long_words && FreeCDGA::word_length(m) >= 3;
  const auto stated = su6.parse_polynomial("x4^2*y11 - x4*x6*y9");
  const bool same_class = oracle::in_image_plus(su6, 19, su6.add(e.witness, su6.scale(-1, stated)), {});
  o.pass = e.e0 == 3 && long_words && same_class && oracle::betti(su6, 19) == 1;
  o.detail = "e0(su6) = " + std::to_string(e.e0) + ", witness " + su6.format(e.witness);
  std::string cp, tori;
  for (int n = 1; n <= 4; ++n) {
    const int e0 = toomer_e0(cp_model(n), 2 * n).e0;
    const int tl = cup_length(torus_model(n));
    o.pass = o.pass && e0 == n && tl == n;
    cp += " " + std::to_string(e0);
    tori += " " + std::to_string(tl);
  }
  const int cl3 = cup_length(cp_model(3));
  o.pass = o.pass && cl3 == 3;
  o.detail += "; e0(cp 1..4):" + cp + "; cup_length(cp 3) = " + std::to_string(cl3) + "; cup_length(torus 1..4):" + tori;
  return o;
}

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

mpq_class constant_term(int n, int p1, int pj, int p3) {
  const mpz_class binom = factorial(p1 + pj) / (factorial(p1) * factorial(pj));
  mpq_class q(factorial(n) * binom, factorial(pj) * factorial(p1 + pj) * factorial(p3));
  q.canonicalize();
  return q;
}

Outcome constants() {
  Outcome o;
  const auto s = bounds::massey_inequality_spec(19, 4, 6);
  const auto small = bounds::massey_inequality_spec(4, 1, 1);
  bool rejects = false;
  try {
    bounds::massey_inequality_spec(5, 2, 2);
  } catch (const InvalidPartition&) {
    rejects = true;
  }
  o.pass = s.p3 == 6 && s.a1 == constant_term(19, 4, 4, 6) && s.a2 == constant_term(19, 4, 6, 6) &&
           s.constant() <= mpq_class(factorial(19)) && s.n_factorial == factorial(19) && small.p3 == 2 &&
           small.a1 == 12 && small.a2 == 12 && rejects;
  o.detail = "(19,4,6): p3 = " + std::to_string(s.p3) + ", A1 + A2 = " + s.constant().get_str() + " <= 19! = " +
             s.n_factorial.get_str() + "; (4,1,1): A1 = " + small.a1.get_str() + ", A2 = " + small.a2.get_str();
  return o;
}

Outcome bounds_suite() {
  lab::ExperimentConfig c;
  c.experiment = "bounds-suite";
  auto o = from_report(lab::run_experiment(c));
  c.conjectures = true;
  const auto on = from_report(lab::run_experiment(c));
  o.pass = o.pass && on.pass;
  o.detail = "off: " + o.detail + "; on: " + on.detail;
  return o;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// d^2 = 0 on every basis monomial, Leibniz on random monomial pairs, and
// Betti numbers of tori and projective spaces against closed forms.
Outcome algebra_engine() {
  using namespace cdga;
  Outcome o;
  std::vector<std::pair<std::string, FreeCDGA>> models = {{"su6", su6_model()}};
  for (int n = 1; n <= 4; ++n) {
    models.push_back({"cp " + std::to_string(n), cp_model(n)});
    models.push_back({"torus " + std::to_string(n), torus_model(n)});
  }
  for (const auto& e : fs::directory_iterator(fs::path(SYSCAT_DATA_DIR) / "algebras")) {
    models.push_back({e.path().filename().string(), load_cdga_file(e.path())});
  }
  for (long p : {2L, 3L}) {
    models.push_back({"cp 2 over Z" + std::to_string(p),
                      parse_cdga("cdga v1\nfield Z<" + std::to_string(p) + ">\ncap 9\ngen x : 2\ngen y : 5\nd y = x^3\n")});
  }

  Rng rng(99);
  long leibniz = 0;
  int betti_checked = 0;
  for (const auto& [name, a] : models) {
    std::vector<Monomial> all;
    for (int n = 0; n < a.degree_cap(); ++n) {
      for (const auto& m : a.basis(n)) {
        all.push_back(m);
        if (!a.d(a.d(m)).empty()) {
          o.pass = false;
          o.detail += "; d^2 != 0 on " + a.format(m) + " in " + name;
        }
      }
    }
    int done = 0;
    while (done < 1000) {
      const auto& x = all[below(rng, all.size())];
      const auto& y = all[below(rng, all.size())];
      const int dx = a.degree(x), dy = a.degree(y);
      if (dx + dy + 1 >= a.degree_cap()) continue;
      const Polynomial px{{x, Scalar(1)}}, py{{y, Scalar(1)}};
      const auto lhs = a.d(a.multiply(px, py));
      const auto rhs = a.add(a.multiply(a.d(px), py), a.scale(dx % 2 ? -1 : 1, a.multiply(px, a.d(py))));
      if (lhs != rhs) {
        o.pass = false;
        o.detail += "; Leibniz fails on " + a.format(x) + " * " + a.format(y) + " in " + name;
        break;
      }
      ++done;
    }
    leibniz += done;

    const bool torus = name.rfind("torus", 0) == 0;
    const bool cp = name.rfind("cp", 0) == 0 || name.rfind("cp3", 0) == 0;
    if (!torus && !cp) continue;
    int rank = 0;
    for (const auto& g : a.generators()) rank += g.degree == 1;
    const int cp_n = cp ? a.generators()[1].degree / 2 : 0;  // y has degree 2n+1
    const int top = torus ? a.degree_cap() - 1 : 2 * cp_n + 1;
    for (int k = 0; k <= top; ++k) {
      const long want = torus ? binomial(rank, k) : (k % 2 == 0 && k <= 2 * cp_n ? 1 : 0);
      const int lib = cohomology(a, k).dimension();
      const int ora = oracle::betti(a, k);
      ++betti_checked;
      if (lib != want || ora != want) {
        o.pass = false;
        o.detail += "; b" + std::to_string(k) + "(" + name + ") = " + std::to_string(lib) + ", expected " +
                    std::to_string(want);
      }
    }
  }
  o.detail = std::to_string(models.size()) + " models (including Z2 and Z3), " + std::to_string(leibniz) +
             " Leibniz checks, " + std::to_string(betti_checked) + " Betti numbers vs closed forms" + o.detail;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"torus optimization reaches 2/sqrt(3) and no perturbation beats it", loewner},
      {"RP^2 optimization reaches pi/2; round RP^2 within 10%", pu},
      {"homology systole agrees exactly with brute force on the mesh corpus", mesh_corpus},
      {"Hermite inequality sweep, ranks 1-4, hexagonal and D4 equality", lattice_sweep},
      {"nontrivial Massey product with stable coset", massey},
      {"Toomer invariants and cup-lengths", toomer},
      {"Massey systolic inequality constants", constants},
      {"category and systolic category bounds suite", bounds_suite},
      {"CDGA engine: d^2, Leibniz, Betti numbers", algebra_engine},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::printf("%s criterion %zu: %s [%.1fs]\n    %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures ? 1 : 0;
}
