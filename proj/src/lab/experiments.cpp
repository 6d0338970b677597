#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <thread>

#include "syscat/bounds.hpp"
#include "syscat/cdga.hpp"
#include "syscat/lab.hpp"
#include "syscat/lattice.hpp"
#include "syscat/mesh.hpp"
#include "syscat/mesh_builtin.hpp"
#include "syscat/random.hpp"

namespace syscat::lab {

namespace {

constexpr double kPu = std::numbers::pi / 2;

// Runs fn(i) for i in [0, count); results must be written by index so the
// outcome does not depend on the thread count.
void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int i = t; i < count; i += threads) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Independent stream per (seed, stream, index).
Rng stream(std::uint64_t seed, std::uint64_t s, std::uint64_t i) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
  return Rng(seq);
}

std::string within(double target, double rel) {
  return fmt(target) + " +/- " + fmt(rel * 100, 3) + "%";
}

bool close_rel(double value, double target, double rel) { return std::abs(value / target - 1) <= rel; }

void echo_common(RunReport& r, const ExperimentConfig& c) {
  r.inputs.push_back({"seed", std::to_string(c.seed)});
  r.inputs.push_back({"levels", std::to_string(c.levels)});
  r.inputs.push_back({"iterations", std::to_string(c.iterations)});
  r.inputs.push_back({"step", fmt(c.step)});
}

Table history_table(const std::string& file, const mesh::OptimizeResult& res) {
  Table t;
  t.file = file;
  t.comment = "columns: iter = sweep index (0 is the start mesh), ratio = sys^2/area, area, systole (Z2 homology, edge metric with chords)";
  t.columns = {"iter", "ratio", "area", "systole"};
  for (const auto& h : res.history) {
    t.rows.push_back({std::to_string(h.sweep), fmt(h.ratio), fmt(h.area), fmt(h.systole)});
  }
  return t;
}

mesh::OptimizeOptions optimizer_options(const ExperimentConfig& c) {
  mesh::OptimizeOptions o;
  o.iterations = c.iterations;
  o.step = c.step;
  o.seed = c.seed;
  o.levels = c.levels;
  o.path.chord_points = 1;
  return o;
}

double max_history_ratio(const mesh::OptimizeResult& res) {
  double m = 0;
  for (const auto& h : res.history) m = std::max(m, h.ratio);
  return m;
}

RunReport run_pu(const ExperimentConfig& c) {
  RunReport r;
  r.experiment = "pu";
  echo_common(r, c);
  r.inputs.push_back({"start", "rp2-geodesic-2 (round metric, icosahedral quotient, frequency 2)"});
  r.inputs.push_back({"chord_points", "1"});

  const auto start = mesh::builtin::by_name("rp2-geodesic-2");
  const auto res = mesh::optimize_ratio(start, optimizer_options(c));
  const double final_ratio = res.report.ratio;
  const double peak = max_history_ratio(res);

  r.verdicts.push_back({"optimized RP^2 ratio", fmt(final_ratio), within(kPu, 0.05),
                        "Pu's inequality, pi/2", close_rel(final_ratio, kPu, 0.05)});
  r.verdicts.push_back({"largest certified ratio", fmt(peak), "<= " + fmt(kPu * 1.05),
                        "Pu's inequality with 5% discretization tolerance", peak <= kPu * 1.05});
  const auto round = mesh::systolic_ratio(mesh::builtin::rp2_round(), 3);
  r.verdicts.push_back({"round RP^2 mesh at levels 3", fmt(round.ratio), within(kPu, 0.10),
                        "Pu's inequality, pi/2 (round metric is extremal)", close_rel(round.ratio, kPu, 0.10)});
  r.notes.push_back("initial ratio " + fmt(res.initial_ratio) + ", sweeps run " +
                    std::to_string(res.history.size() - 1) + (res.converged ? " (converged)" : ""));
  r.notes.push_back("systole is the Z2 homology systole; " + res.report.pisys1_label);
  r.citations.push_back("Pu: every metric on RP^2 satisfies sys^2 <= (pi/2) area, with equality for the round metric");
  r.tables.push_back(history_table("pu.csv", res));
  return r;
}

RunReport run_loewner(const ExperimentConfig& c) {
  RunReport r;
  r.experiment = "loewner";
  echo_common(r, c);
  r.inputs.push_back({"start", "torus7 with lengths uniform in [0.8, 1.2]"});
  r.inputs.push_back({"chord_points", "1"});
  r.inputs.push_back({"perturbations", std::to_string(c.perturbations)});

  // Target from the lattice module: the hexagonal lattice realizes gamma_2.
  const auto hex = lattice::hexagonal();
  const double hex_len = lattice::shortest_vector(hex).length;
  const double target = hex_len * hex_len / lattice::covolume(hex);

  const auto start = mesh::builtin::with_random_lengths(mesh::builtin::torus7(), 0.8, 1.2, c.seed);
  const auto res = mesh::optimize_ratio(start, optimizer_options(c));
  const double final_ratio = res.report.ratio;
  r.verdicts.push_back({"optimized torus ratio", fmt(final_ratio), within(target, 0.05),
                        "hexagonal lattice sys^2/covolume from the lattice module", close_rel(final_ratio, target, 0.05)});
  const double peak = max_history_ratio(res);
  r.verdicts.push_back({"largest ratio along the run", fmt(peak), "<= " + fmt(target * 1.05),
                        "Loewner's bound with 5% tolerance", peak <= target * 1.05});

  // Random perturbations of the optimized metric.
  const mesh::RatioEvaluator eval(res.mesh, c.levels, {6, 1});
  const auto& base = res.mesh.lengths();
  std::vector<double> ratios(static_cast<std::size_t>(c.perturbations));
  parallel_for(c.perturbations, c.threads, [&](int i) {
    Rng rng = stream(c.seed, 1, static_cast<std::uint64_t>(i));
    std::vector<double> lengths(base.size());
    do {
      for (std::size_t e = 0; e < base.size(); ++e) lengths[e] = base[e] * uniform(rng, 0.8, 1.2);
    } while (!mesh::satisfies_triangle_inequalities(*res.mesh.topology(), lengths));
    ratios[i] = eval.evaluate(lengths).ratio;
  });
  const double worst = ratios.empty() ? 0.0 : *std::max_element(ratios.begin(), ratios.end());
  const auto over = std::count_if(ratios.begin(), ratios.end(), [&](double x) { return x > target * 1.05; });
  r.verdicts.push_back({"perturbed metrics above 2/sqrt(3) * 1.05", std::to_string(over) + " (max ratio " + fmt(worst) + ")",
                        "0", "Loewner's bound with 5% tolerance", over == 0});
  r.notes.push_back("initial ratio " + fmt(res.initial_ratio) + ", sweeps run " +
                    std::to_string(res.history.size() - 1) + (res.converged ? " (converged)" : ""));
  r.citations.push_back("Loewner: every metric on T^2 satisfies sys^2 <= (2/sqrt(3)) area, equality for the hexagonal torus");
  r.tables.push_back(history_table("loewner.csv", res));
  Table p;
  p.file = "loewner_perturbations.csv";
  p.comment = "columns: index of the random perturbation (edge factors uniform in [0.8, 1.2]), ratio = sys^2/area";
  p.columns = {"index", "ratio"};
  for (int i = 0; i < c.perturbations; ++i) p.rows.push_back({std::to_string(i), fmt(ratios[i])});
  r.tables.push_back(std::move(p));
  return r;
}

RunReport run_lattice_sweep(const ExperimentConfig& c) {
  RunReport r;
  r.experiment = "lattice-sweep";
  r.inputs.push_back({"seed", std::to_string(c.seed)});
  r.inputs.push_back({"samples per rank", std::to_string(c.samples)});

  const auto hex = lattice::check_eq75(lattice::hexagonal());
  const double hex_rel = std::abs(hex.lhs / hex.rhs - 1);
  r.verdicts.push_back({"hexagonal lattice lhs/rhs", fmt(hex.lhs / hex.rhs, 17), "1 to 1e-9 relative",
                        "equality case of the Hermite bound in rank 2", hex_rel <= 1e-9});
  const auto d4 = lattice::d4();
  const double d4_len = lattice::shortest_vector(d4).length;
  const double gamma4 = d4_len * d4_len / std::sqrt(lattice::covolume(d4));
  r.verdicts.push_back({"D4 Hermite invariant", fmt(gamma4, 17), fmt(std::sqrt(2.0), 17) + " to 1e-9 relative",
                        "gamma_4 = sqrt(2), attained by D4", close_rel(gamma4, std::sqrt(2.0), 1e-9)});

  Table t;
  t.file = "lattice_sweep.csv";
  t.comment = "columns: rank, samples, violations of sys^b <= gamma_b^(b/2) covol, largest lhs/rhs seen";
  t.columns = {"rank", "samples", "violations", "max_ratio"};
  for (int b = 1; b <= 4; ++b) {
    std::vector<double> q(static_cast<std::size_t>(c.samples));
    std::vector<char> ok(static_cast<std::size_t>(c.samples));
    parallel_for(c.samples, c.threads, [&](int i) {
      Rng rng = stream(c.seed, 10 + b, static_cast<std::uint64_t>(i));
      const auto rep = lattice::check_eq75(lattice::random_lattice(b, rng));
      q[i] = rep.lhs / rep.rhs;
      ok[i] = rep.holds;
    });
    const auto bad = std::count(ok.begin(), ok.end(), 0);
    const double mx = q.empty() ? 0.0 : *std::max_element(q.begin(), q.end());
    t.rows.push_back({std::to_string(b), std::to_string(c.samples), std::to_string(bad), fmt(mx, 15)});
    r.verdicts.push_back({"rank " + std::to_string(b) + " violations", std::to_string(bad), "0",
                          "systolic inequality for flat tori, Abel-Jacobi degree 1", bad == 0});
  }
  r.citations.push_back("flat b-tori: stsys_1^b <= gamma_b^(b/2) vol_b, with equality for the critical lattices");
  r.tables.push_back(std::move(t));
  return r;
}

cdga::Polynomial random_combination(const cdga::FreeCDGA& a, const std::vector<cdga::Polynomial>& basis, Rng& rng) {
  cdga::Polynomial out;
  for (const auto& b : basis) {
    out = a.add(out, a.scale(cdga::Scalar(static_cast<long>(uniform_int(rng, -5, 5))), b));
  }
  return out;
}

RunReport run_massey(const ExperimentConfig& c) {
  using namespace cdga;
  RunReport r;
  r.experiment = "massey-demo";
  r.inputs.push_back({"seed", std::to_string(c.seed)});
  r.inputs.push_back({"trials", std::to_string(c.massey_trials)});

  Table t;
  t.file = "massey.csv";
  t.comment = "columns: model, trial, cochain of <x4, x4, x6> for a random primitive choice, same coset as the basic choice (1/0)";
  t.columns = {"model", "trial", "cochain", "same_coset"};

  const FreeCDGA su6 = su6_model();
  const FreeCDGA su6t = parse_cdga(
      "cdga v1\ncap 20\ngen x4 : 4\ngen x6 : 6\ngen y7 : 7\ngen y9 : 9\ngen y11 : 11\ngen t3 : 3\n"
      "d y7 = x4^2\nd y9 = x4*x6\nd y11 = x6^2\n");
  bool first = true;
  for (const auto* model : {&su6, &su6t}) {
    const std::string label = first ? "su6" : "su6 + t3";
    Cohomology h(*model);
    const auto& a = h.algebra();
    const auto u = h.basis_class(4, 0), w = h.basis_class(6, 0);
    const auto base = massey_triple(h, u, u, w);
    if (first) {
      const auto expected = a.parse_polynomial("y7*x6 - x4*y9");
      CohClass diff = h.class_of(expected, 13);
      for (std::size_t i = 0; i < diff.coords.size(); ++i) diff.coords[i] -= base.representative.coords[i];
      r.verdicts.push_back({"<[x4],[x4],[x6]> in su6", base.nontrivial ? "nontrivial" : "trivial", "nontrivial",
                            "nontrivial Massey product of the M19 model", base.nontrivial});
      r.verdicts.push_back({"representative", a.format(base.cochain), "cohomologous to y7*x6 - x4*y9 modulo indeterminacy",
                            "the cochain y7 x6 - x4 y9", h.in_span(diff, base.indeterminacy)});
    }
    int same = 0;
    Rng rng = stream(c.seed, first ? 21 : 22, 0);
    const auto z7 = cocycles(a, 7);
    const auto z9 = cocycles(a, 9);
    for (int trial = 0; trial < c.massey_trials; ++trial) {
      const Polynomial x = a.add(base.x, random_combination(a, z7, rng));
      const Polynomial y = a.add(base.y, random_combination(a, z9, rng));
      const auto other = massey_triple(h, u, u, w, x, y);
      CohClass diff = other.representative;
      for (std::size_t i = 0; i < diff.coords.size(); ++i) diff.coords[i] -= base.representative.coords[i];
      const bool in = h.in_span(diff, base.indeterminacy) && other.nontrivial == base.nontrivial;
      same += in;
      t.rows.push_back({label, std::to_string(trial), a.format(other.cochain), in ? "1" : "0"});
    }
    r.verdicts.push_back({"primitive re-choices in the same coset (" + label + ")",
                          std::to_string(same) + "/" + std::to_string(c.massey_trials), "all",
                          "Massey products are well defined modulo indeterminacy", same == c.massey_trials});
    first = false;
  }

  const auto e = toomer_e0(su6, 19);
  const auto stated_witness = su6.parse_polynomial("x4^2*y11 - x4*x6*y9");
  Cohomology h(su6);
  const bool same_class = h.class_of(e.witness, 19) == h.class_of(stated_witness, 19);
  r.verdicts.push_back({"Toomer invariant e0(su6)", std::to_string(e.e0) + ", witness " + su6.format(e.witness), "3",
                        "rational category of M19 equals 3", e.e0 == 3 && same_class});
  for (int n = 1; n <= 4; ++n) {
    const auto cp = cp_model(n);
    const int e0 = toomer_e0(cp, 2 * n).e0;
    r.verdicts.push_back({"e0(cp " + std::to_string(n) + ")", std::to_string(e0), std::to_string(n),
                          "rational category of CP^n", e0 == n});
  }
  const int cl = cup_length(cp_model(3));
  r.verdicts.push_back({"cup_length(cp 3)", std::to_string(cl), "3", "cup-length of CP^3", cl == 3});
  for (int n = 1; n <= 4; ++n) {
    const int tl = cup_length(torus_model(n));
    r.verdicts.push_back({"cup_length(torus " + std::to_string(n) + ")", std::to_string(tl), std::to_string(n),
                          "cup-length of T^n", tl == n});
  }
  const auto spec = bounds::massey_inequality_spec(19, 4, 6);
  r.notes.push_back(spec.statement);
  r.citations.push_back("<[x4],[x4],[x6]> is a nontrivial Massey product in the minimal model of M19");
  r.citations.push_back("e0 of the M19 model is 3, with top class x4^2 y11 - x4 x6 y9");
  r.tables.push_back(std::move(t));
  return r;
}

struct SuiteCase {
  std::string text;
  std::optional<bounds::Interval> cat;
  std::optional<bounds::Interval> syscat;
  std::optional<int> conjectural;
  std::optional<int> iq;
};

std::vector<SuiteCase> builtin_suite() {
  using I = bounds::Interval;
  return {
      {"name: RP^3\ndim: 3\norientable: yes\npi1: other\nbetti_Q: 1 0 0 1\n", I{3, 3}, I{3, 3}, {}, {}},
      {"name: S^2\ndim: 2\norientable: yes\npi1: trivial\nbetti_Q: 1 0 1\n", I{1, 1}, I{1, 1}, {}, {}},
      {"name: T^2\ndim: 2\norientable: yes\npi1: other\nbetti_Q: 1 2 1\n", I{2, 2}, I{2, 2}, {}, {}},
      {"name: genus 2\ndim: 2\norientable: yes\npi1: other\nbetti_Q: 1 4 1\n", I{2, 2}, I{2, 2}, {}, {}},
      {"name: RP^2\ndim: 2\norientable: no\npi1: other\nbetti_Q: 1 0 0\n", I{2, 2}, I{2, 2}, {}, {}},
      {"name: Klein bottle\ndim: 2\norientable: no\npi1: other\nbetti_Q: 1 1 0\n", I{2, 2}, I{2, 2}, {}, {}},
      {"name: S^1 x S^2\ndim: 3\norientable: yes\npi1: free(1)\nbetti_Q: 1 1 1 1\n", I{2, 2}, I{2, 2}, {}, {}},
      {"name: S^1 x S^2 # S^1 x S^2\ndim: 3\norientable: yes\npi1: free(2)\nbetti_Q: 1 2 2 1\n", I{2, 2}, I{2, 2}, {}, {}},
      {"name: non-orientable S^2-bundle over S^1\ndim: 3\norientable: no\npi1: free(1)\nbetti_Q: 1 1 0 0\n", I{2, 2},
       I{1, 2}, {}, {}},
      {"name: S^2 x S^2\ndim: 4\norientable: yes\npi1: trivial\nbetti_Q: 1 0 2 0 1\nis_homotopy_sphere: no\n"
       "cuplength_R: 2\n",
       I{2, 2}, {}, {}, {}},
      {"name: CP^2\ndim: 4\norientable: yes\npi1: trivial\nbetti_Q: 1 0 1 0 1\nis_homotopy_sphere: no\ncuplength_R: 2\n",
       I{2, 2}, {}, {}, {}},
      {"name: S^2 x S^3\ndim: 5\norientable: yes\npi1: trivial\nbetti_Q: 1 0 1 1 0 1\nis_homotopy_sphere: no\n", I{2, 2},
       {}, {}, {}},
      {"name: Smale M_k\ndim: 5\norientable: yes\npi1: trivial\nbetti_Q: 1 0 0 0 0 1\nis_homotopy_sphere: no\n"
       "cuplength_any: 2\n",
       I{2, 2}, I{1, 4}, 2, {}},
      {"name: M^19\ndim: 19\norientable: yes\npi1: trivial\nbetti_Q: 1 0 0 0 1 0 1 0 0 0 0 0 0 1 0 1 0 0 0 1\n"
       "connectivity_k: 4\ncuplength_R: 2\ncuplength_any: 3\ntoomer_e0: 3\nmassey_nontrivial: yes\n",
       I{3, 4}, {}, {}, 3},
      {"name: RP^2 x S^2\ndim: 4\norientable: no\npi1: other\nbetti_Q: 1 0 1 0 0\ncuplength_any: 3\n", {}, {}, 3, {}},
      {"name: RP^2 x S^3\ndim: 5\norientable: no\npi1: other\nbetti_Q: 1 0 0 1 0 0\ncuplength_any: 3\n", {}, {}, 3, {}},
  };
}

std::string interval_text(int lo, int hi) { return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]"; }

std::string rule_ids(const bounds::BoundInterval& b) {
  std::vector<std::string> seen;
  std::string s;
  for (const auto& t : b.trace) {
    if (std::find(seen.begin(), seen.end(), t.rule) != seen.end()) continue;
    seen.push_back(t.rule);
    s += (s.empty() ? "" : ";") + t.rule;
  }
  return s;
}

RunReport run_bounds_suite(const ExperimentConfig& c) {
  RunReport r;
  r.experiment = "bounds-suite";
  r.inputs.push_back({"input", c.input.empty() ? "built-in suite" : c.input.string()});
  r.inputs.push_back({"conjectures", c.conjectures ? "on" : "off"});

  std::vector<SuiteCase> cases;
  if (c.input.empty()) {
    cases = builtin_suite();
  } else {
    for (const auto& d : bounds::load_descriptor_file(c.input)) cases.push_back({bounds::to_text(d), {}, {}, {}, {}});
  }

  Table t;
  t.file = "bounds.csv";
  t.comment = "columns: descriptor name, certified cat and syscat intervals, conjectural syscat lower bound (conjecture mode), "
              "IQ-modified syscat lower bound, rule ids that contributed";
  t.columns = {"name", "cat_lo", "cat_hi", "syscat_lo", "syscat_hi", "conjectural_lo", "iq_lower", "cat_rules",
               "syscat_rules"};
  for (const auto& sc : cases) {
    const auto d = bounds::parse_descriptor(sc.text);
    const auto off = bounds::joint_bounds(d, false);
    const auto on = bounds::joint_bounds(d, true);
    const auto iq = bounds::iq_modified_syscat_lower(d);
    const auto& shown = c.conjectures ? on : off;
    t.rows.push_back({d.name, std::to_string(shown.cat.lo), std::to_string(shown.cat.hi), std::to_string(shown.syscat.lo),
                      std::to_string(shown.syscat.hi),
                      shown.syscat.conjectural_lo ? std::to_string(*shown.syscat.conjectural_lo) : "",
                      iq ? std::to_string(iq->value) : "", rule_ids(shown.cat), rule_ids(shown.syscat)});
    if (sc.cat) {
      r.verdicts.push_back({d.name + " cat", interval_text(off.cat.lo, off.cat.hi), interval_text(sc.cat->lo, sc.cat->hi),
                            "stated value", off.cat.lo == sc.cat->lo && off.cat.hi == sc.cat->hi});
    }
    if (sc.syscat) {
      r.verdicts.push_back({d.name + " syscat", interval_text(off.syscat.lo, off.syscat.hi),
                            interval_text(sc.syscat->lo, sc.syscat->hi), "stated value",
                            off.syscat.lo == sc.syscat->lo && off.syscat.hi == sc.syscat->hi});
    }
    if (sc.iq) {
      r.verdicts.push_back({d.name + " IQ-modified syscat lower bound", iq ? std::to_string(iq->value) : "none",
                            std::to_string(*sc.iq), "4 systole factors minus 1 IQ factor", iq && iq->value == *sc.iq});
    }
    if (sc.conjectural) {
      const bool hidden = !off.syscat.conjectural_lo && off.syscat.conjectural_trace.empty();
      const bool shown_on = on.syscat.conjectural_lo && *on.syscat.conjectural_lo == *sc.conjectural;
      r.verdicts.push_back({d.name + " conjectural syscat lower bound",
                            "off: " + std::string(hidden ? "none" : "present") + ", on: " +
                                (on.syscat.conjectural_lo ? std::to_string(*on.syscat.conjectural_lo) : "none"),
                            "off: none, on: " + std::to_string(*sc.conjectural), "conjecture, flag-gated",
                            hidden && shown_on});
    }
    if (!off.syscat.conjectural_trace.empty() || off.syscat.conjectural_lo) {
      r.verdicts.push_back({d.name + " conjecture isolation", "conjectural output without the flag", "none",
                            "conjectures only under the flag", false});
    }
  }
  r.citations.push_back("every trace entry carries the result it rests on; run `syscat-lab bounds` for the full trace");
  r.tables.push_back(std::move(t));
  return r;
}

}  // namespace

std::vector<std::string> experiment_names() { return {"pu", "loewner", "lattice-sweep", "massey-demo", "bounds-suite"}; }

RunReport run_experiment(const ExperimentConfig& c) {
  if (c.levels < 0 || c.levels > 6) throw ConfigError("levels must be in 0..6");
  if (c.iterations < 0) throw ConfigError("iterations must be non-negative");
  if (!(c.step > 0 && c.step < 1)) throw ConfigError("step must be in (0, 1)");
  if (c.samples < 1 || c.perturbations < 0 || c.massey_trials < 0) throw ConfigError("sample counts must be positive");
  if (c.threads < 1) throw ConfigError("threads must be positive");
  ExperimentConfig cfg = c;
  cfg.threads = thread_cap(c.threads);
  RunReport r;
  if (c.experiment == "pu") {
    r = run_pu(cfg);
  } else if (c.experiment == "loewner") {
    r = run_loewner(cfg);
  } else if (c.experiment == "lattice-sweep") {
    r = run_lattice_sweep(cfg);
  } else if (c.experiment == "massey-demo") {
    r = run_massey(cfg);
  } else if (c.experiment == "bounds-suite") {
    r = run_bounds_suite(cfg);
  } else {
    throw ConfigError("unknown experiment '" + c.experiment + "'");
  }
  if (!c.output_dir.empty()) emit_report(r, Format::csv, c.output_dir);
  return r;
}

}  // namespace syscat::lab
