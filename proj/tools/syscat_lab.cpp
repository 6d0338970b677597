// syscat-lab: command-line front end for the mesh, lattice, algebra and bounds engines.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "syscat/bounds.hpp"
#include "syscat/cdga.hpp"
#include "syscat/lab.hpp"
#include "syscat/lattice.hpp"
#include "syscat/mesh.hpp"
#include "syscat/mesh_builtin.hpp"

using namespace syscat;

namespace {

struct Options {
  // shared
  std::uint64_t seed = 7;
  std::string out;
  std::string format = "text";
  bool parallel = false;
  // mesh
  std::string mesh_input;
  int levels = 0;
  int chords = 0;
  int b1_cap = 6;
  bool optimize = false;
  int iterations = 500;
  double step = 0.02;
  // lattice
  std::string lattice_input;
  // algebra
  std::string algebra_input;
  int top = -1;
  std::vector<int> massey;  // degree/index pairs for u, v, w
  // bounds
  std::string bounds_file;
  bool conjectures = false;
  // constants
  int n = 19, p1 = 4, p2 = 6;
  // known
  std::string known_name;
  // experiment
  std::string experiment;
  int samples = 10000;
  int perturbations = 1000;
  int trials = 100;
  std::string input;
};

void print_interval(std::ostream& out, const char* label, const bounds::BoundInterval& b) {
  out << label << ": [" << b.lo << ", " << b.hi << "]\n";
  for (const auto& t : b.trace) {
    out << "  " << t.rule << "  " << t.bound << " " << t.value << "  " << t.citation << "\n";
  }
  if (b.conjectural_lo) {
    out << "  conjectural lower bound: " << *b.conjectural_lo << "\n";
    for (const auto& t : b.conjectural_trace) {
      out << "    " << t.rule << "  " << t.bound << " " << t.value << "  " << t.citation << "\n";
    }
  }
}

bool file_exists(const std::string& s) {
  std::error_code ec;
  return std::filesystem::is_regular_file(s, ec);
}

int cmd_mesh(const Options& o) {
  const mesh::TriMesh m = file_exists(o.mesh_input) ? mesh::load_mesh_file(o.mesh_input) : mesh::builtin::by_name(o.mesh_input);
  std::cout << "vertices: " << m.vertex_count() << "\nedges: " << m.edges().size() << "\nfaces: " << m.faces().size()
            << "\neuler: " << m.euler_characteristic() << "\norientable: " << (m.orientable() ? "yes" : "no")
            << "\nz2_betti1: " << m.z2_betti1() << "\narea: " << lab::fmt(mesh::area(m)) << "\n";
  if (m.z2_betti1() == 0) {
    std::cout << "systole: none (every loop bounds)\n";
    return 0;
  }
  const auto loop = mesh::systole_h1z2(m, {o.b1_cap});
  std::cout << "sysh1_z2 (edge paths of the input mesh): " << lab::fmt(loop.length) << "\ncycle:";
  for (int v : loop.cycle) std::cout << " " << v;
  std::cout << "\n";
  const auto rep = mesh::systolic_ratio(m, o.levels, {o.b1_cap, o.chords});
  std::cout << "levels: " << rep.refinement_level << "\nchord_points: " << rep.chord_points
            << "\nsysh1_z2: " << lab::fmt(rep.sysh1_z2) << "\npisys1_upper: " << lab::fmt(rep.pisys1_upper) << " ("
            << rep.pisys1_label << ")\nratio: " << lab::fmt(rep.ratio) << "\n";
  if (o.optimize) {
    mesh::OptimizeOptions opt;
    opt.iterations = o.iterations;
    opt.step = o.step;
    opt.seed = o.seed;
    opt.levels = o.levels;
    opt.path = {o.b1_cap, o.chords};
    const auto res = mesh::optimize_ratio(m, opt);
    std::cout << "optimized_ratio: " << lab::fmt(res.report.ratio) << "\nsweeps: " << res.history.size() - 1
              << (res.converged ? " (converged)" : "") << "\n";
    if (!o.out.empty()) {
      std::filesystem::create_directories(o.out);
      const auto path = std::filesystem::path(o.out) / "optimized.mesh";
      std::ofstream f(path);
      if (!f) throw IoError("cannot write " + path.string());
      f << mesh::write_mesh(res.mesh, "optimized by syscat-lab");
      std::cout << "wrote " << path.string() << "\n";
    }
  }
  return 0;
}

lattice::Lattice named_lattice(const std::string& s) {
  if (file_exists(s)) return lattice::load_lattice_file(s);
  if (s == "hexagonal") return lattice::hexagonal();
  if (s == "d4") return lattice::d4();
  if (s.size() == 2 && s[0] == 'z' && s[1] >= '1' && s[1] <= '4') return lattice::integer_lattice(s[1] - '0');
  throw UnknownName("lattice '" + s + "' is neither a file nor one of hexagonal, d4, z1..z4");
}

int cmd_lattice(const Options& o) {
  const auto lat = named_lattice(o.lattice_input);
  const auto sv = lattice::shortest_vector(lat);
  std::cout << "rank: " << lat.rank() << "\ncovolume: " << lab::fmt(lattice::covolume(lat), 15)
            << "\nshortest_length: " << lab::fmt(sv.length, 15) << "\nshortest_coeffs:";
  for (auto c : sv.coeffs) std::cout << " " << c;
  std::cout << "\n";
  if (lat.rank() <= 4) {
    const auto r = lattice::check_eq75(lat);
    std::cout << "hermite_constant: " << lab::fmt(lattice::hermite_constant(lat.rank()), 15)
              << "\nlhs (sys^b): " << lab::fmt(r.lhs, 15) << "\nrhs (gamma_b^(b/2) covol): " << lab::fmt(r.rhs, 15)
              << "\nholds: " << (r.holds ? "yes" : "no") << "\nequality: " << (r.equality ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_algebra(const Options& o) {
  const cdga::FreeCDGA a =
      file_exists(o.algebra_input) ? cdga::load_cdga_file(o.algebra_input) : cdga::builtin_model(o.algebra_input);
  std::cout << a.to_text();
  std::cout << "field: " << a.field().name() << "\ncohomology dimensions:";
  cdga::Cohomology h(a);
  for (int k = 0; k < a.degree_cap(); ++k) std::cout << " " << h.dimension(k);
  std::cout << "\n";
  try {
    const int cl = cdga::cup_length(a);
    std::cout << "cup_length: " << cl << "\n";
  } catch (const CapExceeded& e) {
    std::cout << "cup_length: not determined below the cap (" << e.what() << ")\n";
  }
  if (o.top >= 0) {
    const auto t = cdga::toomer_e0(a, o.top);
    std::cout << "toomer_e0: " << t.e0 << "\ntoomer_witness: " << a.format(t.witness) << "\n";
  }
  if (!o.massey.empty()) {
    if (o.massey.size() != 6) throw ConfigError("--massey takes six integers: degree index for u, v and w");
    const auto u = h.basis_class(o.massey[0], o.massey[1]);
    const auto v = h.basis_class(o.massey[2], o.massey[3]);
    const auto w = h.basis_class(o.massey[4], o.massey[5]);
    const auto m = cdga::massey_triple(h, u, v, w);
    std::cout << "massey_degree: " << m.degree << "\nmassey_cochain: " << a.format(m.cochain)
              << "\nmassey_indeterminacy_rank: " << m.indeterminacy.size()
              << "\nmassey_nontrivial: " << (m.nontrivial ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_bounds(const Options& o) {
  for (const auto& d : bounds::load_descriptor_file(o.bounds_file)) {
    const auto jb = bounds::joint_bounds(d, o.conjectures);
    const auto iq = bounds::iq_modified_syscat_lower(d);
    std::cout << "== " << (d.name.empty() ? "(unnamed)" : d.name) << " (dim " << d.dim << ")\n";
    print_interval(std::cout, "cat", jb.cat);
    print_interval(std::cout, "syscat", jb.syscat);
    if (iq) std::cout << "IQ-modified syscat >= " << iq->value << "  " << iq->citation << "\n";
    std::cout << "-- key:value\n"
              << "name: " << d.name << "\ncat_lo: " << jb.cat.lo << "\ncat_hi: " << jb.cat.hi
              << "\nsyscat_lo: " << jb.syscat.lo << "\nsyscat_hi: " << jb.syscat.hi << "\n";
    if (jb.syscat.conjectural_lo) std::cout << "syscat_conjectural_lo: " << *jb.syscat.conjectural_lo << "\n";
    if (iq) std::cout << "iq_syscat_lo: " << iq->value << "\n";
    std::cout << "\n";
  }
  return 0;
}

int cmd_constants(const Options& o) {
  const auto s = bounds::massey_inequality_spec(o.n, o.p1, o.p2);
  std::cout << s.statement << "\nn: " << s.n << "\np1: " << s.p1 << "\np2: " << s.p2 << "\np3: " << s.p3
            << "\nA1: " << s.a1.get_str() << "\nA2: " << s.a2.get_str() << "\nA1+A2: " << s.constant().get_str()
            << "\nn!: " << s.n_factorial.get_str()
            << "\nA1+A2 <= n!: " << (s.constant() <= mpq_class(s.n_factorial) ? "yes" : "no") << "\n";
  return 0;
}

void print_optional_interval(const char* label, const std::optional<bounds::Interval>& i) {
  if (!i) return;
  std::cout << "  " << label << ": ";
  if (i->lo == i->hi) {
    std::cout << i->lo << "\n";
  } else {
    std::cout << "[" << i->lo << ", " << i->hi << "]\n";
  }
}

int cmd_known(const Options& o) {
  if (o.known_name.empty()) {
    for (const auto& n : bounds::known_names()) std::cout << n << "\n";
    return 0;
  }
  const auto k = bounds::lookup_known(o.known_name);
  std::cout << k.name << ": " << k.title << "\n";
  for (const auto& v : k.variants) {
    std::cout << v.label << "\n";
    print_optional_interval("cat", v.cat);
    print_optional_interval("syscat", v.syscat);
  }
  if (k.stable_syscat) std::cout << "stable syscat: " << *k.stable_syscat << "\n";
  if (k.rational_cat) std::cout << "rational cat: " << *k.rational_cat << "\n";
  if (k.iq_syscat_lower) std::cout << "IQ-modified syscat >= " << *k.iq_syscat_lower << "\n";
  std::cout << "citations:\n";
  for (const auto& c : k.citations) std::cout << "  - " << c << "\n";
  return 0;
}

int cmd_experiment(const Options& o) {
  lab::ExperimentConfig cfg;
  cfg.experiment = o.experiment;
  cfg.seed = o.seed;
  cfg.levels = o.levels;
  cfg.iterations = o.iterations;
  cfg.step = o.step;
  cfg.samples = o.samples;
  cfg.perturbations = o.perturbations;
  cfg.massey_trials = o.trials;
  cfg.input = o.input;
  cfg.conjectures = o.conjectures;
  cfg.threads = o.parallel ? static_cast<int>(std::max(1u, std::thread::hardware_concurrency())) : 1;
  const auto format = lab::parse_format(o.format);
  const auto report = lab::run_experiment(cfg);
  std::cout << lab::render_text(report);
  if (!o.out.empty()) {
    for (const auto& p : lab::emit_report(report, format, o.out)) std::cout << "wrote " << p.string() << "\n";
    if (format == lab::Format::text) {
      for (const auto& p : lab::emit_report(report, lab::Format::csv, o.out)) std::cout << "wrote " << p.string() << "\n";
    }
  }
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"syscat-lab: systolic and Lusternik-Schnirelmann category experiments"};
  app.require_subcommand(1);
  Options o;

  auto* mesh_cmd = app.add_subcommand("mesh", "systole and systolic ratio of a surface mesh");
  mesh_cmd->add_option("input", o.mesh_input, "mesh file or built-in name")->required();
  mesh_cmd->add_option("--levels", o.levels, "midpoint subdivision levels")->check(CLI::Range(0, 6));
  mesh_cmd->add_option("--chords", o.chords, "chord points per subdivided edge (0: edge paths)")->check(CLI::Range(0, 8));
  mesh_cmd->add_option("--b1-cap", o.b1_cap, "largest Z2 Betti number searched")->check(CLI::Range(1, 20));
  mesh_cmd->add_flag("--optimize", o.optimize, "run the coordinate-ascent optimizer");
  mesh_cmd->add_option("--iterations", o.iterations, "optimizer sweeps");
  mesh_cmd->add_option("--step", o.step, "optimizer multiplicative step");
  mesh_cmd->add_option("--seed", o.seed, "optimizer seed");
  mesh_cmd->add_option("--out", o.out, "directory for the optimized mesh");

  auto* lat_cmd = app.add_subcommand("lattice", "shortest vector and the flat-torus inequality");
  lat_cmd->add_option("input", o.lattice_input, "lattice file or hexagonal, d4, z1..z4")->required();

  auto* alg_cmd = app.add_subcommand("algebra", "cohomology, cup-length, Toomer invariant and Massey products");
  alg_cmd->add_option("input", o.algebra_input, "cdga file or built-in model (su6, cp N, torus N)")->required();
  alg_cmd->add_option("--top", o.top, "top degree for the Toomer invariant");
  alg_cmd->add_option("--massey", o.massey, "degree index pairs of u, v, w")->expected(6);

  auto* bounds_cmd = app.add_subcommand("bounds", "certified cat and syscat intervals for descriptors");
  bounds_cmd->add_option("--file", o.bounds_file, "descriptor file")->required()->check(CLI::ExistingFile);
  bounds_cmd->add_flag("--conjectures", o.conjectures, "also report conjectural lower bounds");

  auto* const_cmd = app.add_subcommand("constants", "inequality constants");
  auto* massey_const = const_cmd->add_subcommand("massey", "constants A1, A2 of the Massey-product inequality");
  const_cmd->require_subcommand(1);
  massey_const->add_option("--n", o.n, "dimension");
  massey_const->add_option("--p1", o.p1, "degree p1");
  massey_const->add_option("--p2", o.p2, "degree p2");

  auto* known_cmd = app.add_subcommand("known", "stated values for known manifolds");
  known_cmd->add_option("name", o.known_name, "rp3, surfaces, cpn, singhof-m16, m19, smale-mk (empty: list)");

  auto* exp_cmd = app.add_subcommand("experiment", "run a reproducible experiment");
  exp_cmd->add_option("name", o.experiment, "pu, loewner, lattice-sweep, massey-demo, bounds-suite")->required();
  exp_cmd->add_option("--seed", o.seed, "seed");
  exp_cmd->add_option("--levels", o.levels, "subdivision levels (default 2)");
  exp_cmd->add_option("--iterations", o.iterations, "optimizer sweeps");
  exp_cmd->add_option("--step", o.step, "optimizer step");
  exp_cmd->add_option("--samples", o.samples, "lattice-sweep samples per rank");
  exp_cmd->add_option("--perturbations", o.perturbations, "loewner random perturbations");
  exp_cmd->add_option("--trials", o.trials, "massey-demo primitive re-choices");
  exp_cmd->add_option("--input", o.input, "bounds-suite descriptor file")->check(CLI::ExistingFile);
  exp_cmd->add_flag("--conjectures", o.conjectures, "bounds-suite: show conjectural bounds");
  exp_cmd->add_option("--out", o.out, "output directory");
  exp_cmd->add_option("--format", o.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  exp_cmd->add_flag("--parallel", o.parallel, "run samples on several threads (capped by SYSCAT_LAB_THREADS)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (mesh_cmd->parsed()) return cmd_mesh(o);
    if (lat_cmd->parsed()) return cmd_lattice(o);
    if (alg_cmd->parsed()) return cmd_algebra(o);
    if (bounds_cmd->parsed()) return cmd_bounds(o);
    if (const_cmd->parsed()) return cmd_constants(o);
    if (known_cmd->parsed()) return cmd_known(o);
    if (exp_cmd->parsed()) {
      if (!exp_cmd->count("--levels")) o.levels = 2;
      return cmd_experiment(o);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
