#include <cmath>
#include <numeric>

#include "mesh_internal.hpp"
#include "syscat/random.hpp"

namespace syscat::mesh {

namespace {

double base_area(const Topology& topo, std::span<const double> lengths) {
  double total = 0.0;
  for (const auto& fe : topo.face_edges()) {
    total += detail::triangle_area(lengths[fe[0]], lengths[fe[1]], lengths[fe[2]]);
  }
  return total;
}

void normalize(const Topology& topo, std::vector<double>& lengths) {
  const double s = 1.0 / std::sqrt(base_area(topo, lengths));
  for (double& x : lengths) x *= s;
}

}  // namespace

OptimizeResult optimize_ratio(const TriMesh& mesh, const OptimizeOptions& options) {
  if (options.iterations < 1) throw std::invalid_argument("optimize_ratio: iterations must be positive");
  if (!(options.step > 0.0 && options.step < 1.0)) {
    throw StepTooLarge("step must lie in (0, 1), got " + std::to_string(options.step));
  }
  const Topology& topo = *mesh.topology();
  RatioEvaluator eval(mesh, options.levels, options.path);
  const std::array<double, 2> factors{1.0 + options.step, 1.0 - options.step};

  std::vector<double> lengths = mesh.lengths();
  normalize(topo, lengths);

  bool feasible = false;
  std::vector<double> trial = lengths;
  for (std::size_t e = 0; e < lengths.size() && !feasible; ++e) {
    for (double f : factors) {
      trial[e] = lengths[e] * f;
      feasible = feasible || satisfies_triangle_inequalities(topo, trial);
    }
    trial[e] = lengths[e];
  }
  if (!feasible) {
    throw StepTooLarge("no single-edge change by a factor 1 +/- " + std::to_string(options.step) +
                       " keeps every face non-degenerate");
  }

  SystoleReport cur = eval.evaluate(lengths);
  OptimizeResult result{mesh, cur, cur.ratio, {}, false};
  result.history.push_back({0, cur.ratio, cur.area, cur.sysh1_z2, 0});

  Rng rng(options.seed);
  std::vector<int> order(lengths.size());
  std::iota(order.begin(), order.end(), 0);
  for (int sweep = 1; sweep <= options.iterations; ++sweep) {
    shuffle(order, rng);
    int accepted = 0;
    for (int e : order) {
      for (double f : factors) {
        trial[e] = lengths[e] * f;
        if (!satisfies_triangle_inequalities(topo, trial)) continue;
        SystoleReport r = eval.evaluate(trial);
        if (r.ratio > cur.ratio * (1 + 1e-12)) {
          lengths[e] = trial[e];
          cur = r;
          ++accepted;
          break;
        }
      }
      trial[e] = lengths[e];
    }
    if (accepted > 0) {
      normalize(topo, lengths);
      trial = lengths;
      cur = eval.evaluate(lengths);
    }
    result.history.push_back({sweep, cur.ratio, cur.area, cur.sysh1_z2, accepted});
    if (accepted == 0) {
      result.converged = true;
      break;
    }
  }
  result.mesh = mesh.with_lengths(lengths);
  result.report = cur;
  return result;
}

}  // namespace syscat::mesh
