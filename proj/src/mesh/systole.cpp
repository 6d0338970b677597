#include <cmath>
#include <limits>

#include "mesh_internal.hpp"

namespace syscat::mesh {

namespace {

void check_rank(int rank, int cap) {
  if (rank == 0) throw NoNontrivialClass("the surface is a sphere, H1(Z2) = 0");
  if (rank > cap) {
    throw CoverTooLarge("z2 rank " + std::to_string(rank) + " exceeds the cap " + std::to_string(cap) + " (" +
                        std::to_string(1L << std::min(rank, 62)) + " sheets)");
  }
}

struct Refinement {
  std::shared_ptr<const Topology> topo;
  std::vector<int> parent;  // base edge whose length, halved per level, gives this edge
};

Refinement refine(const std::shared_ptr<const Topology>& base, int levels) {
  Refinement r{base, {}};
  r.parent.resize(base->edges().size());
  for (std::size_t e = 0; e < r.parent.size(); ++e) r.parent[e] = static_cast<int>(e);
  for (int level = 0; level < levels; ++level) {
    const Topology& t = *r.topo;
    const int n = t.vertex_count();
    const auto mid = [&](int a, int b) { return n + t.edge_index(a, b); };
    std::vector<Face> faces;
    faces.reserve(t.faces().size() * 4);
    for (const Face& f : t.faces()) {
      const int a = f[0], b = f[1], c = f[2];
      const int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
      faces.push_back({a, ab, ca});
      faces.push_back({ab, b, bc});
      faces.push_back({ca, bc, c});
      faces.push_back({ab, bc, ca});
    }
    auto next = std::make_shared<const Topology>(n + static_cast<int>(t.edges().size()), std::move(faces));
    std::vector<int> parent(next->edges().size(), -1);
    for (std::size_t e = 0; e < t.edges().size(); ++e) {
      const Edge& edge = t.edges()[e];
      const int m = n + static_cast<int>(e);
      parent[next->edge_index(edge.u, m)] = r.parent[e];
      parent[next->edge_index(m, edge.v)] = r.parent[e];
    }
    for (std::size_t f = 0; f < t.faces().size(); ++f) {
      const Face& face = t.faces()[f];
      for (int k = 0; k < 3; ++k) {
        // The midpoint segment opposite corner k is parallel to side k.
        const int p = mid(face[k], face[(k + 1) % 3]);
        const int q = mid(face[k], face[(k + 2) % 3]);
        parent[next->edge_index(p, q)] = r.parent[t.face_edges()[f][k]];
      }
    }
    r.topo = std::move(next);
    r.parent = std::move(parent);
  }
  return r;
}

std::vector<double> refined_lengths(const Refinement& r, std::span<const double> base, int levels) {
  const double scale = std::ldexp(1.0, -levels);
  std::vector<double> out(r.parent.size());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = base[r.parent[e]] * scale;
  return out;
}

std::string pisys1_label(int rank) {
  return rank <= 2 ? "equals the discrete homotopy systole" : "upper bound on pisys1";
}

}  // namespace

LoopResult systole_h1z2(const TriMesh& mesh, const SystoleOptions& options) {
  const int rank = mesh.z2_betti1();
  check_rank(rank, options.b1_cap);
  auto basis = z2_homology_basis(mesh);
  auto graph = detail::edge_graph(*mesh.topology(), mesh.lengths(), basis.signature);
  const double length = detail::shortest_nontrivial_length(graph, rank);
  auto cycle = detail::canonical_cycle(graph, rank, length);
  return {std::move(cycle.nodes), cycle.length, cycle.cls};
}

TriMesh subdivide(const TriMesh& mesh, int levels) {
  if (levels < 0) throw std::invalid_argument("subdivide: negative level count");
  auto r = refine(mesh.topology(), levels);
  return TriMesh::create(r.topo, refined_lengths(r, mesh.lengths(), levels));
}

struct RatioEvaluator::Impl {
  int levels = 0;
  PathOptions options;
  int rank = 0;
  std::shared_ptr<const Topology> base;
  Refinement refinement;
  std::vector<Z2Class> signature;
};

RatioEvaluator::RatioEvaluator(const TriMesh& base, int levels, PathOptions options)
    : impl_(std::make_unique<Impl>()) {
  if (levels < 0) throw std::invalid_argument("negative refinement level");
  if (options.chord_points < 0) throw std::invalid_argument("negative chord point count");
  impl_->levels = levels;
  impl_->options = options;
  impl_->rank = base.z2_betti1();
  impl_->base = base.topology();
  check_rank(impl_->rank, options.b1_cap);
  if (options.chord_points > 0) {
    impl_->signature = detail::homology_basis(*impl_->base).signature;
  } else {
    impl_->refinement = refine(base.topology(), levels);
    impl_->signature = detail::homology_basis(*impl_->refinement.topo).signature;
  }
}

RatioEvaluator::~RatioEvaluator() = default;
RatioEvaluator::RatioEvaluator(RatioEvaluator&&) noexcept = default;
RatioEvaluator& RatioEvaluator::operator=(RatioEvaluator&&) noexcept = default;

SystoleReport RatioEvaluator::evaluate(std::span<const double> base_lengths) const {
  const Impl& s = *impl_;
  detail::PathGraph graph;
  if (s.options.chord_points > 0) {
    // Boundary points of every base face: the 2^levels (m+1) equal pieces of each edge.
    const int points = (s.options.chord_points + 1) * (1 << s.levels) - 1;
    graph = detail::chord_graph(*s.base, base_lengths, s.signature, points);
  } else {
    auto lengths = refined_lengths(s.refinement, base_lengths, s.levels);
    graph = detail::edge_graph(*s.refinement.topo, lengths, s.signature);
  }
  SystoleReport report;
  for (const auto& fe : s.base->face_edges()) {
    report.area += detail::triangle_area(base_lengths[fe[0]], base_lengths[fe[1]], base_lengths[fe[2]]);
  }
  report.sysh1_z2 = detail::shortest_nontrivial_length(graph, s.rank);
  report.pisys1_upper = report.sysh1_z2;
  report.ratio = report.sysh1_z2 * report.sysh1_z2 / report.area;
  report.refinement_level = s.levels;
  report.chord_points = s.options.chord_points;
  report.pisys1_label = pisys1_label(s.rank);
  return report;
}

SystoleReport systolic_ratio(const TriMesh& mesh, int levels, const PathOptions& options) {
  RatioEvaluator eval(mesh, levels, options);
  return eval.evaluate(mesh.lengths());
}

}  // namespace syscat::mesh
