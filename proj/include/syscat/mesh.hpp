#pragma once

// Closed triangulated surfaces with piecewise-flat metrics: loading, area,
// Z2 homology, exact edge-metric 1-systoles and systolic-ratio optimization.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "syscat/error.hpp"

namespace syscat::mesh {

using Face = std::array<int, 3>;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A Z2 homology class as a bit vector; bit i is the coefficient of basis class i.
using Z2Class = std::uint64_t;

/// Lengths keyed by the ordered pair (min(u,v), max(u,v)).
using EdgeLengthMap = std::map<std::pair<int, int>, double>;

/// Combinatorial data of a closed connected surface triangulation. Shared
/// between meshes that differ only in their edge lengths.
class Topology {
 public:
  /// Validates the closed-surface conditions and derives the invariants.
  /// Throws NotClosedSurface or Disconnected.
  Topology(int vertex_count, std::vector<Face> faces);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// face_edges()[f][k] is the edge of face f opposite its corner k.
  const std::vector<std::array<int, 3>>& face_edges() const { return face_edges_; }
  const std::vector<std::array<int, 2>>& edge_faces() const { return edge_faces_; }

  /// Index of the edge joining u and v, or -1.
  int edge_index(int u, int v) const;

  bool orientable() const { return orientable_; }
  int euler_characteristic() const { return euler_; }
  int z2_betti1() const { return 2 - euler_; }

 private:
  int vertex_count_ = 0;
  std::vector<Face> faces_;
  std::vector<Edge> edges_;
  std::vector<std::array<int, 3>> face_edges_;
  std::vector<std::array<int, 2>> edge_faces_;
  std::vector<std::vector<std::pair<int, int>>> neighbours_;  // (vertex, edge), sorted
  bool orientable_ = true;
  int euler_ = 0;
};

/// Closed triangulated surface with a positive length on every edge.
/// Immutable; copies share the topology.
class TriMesh {
 public:
  /// Throws NotClosedSurface, Disconnected, ParseError (missing or surplus
  /// lengths) or TriangleInequalityViolated.
  static TriMesh create(int vertex_count, std::vector<Face> faces, const EdgeLengthMap& lengths);
  static TriMesh uniform(int vertex_count, std::vector<Face> faces, double length = 1.0);
  /// Lengths indexed like topo->edges(); throws TriangleInequalityViolated.
  static TriMesh create(std::shared_ptr<const Topology> topo, std::vector<double> lengths);

  /// Same triangulation with new per-edge lengths (indexed like edges()).
  TriMesh with_lengths(std::vector<double> lengths) const;
  /// All lengths multiplied by factor.
  TriMesh scaled(double factor) const;

  int vertex_count() const { return topo_->vertex_count(); }
  const std::vector<Face>& faces() const { return topo_->faces(); }
  const std::vector<Edge>& edges() const { return topo_->edges(); }
  int edge_index(int u, int v) const { return topo_->edge_index(u, v); }
  const std::vector<double>& lengths() const { return lengths_; }
  double length(int edge) const { return lengths_[static_cast<std::size_t>(edge)]; }
  /// Length of the edge u-v; throws std::out_of_range when absent.
  double length_between(int u, int v) const;

  bool orientable() const { return topo_->orientable(); }
  int euler_characteristic() const { return topo_->euler_characteristic(); }
  int z2_betti1() const { return topo_->z2_betti1(); }

  const std::shared_ptr<const Topology>& topology() const { return topo_; }

 private:
  TriMesh(std::shared_ptr<const Topology> topo, std::vector<double> lengths);

  std::shared_ptr<const Topology> topo_;
  std::vector<double> lengths_;
};

/// True when each face strictly satisfies the triangle inequality.
bool satisfies_triangle_inequalities(const Topology& topo, std::span<const double> lengths);

// ---------------------------------------------------------------------------
// File format

/// Parses the `systole-mesh v1` text format.
TriMesh load_mesh(std::string_view text);
TriMesh load_mesh_file(const std::string& path);
/// Serializes in the format accepted by load_mesh, lengths to round-trip precision.
std::string write_mesh(const TriMesh& mesh, std::string_view comment = {});

// ---------------------------------------------------------------------------
// Measurements

/// Sum of Heron areas of the faces.
double area(const TriMesh& mesh);

struct Z2HomologyBasis {
  int rank = 0;
  std::vector<int> tree_edges;       ///< spanning tree of the 1-skeleton
  std::vector<int> cotree_edges;     ///< edges dual to a spanning tree of the dual graph
  std::vector<int> generator_edges;  ///< the remaining `rank` edges, one per basis class
  /// signature[e] is the class contribution of edge e; a closed edge path
  /// has class equal to the XOR of its edges' signatures.
  std::vector<Z2Class> signature;
};

/// Tree-cotree decomposition. Throws CoverTooLarge when the rank exceeds 64.
Z2HomologyBasis z2_homology_basis(const TriMesh& mesh);

/// XOR of edge signatures along a closed vertex path (closing edge implied).
Z2Class cycle_class(const TriMesh& mesh, const Z2HomologyBasis& basis, std::span<const int> cycle);

struct LoopResult {
  /// Closed edge path; the edge from the last vertex back to the first is implied.
  std::vector<int> cycle;
  double length = 0.0;
  Z2Class witness = 0;
};

struct SystoleOptions {
  int b1_cap = 6;
};

/// Shortest closed edge path with nonzero Z2 homology class, exact in the
/// edge metric. Ties go to the lexicographically smallest vertex sequence,
/// starting at its smallest vertex.
/// Throws NoNontrivialClass or CoverTooLarge.
LoopResult systole_h1z2(const TriMesh& mesh, const SystoleOptions& options = {});

/// Midpoint subdivision, `levels` times; the flat metric is preserved exactly.
TriMesh subdivide(const TriMesh& mesh, int levels);

/// Controls the path graph used when measuring the ratio.
struct PathOptions {
  int b1_cap = 6;
  /// With zero, loops are edge paths of the subdivided mesh. With m > 0,
  /// every edge of the input mesh is cut into 2^levels (m+1) equal pieces and
  /// loops may cross each input face along the straight segment between any two
  /// of its boundary points. Those are actual curves of the flat metric, so
  /// lengths stay certified upper bounds, and they contain all paths of the
  /// subdivided mesh.
  int chord_points = 0;
};

struct SystoleReport {
  double area = 0.0;
  double sysh1_z2 = 0.0;
  /// Same number as sysh1_z2. An upper bound on the homotopy systole of the
  /// piecewise-flat metric, and equal to the discrete homotopy systole when
  /// b1 <= 2 (sphere, torus, projective plane, Klein bottle).
  double pisys1_upper = 0.0;
  double ratio = 0.0;
  int refinement_level = 0;
  int chord_points = 0;
  std::string pisys1_label;
};

/// Subdivides `levels` times and reports area, systole and sys^2/area.
SystoleReport systolic_ratio(const TriMesh& mesh, int levels, const PathOptions& options = {});

/// Repeated ratio evaluation for one triangulation with varying lengths.
class RatioEvaluator {
 public:
  RatioEvaluator(const TriMesh& base, int levels, PathOptions options);
  ~RatioEvaluator();
  RatioEvaluator(RatioEvaluator&&) noexcept;
  RatioEvaluator& operator=(RatioEvaluator&&) noexcept;

  /// Report for the base triangulation with the given base edge lengths.
  SystoleReport evaluate(std::span<const double> base_lengths) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct OptimizeOptions {
  int iterations = 500;  ///< maximum number of sweeps
  double step = 0.02;    ///< multiplicative perturbation size
  std::uint64_t seed = 0;
  int levels = 0;
  PathOptions path;
};

struct SweepRecord {
  int sweep = 0;
  double ratio = 0.0;
  double area = 0.0;
  double systole = 0.0;
  int accepted = 0;
};

struct OptimizeResult {
  TriMesh mesh;
  SystoleReport report;
  double initial_ratio = 0.0;
  /// Entry 0 is the starting mesh, then one entry per sweep run.
  std::vector<SweepRecord> history;
  /// True when a full sweep accepted nothing, so further sweeps cannot change the mesh.
  bool converged = false;
};

/// Coordinate ascent on edge lengths. Each sweep visits the edges in a seeded
/// order and tries the factors (1+step) and (1-step); a change is kept only if
/// the ratio strictly increases and the faces stay non-degenerate. Lengths are
/// rescaled to unit area after every sweep.
/// Throws StepTooLarge when no perturbation of the start mesh is feasible.
OptimizeResult optimize_ratio(const TriMesh& mesh, const OptimizeOptions& options);

}  // namespace syscat::mesh
