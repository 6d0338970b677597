#pragma once

#include <span>
#include <vector>

#include "syscat/mesh.hpp"

namespace syscat::mesh::detail {

double triangle_area(double a, double b, double c);

struct Arc {
  int to = 0;
  double weight = 0.0;
  Z2Class sig = 0;
};

/// Undirected weighted graph with Z2 arc labels, in CSR form. Nodes below
/// vertex_count are mesh vertices; arcs of a node are sorted by target.
struct PathGraph {
  int node_count = 0;
  int vertex_count = 0;
  std::vector<int> offsets;
  std::vector<Arc> arcs;

  std::span<const Arc> out(int node) const {
    return {arcs.data() + offsets[node], arcs.data() + offsets[node + 1]};
  }
};

/// Signatures of the edges of topo, independent of lengths.
Z2HomologyBasis homology_basis(const Topology& topo);

/// The 1-skeleton.
PathGraph edge_graph(const Topology& topo, std::span<const double> lengths, std::span<const Z2Class> sig);

/// The 1-skeleton with `points` interior nodes on every edge and straight
/// chords across each face between boundary nodes on different sides.
PathGraph chord_graph(const Topology& topo, std::span<const double> lengths, std::span<const Z2Class> sig,
                      int points);

/// Length of the shortest closed walk with nonzero class; infinity if none.
double shortest_nontrivial_length(const PathGraph& g, int rank);

struct Cycle {
  std::vector<int> nodes;
  double length = 0.0;
  Z2Class cls = 0;
};

/// Lexicographically least shortest nontrivial cycle, starting at its
/// smallest node. `length` must come from shortest_nontrivial_length.
Cycle canonical_cycle(const PathGraph& g, int rank, double length);

}  // namespace syscat::mesh::detail
