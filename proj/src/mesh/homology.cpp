#include <queue>

#include "mesh_internal.hpp"

namespace syscat::mesh {

namespace detail {

Z2HomologyBasis homology_basis(const Topology& topo) {
  const int n = topo.vertex_count();
  const auto& edges = topo.edges();
  const auto& face_edges = topo.face_edges();
  const auto& edge_faces = topo.edge_faces();
  const std::size_t m = edges.size();

  Z2HomologyBasis basis;
  basis.rank = topo.z2_betti1();
  if (basis.rank > 64) {
    throw CoverTooLarge("z2 rank " + std::to_string(basis.rank) + " does not fit in 64 bits");
  }

  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < m; ++e) {
    adj[edges[e].u].emplace_back(edges[e].v, static_cast<int>(e));
    adj[edges[e].v].emplace_back(edges[e].u, static_cast<int>(e));
  }

  enum Kind : char { kNone, kTree, kCotree, kGenerator };
  std::vector<char> kind(m, kNone);

  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop();
    for (auto [y, e] : adj[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      kind[e] = kTree;
      basis.tree_edges.push_back(e);
      queue.push(y);
    }
  }

  // Dual BFS across non-tree edges; parent_edge[f] links f to its parent.
  const std::size_t faces = face_edges.size();
  std::vector<int> parent_edge(faces, -1);
  std::vector<int> order;
  std::vector<char> reached(faces, 0);
  std::queue<int> fq;
  fq.push(0);
  reached[0] = 1;
  while (!fq.empty()) {
    int f = fq.front();
    fq.pop();
    order.push_back(f);
    for (int e : face_edges[f]) {
      if (kind[e] != kNone) continue;
      int g = edge_faces[e][0] == f ? edge_faces[e][1] : edge_faces[e][0];
      if (reached[g]) continue;
      reached[g] = 1;
      kind[e] = kCotree;
      parent_edge[g] = e;
      basis.cotree_edges.push_back(e);
      fq.push(g);
    }
  }

  basis.signature.assign(m, 0);
  int bit = 0;
  for (std::size_t e = 0; e < m; ++e) {
    if (kind[e] != kNone) continue;
    kind[e] = kGenerator;
    basis.generator_edges.push_back(static_cast<int>(e));
    basis.signature[e] = Z2Class{1} << bit++;
  }

  // Leaves first: each face boundary must sum to zero.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int f = *it;
    int pe = parent_edge[f];
    if (pe < 0) continue;
    Z2Class sum = 0;
    for (int e : face_edges[f]) {
      if (e != pe) sum ^= basis.signature[e];
    }
    basis.signature[pe] = sum;
  }
  return basis;
}

}  // namespace detail

Z2HomologyBasis z2_homology_basis(const TriMesh& mesh) { return detail::homology_basis(*mesh.topology()); }

Z2Class cycle_class(const TriMesh& mesh, const Z2HomologyBasis& basis, std::span<const int> cycle) {
  Z2Class cls = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    int a = cycle[i];
    int b = cycle[(i + 1) % cycle.size()];
    int e = mesh.edge_index(a, b);
    if (e < 0) {
      throw std::invalid_argument("cycle_class: no edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    cls ^= basis.signature[e];
  }
  return cls;
}

}  // namespace syscat::mesh
