#include "mesh_oracle.hpp"

#include <bitset>
#include <cmath>
#include <functional>

#include "syscat/mesh_builtin.hpp"

namespace oracle {

using syscat::mesh::TriMesh;

namespace {

using Bits = std::bitset<512>;

// Row echelon basis of the face-boundary space, keyed by leading bit.
std::vector<Bits> boundary_basis(const TriMesh& mesh) {
  const std::size_t m = mesh.edges().size();
  if (m > 512) throw std::runtime_error("oracle limited to 512 edges");
  std::vector<Bits> pivot_rows(m);
  std::vector<char> has(m, 0);
  for (const auto& face : mesh.faces()) {
    Bits row;
    for (int k = 0; k < 3; ++k) row.set(static_cast<std::size_t>(mesh.edge_index(face[k], face[(k + 1) % 3])));
    for (std::size_t b = 0; b < m; ++b) {
      if (!row.test(b)) continue;
      if (has[b]) {
        row ^= pivot_rows[b];
      } else {
        pivot_rows[b] = row;
        has[b] = 1;
        break;
      }
    }
  }
  for (std::size_t b = 0; b < m; ++b) {
    if (!has[b]) pivot_rows[b].reset();
  }
  return pivot_rows;
}

bool in_span(const std::vector<Bits>& basis, Bits v) {
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (v.test(b)) {
      if (!basis[b].test(b)) return false;
      v ^= basis[b];
    }
  }
  return v.none();
}

Bits edge_vector(const TriMesh& mesh, const std::vector<int>& cycle) {
  Bits v;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    int e = mesh.edge_index(cycle[i], cycle[(i + 1) % cycle.size()]);
    if (e < 0) throw std::runtime_error("not an edge path");
    v.flip(static_cast<std::size_t>(e));
  }
  return v;
}

}  // namespace

bool bounds_mod2(const TriMesh& mesh, const std::vector<int>& cycle) {
  return in_span(boundary_basis(mesh), edge_vector(mesh, cycle));
}

std::optional<BruteCycle> brute_force_systole(const TriMesh& mesh) {
  const auto basis = boundary_basis(mesh);
  const int n = mesh.vertex_count();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& e : mesh.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  constexpr double tol = 1e-10;
  std::optional<BruteCycle> best;
  std::vector<int> path;
  std::vector<char> on(static_cast<std::size_t>(n), 0);

  std::function<void(int, double)> dfs = [&](int s, double len) {
    const int u = path.back();
    for (int w : adj[u]) {
      if (w < s) continue;
      const double l = len + mesh.length_between(u, w);
      if (best && l > best->length * (1 + tol)) continue;
      if (w == s) {
        if (path.size() < 3) continue;
        if (in_span(basis, edge_vector(mesh, path))) continue;
        if (!best || l < best->length * (1 - tol)) {
          best = BruteCycle{path, l};
        } else if (path < best->cycle) {
          best->cycle = path;
          best->length = l;
        }
        continue;
      }
      if (on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      dfs(s, l);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on[s] = 1;
    dfs(s, 0.0);
    on[s] = 0;
  }
  return best;
}

std::vector<NamedMesh> small_corpus() {
  namespace b = syscat::mesh::builtin;
  std::vector<NamedMesh> out;
  const auto add = [&](std::string name, std::string surface, TriMesh mesh) {
    out.push_back({std::move(name), std::move(surface), std::move(mesh)});
  };
  add("tetrahedron", "sphere", b::tetrahedron());
  add("octahedron-random", "sphere", b::with_random_lengths(b::octahedron(), 0.8, 1.2, 1));
  add("icosahedron", "sphere", b::icosahedron());
  add("bipyramid5-stellar", "sphere", b::stellar_subdivide(b::bipyramid(5), 0));
  add("torus7", "torus", b::torus7());
  add("torus7-random-1", "torus", b::with_random_lengths(b::torus7(), 0.8, 1.2, 1));
  add("torus7-random-2", "torus", b::with_random_lengths(b::torus7(), 0.8, 1.2, 2));
  add("torus7-random-3", "torus", b::with_random_lengths(b::torus7(), 0.8, 1.2, 3));
  add("torus7-stellar", "torus", b::stellar_subdivide(b::torus7(), 3));
  add("torus7-stellar2-random", "torus",
      b::with_random_lengths(b::stellar_subdivide(b::stellar_subdivide(b::torus7(), 0), 5), 0.8, 1.2, 4));
  add("grid-torus-3x3", "torus", b::grid_torus(3, 3));
  add("grid-torus-3x4-random", "torus", b::with_random_lengths(b::grid_torus(3, 4), 0.8, 1.2, 5));
  add("rp2", "rp2", b::rp2_6());
  add("rp2-round", "rp2", b::rp2_round());
  add("rp2-random-1", "rp2", b::with_random_lengths(b::rp2_6(), 0.8, 1.2, 6));
  add("rp2-random-2", "rp2", b::with_random_lengths(b::rp2_6(), 0.8, 1.2, 7));
  add("rp2-stellar", "rp2", b::stellar_subdivide(b::rp2_6(), 2));
  add("rp2-stellar2-random", "rp2",
      b::with_random_lengths(b::stellar_subdivide(b::stellar_subdivide(b::rp2_6(), 1), 7), 0.8, 1.2, 8));
  add("klein-3x3", "klein", b::klein_grid(3, 3));
  add("klein-3x4", "klein", b::klein_grid(3, 4));
  add("klein-4x3-random", "klein", b::with_random_lengths(b::klein_grid(4, 3), 0.8, 1.2, 9));
  add("klein-3x3-random", "klein", b::with_random_lengths(b::klein_grid(3, 3), 0.8, 1.2, 10));
  add("klein-3x3-stellar", "klein", b::stellar_subdivide(b::klein_grid(3, 3), 4));
  return out;
}

}  // namespace oracle
