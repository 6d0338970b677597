#include <algorithm>
#include <cmath>

#include "mesh_internal.hpp"

namespace syscat::mesh::detail {

namespace {

PathGraph compress(int vertex_count, std::vector<std::vector<Arc>>& lists) {
  PathGraph g;
  g.node_count = static_cast<int>(lists.size());
  g.vertex_count = vertex_count;
  g.offsets.reserve(lists.size() + 1);
  g.offsets.push_back(0);
  for (auto& list : lists) {
    std::sort(list.begin(), list.end(), [](const Arc& a, const Arc& b) {
      if (a.to != b.to) return a.to < b.to;
      if (a.weight != b.weight) return a.weight < b.weight;
      return a.sig < b.sig;
    });
    g.arcs.insert(g.arcs.end(), list.begin(), list.end());
    g.offsets.push_back(static_cast<int>(g.arcs.size()));
  }
  return g;
}

void link(std::vector<std::vector<Arc>>& lists, int a, int b, double w, Z2Class sig) {
  lists[a].push_back({b, w, sig});
  lists[b].push_back({a, w, sig});
}

}  // namespace

PathGraph edge_graph(const Topology& topo, std::span<const double> lengths, std::span<const Z2Class> sig) {
  std::vector<std::vector<Arc>> lists(static_cast<std::size_t>(topo.vertex_count()));
  const auto& edges = topo.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) link(lists, edges[e].u, edges[e].v, lengths[e], sig[e]);
  return compress(topo.vertex_count(), lists);
}

PathGraph chord_graph(const Topology& topo, std::span<const double> lengths, std::span<const Z2Class> sig,
                      int points) {
  if (points <= 0) return edge_graph(topo, lengths, sig);
  const int n = topo.vertex_count();
  const auto& edges = topo.edges();
  const int m = points;
  const auto node_of = [&](int e, int j) { return n + e * m + j; };
  std::vector<std::vector<Arc>> lists(static_cast<std::size_t>(n) + edges.size() * static_cast<std::size_t>(m));

  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int ei = static_cast<int>(e);
    const double piece = lengths[e] / (m + 1);
    link(lists, edges[e].u, node_of(ei, 0), piece, sig[e]);
    for (int j = 0; j + 1 < m; ++j) link(lists, node_of(ei, j), node_of(ei, j + 1), piece, 0);
    link(lists, node_of(ei, m - 1), edges[e].v, piece, 0);
  }

  struct Point {
    int node;
    double x, y;
    int side;                // -1 for a corner
    std::array<Z2Class, 3> to_corner;  // class of the boundary path to each corner of the side
  };
  std::vector<Point> pts;
  const auto& faces = topo.faces();
  const auto& face_edges = topo.face_edges();
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const Face& face = faces[f];
    const auto& fe = face_edges[f];
    const double a = lengths[fe[0]], b = lengths[fe[1]], c = lengths[fe[2]];
    const double cx = (b * b + c * c - a * a) / (2 * c);
    const double cy = std::sqrt(std::max(b * b - cx * cx, 0.0));
    const std::array<std::array<double, 2>, 3> corner{{{0.0, 0.0}, {c, 0.0}, {cx, cy}}};

    pts.clear();
    for (int k = 0; k < 3; ++k) pts.push_back({face[k], corner[k][0], corner[k][1], -1, {0, 0, 0}});
    for (int k = 0; k < 3; ++k) {
      const int e = fe[k];
      const int p = (k + 1) % 3, q = (k + 2) % 3;
      const int cu = face[p] == edges[e].u ? p : q;
      const int cv = cu == p ? q : p;
      for (int j = 0; j < m; ++j) {
        const double t = static_cast<double>(j + 1) / (m + 1);
        Point pt{node_of(e, j),
                 corner[cu][0] + t * (corner[cv][0] - corner[cu][0]),
                 corner[cu][1] + t * (corner[cv][1] - corner[cu][1]),
                 k,
                 {0, 0, 0}};
        pt.to_corner[cu] = sig[e];
        pts.push_back(pt);
      }
    }

    const auto dist = [](const Point& s, const Point& t) { return std::hypot(s.x - t.x, s.y - t.y); };
    for (int k = 0; k < 3; ++k) {
      // corner k to the points on the opposite side, via corner k+1
      const int via = (k + 1) % 3;
      const Z2Class first = sig[fe[(k + 2) % 3]];
      for (std::size_t i = 3; i < pts.size(); ++i) {
        if (pts[i].side != k) continue;
        link(lists, pts[k].node, pts[i].node, dist(pts[k], pts[i]), first ^ pts[i].to_corner[via]);
      }
    }
    for (std::size_t i = 3; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        if (pts[i].side == pts[j].side) continue;
        const int shared = 3 - pts[i].side - pts[j].side;
        link(lists, pts[i].node, pts[j].node, dist(pts[i], pts[j]),
             pts[i].to_corner[shared] ^ pts[j].to_corner[shared]);
      }
    }
  }
  return compress(n, lists);
}

}  // namespace syscat::mesh::detail
