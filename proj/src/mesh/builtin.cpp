#include "syscat/mesh_builtin.hpp"

#include <array>
#include <cmath>
#include <map>
#include <set>
#include <algorithm>

#include "syscat/random.hpp"

namespace syscat::mesh::builtin {

TriMesh tetrahedron(double length) {
  return TriMesh::uniform(4, {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}}, length);
}

TriMesh bipyramid(int k, double length) {
  if (k < 3) throw std::invalid_argument("bipyramid needs k >= 3");
  std::vector<Face> faces;
  const int north = k, south = k + 1;
  for (int i = 0; i < k; ++i) {
    faces.push_back({north, i, (i + 1) % k});
    faces.push_back({south, (i + 1) % k, i});
  }
  return TriMesh::uniform(k + 2, std::move(faces), length);
}

TriMesh octahedron(double length) { return bipyramid(4, length); }

TriMesh icosahedron(double length) {
  std::vector<Face> faces;
  const auto up = [](int k) { return 1 + (k % 5); };
  const auto low = [](int k) { return 6 + (k % 5); };
  for (int k = 0; k < 5; ++k) {
    faces.push_back({0, up(k), up(k + 1)});
    faces.push_back({up(k), low(k), up(k + 1)});
    faces.push_back({up(k + 1), low(k), low(k + 1)});
    faces.push_back({11, low(k + 1), low(k)});
  }
  return TriMesh::uniform(12, std::move(faces), length);
}

TriMesh torus7(double length) {
  std::vector<Face> faces;
  for (int v = 0; v < 7; ++v) {
    faces.push_back({v, (v + 1) % 7, (v + 3) % 7});
    faces.push_back({(v + 1) % 7, (v + 4) % 7, (v + 3) % 7});
  }
  return TriMesh::uniform(7, std::move(faces), length);
}

TriMesh grid_torus(int p, int q, double length) {
  if (p < 3 || q < 3) throw std::invalid_argument("grid_torus needs p, q >= 3");
  std::vector<Face> faces;
  const auto id = [&](int i, int j) { return (i % p) + p * (j % q); };
  for (int j = 0; j < q; ++j) {
    for (int i = 0; i < p; ++i) {
      faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      faces.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return TriMesh::uniform(p * q, std::move(faces), length);
}

TriMesh rp2_6(double length) {
  return TriMesh::uniform(6,
                          {{0, 1, 2},
                           {0, 2, 3},
                           {0, 3, 4},
                           {0, 4, 5},
                           {0, 5, 1},
                           {1, 2, 4},
                           {2, 3, 5},
                           {3, 4, 1},
                           {4, 5, 2},
                           {5, 1, 3}},
                          length);
}

TriMesh rp2_round() { return rp2_6(std::acos(1.0 / std::sqrt(5.0))); }

TriMesh rp2_geodesic(int frequency) {
  if (frequency < 1) throw std::invalid_argument("rp2_geodesic needs frequency >= 1");
  using P = std::array<double, 3>;
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<P> ico;
  for (double a : {-1.0, 1.0}) {
    for (double b : {-phi, phi}) {
      ico.push_back({0, a, b});
      ico.push_back({a, b, 0});
      ico.push_back({b, 0, a});
    }
  }
  const auto d2 = [](const P& x, const P& y) {
    return (x[0] - y[0]) * (x[0] - y[0]) + (x[1] - y[1]) * (x[1] - y[1]) + (x[2] - y[2]) * (x[2] - y[2]);
  };
  const auto unit = [](P x) {
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    return P{x[0] / r, x[1] / r, x[2] / r};
  };

  // Sphere points, deduplicated on rounded coordinates; antipodes share a label.
  std::vector<P> points;
  std::map<std::array<long long, 3>, int> index;
  const auto key = [](const P& x) {
    return std::array<long long, 3>{std::llround(x[0] * 1e9), std::llround(x[1] * 1e9), std::llround(x[2] * 1e9)};
  };
  const auto point_id = [&](const P& x) {
    auto [it, fresh] = index.emplace(key(x), static_cast<int>(points.size()));
    if (fresh) points.push_back(x);
    return it->second;
  };
  std::vector<std::array<int, 3>> sphere_faces;
  const int f = frequency;
  for (std::size_t i = 0; i < ico.size(); ++i) {
    for (std::size_t j = i + 1; j < ico.size(); ++j) {
      for (std::size_t k = j + 1; k < ico.size(); ++k) {
        if (std::abs(d2(ico[i], ico[j]) - 4) > 1e-9 || std::abs(d2(ico[j], ico[k]) - 4) > 1e-9 ||
            std::abs(d2(ico[i], ico[k]) - 4) > 1e-9) {
          continue;
        }
        const P &A = ico[i], &B = ico[j], &C = ico[k];
        const auto at = [&](int s, int t) {
          P x;
          for (int c = 0; c < 3; ++c) x[c] = ((f - s - t) * A[c] + s * B[c] + t * C[c]) / f;
          return point_id(unit(x));
        };
        for (int s = 0; s < f; ++s) {
          for (int t = 0; s + t < f; ++t) {
            sphere_faces.push_back({at(s, t), at(s + 1, t), at(s, t + 1)});
            if (s + t + 1 < f) sphere_faces.push_back({at(s + 1, t), at(s + 1, t + 1), at(s, t + 1)});
          }
        }
      }
    }
  }

  std::vector<int> label(points.size(), -1);
  int count = 0;
  for (std::size_t v = 0; v < points.size(); ++v) {
    if (label[v] >= 0) continue;
    const P& x = points[v];
    const int w = index.at(key(P{-x[0], -x[1], -x[2]}));
    label[v] = label[w] = count++;
  }
  std::vector<Face> faces;
  std::set<Face> seen;
  EdgeLengthMap lengths;
  for (const auto& sf : sphere_faces) {
    Face face{label[sf[0]], label[sf[1]], label[sf[2]]};
    Face sorted = face;
    std::sort(sorted.begin(), sorted.end());
    if (!seen.insert(sorted).second) continue;
    faces.push_back(face);
    for (int k = 0; k < 3; ++k) {
      const P& x = points[sf[k]];
      const P& y = points[sf[(k + 1) % 3]];
      const double chord = std::sqrt(d2(x, y));
      const int a = std::min(face[k], face[(k + 1) % 3]), b = std::max(face[k], face[(k + 1) % 3]);
      lengths[{a, b}] = 2 * std::asin(chord / 2);
    }
  }
  return TriMesh::create(count, std::move(faces), lengths);
}

TriMesh klein_grid(int p, int q, double length) {
  if (p < 3 || q < 3) throw std::invalid_argument("klein_grid needs p, q >= 3");
  const auto id = [&](int i, int j) {
    i = ((i % p) + p) % p;
    if (j == q) return ((p - i) % p);
    return i + p * j;
  };
  std::vector<Face> faces;
  for (int j = 0; j < q; ++j) {
    for (int i = 0; i < p; ++i) {
      faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      faces.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  TriMesh mesh = TriMesh::uniform(p * q, std::move(faces), length);
  if (mesh.orientable() || mesh.euler_characteristic() != 0) {
    throw NotClosedSurface("klein_grid " + std::to_string(p) + "x" + std::to_string(q) +
                           " is not a Klein bottle");
  }
  return mesh;
}

TriMesh stellar_subdivide(const TriMesh& mesh, int face) {
  const auto& faces = mesh.faces();
  if (face < 0 || face >= static_cast<int>(faces.size())) throw std::out_of_range("no such face");
  const int n = mesh.vertex_count();
  const Face& f = faces[face];
  EdgeLengthMap lengths;
  for (std::size_t e = 0; e < mesh.edges().size(); ++e) {
    lengths[{mesh.edges()[e].u, mesh.edges()[e].v}] = mesh.lengths()[e];
  }
  const auto& fe = mesh.topology()->face_edges()[face];
  for (int k = 0; k < 3; ++k) {
    // Median length: the centroid sits two thirds of the way along it.
    const double a = mesh.length(fe[k]);
    const double b = mesh.length(fe[(k + 1) % 3]);
    const double c = mesh.length(fe[(k + 2) % 3]);
    lengths[{f[k], n}] = std::sqrt(std::max(2 * b * b + 2 * c * c - a * a, 0.0)) / 3.0;
  }
  std::vector<Face> out;
  for (int g = 0; g < static_cast<int>(faces.size()); ++g) {
    if (g != face) out.push_back(faces[g]);
  }
  out.push_back({f[0], f[1], n});
  out.push_back({f[1], f[2], n});
  out.push_back({f[2], f[0], n});
  return TriMesh::create(n + 1, std::move(out), lengths);
}

TriMesh with_random_lengths(const TriMesh& mesh, double lo, double hi, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> lengths(mesh.edges().size());
  for (double& x : lengths) x = uniform(rng, lo, hi);
  return mesh.with_lengths(std::move(lengths));
}

TriMesh by_name(const std::string& name) {
  if (name == "tetrahedron") return tetrahedron();
  if (name == "octahedron") return octahedron();
  if (name == "icosahedron") return icosahedron();
  if (name == "torus7") return torus7();
  if (name == "rp2") return rp2_6();
  if (name == "rp2-round") return rp2_round();
  if (name == "rp2-geodesic-2") return rp2_geodesic(2);
  if (name == "klein-3x4") return klein_grid(3, 4);
  throw UnknownName("no built-in mesh '" + name + "'");
}

std::vector<std::string> names() {
  return {"tetrahedron", "octahedron", "icosahedron", "torus7", "rp2", "rp2-round", "rp2-geodesic-2", "klein-3x4"};
}

}  // namespace syscat::mesh::builtin
