#pragma once

// Small reference triangulations used by the experiments and the test corpus.

#include <cstdint>
#include <string>
#include <vector>

#include "syscat/mesh.hpp"

namespace syscat::mesh::builtin {

TriMesh tetrahedron(double length = 1.0);
TriMesh octahedron(double length = 1.0);
TriMesh icosahedron(double length = 1.0);
/// Suspension of a k-gon (k >= 3), all lengths equal.
TriMesh bipyramid(int k, double length = 1.0);

/// Minimal 7-vertex torus: the triangular lattice modulo an index-7
/// sublattice. With unit lengths it is the flat hexagonal torus.
TriMesh torus7(double length = 1.0);
/// p x q grid of squares, each cut along the same diagonal (p, q >= 3).
TriMesh grid_torus(int p, int q, double length = 1.0);
/// Six-vertex projective plane, the antipodal quotient of the icosahedron.
TriMesh rp2_6(double length = 1.0);
/// rp2_6 with every edge set to the round great-circle length arccos(1/sqrt 5).
TriMesh rp2_round();
/// Antipodal quotient of the icosahedron with every face split into
/// frequency^2 triangles, vertices on the unit sphere and edge lengths equal
/// to great-circle arcs. frequency 1 gives rp2_round up to relabelling.
TriMesh rp2_geodesic(int frequency);
/// p x q grid whose second direction closes up with a reflection. Throws when
/// the identification does not give a simplicial Klein bottle.
TriMesh klein_grid(int p, int q, double length = 1.0);

/// Cones face f off to a new vertex placed at the centroid of the flat
/// triangle; the metric is unchanged.
TriMesh stellar_subdivide(const TriMesh& mesh, int face);

/// Every edge length drawn uniformly from [lo, hi].
TriMesh with_random_lengths(const TriMesh& mesh, double lo, double hi, std::uint64_t seed);

/// Names accepted by by_name: tetrahedron, octahedron, icosahedron, torus7,
/// rp2, rp2-round, rp2-geodesic-2, klein-3x4.
TriMesh by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace syscat::mesh::builtin
