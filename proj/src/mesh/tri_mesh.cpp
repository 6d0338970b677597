#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "syscat/mesh.hpp"
#include "mesh_internal.hpp"

namespace syscat::mesh {

namespace {

std::string edge_name(int u, int v) { return std::to_string(u) + "-" + std::to_string(v); }

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace

Topology::Topology(int vertex_count, std::vector<Face> faces)
    : vertex_count_(vertex_count), faces_(std::move(faces)) {
  if (vertex_count_ < 3 || faces_.empty()) {
    throw NotClosedSurface("a closed surface needs at least one face and three vertices");
  }
  std::set<Face> seen;
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const Face& face = faces_[f];
    for (int x : face) {
      if (x < 0 || x >= vertex_count_) {
        throw NotClosedSurface("face " + std::to_string(f) + " uses vertex " + std::to_string(x) +
                               " outside 0.." + std::to_string(vertex_count_ - 1));
      }
    }
    if (face[0] == face[1] || face[1] == face[2] || face[0] == face[2]) {
      throw NotClosedSurface("face " + std::to_string(f) + " repeats a vertex");
    }
    Face key = face;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) {
      throw NotClosedSurface("face " + std::to_string(f) + " appears twice");
    }
  }

  // Edges in lexicographic order.
  for (const Face& face : faces_) {
    for (int k = 0; k < 3; ++k) {
      int a = face[(k + 1) % 3];
      int b = face[(k + 2) % 3];
      edges_.push_back({std::min(a, b), std::max(a, b)});
    }
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& x, const Edge& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  neighbours_.assign(static_cast<std::size_t>(vertex_count_), {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    neighbours_[edges_[e].u].emplace_back(edges_[e].v, static_cast<int>(e));
    neighbours_[edges_[e].v].emplace_back(edges_[e].u, static_cast<int>(e));
  }
  for (auto& list : neighbours_) std::sort(list.begin(), list.end());

  face_edges_.resize(faces_.size());
  edge_faces_.assign(edges_.size(), {-1, -1});
  std::vector<int> face_count(edges_.size(), 0);
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    for (int k = 0; k < 3; ++k) {
      int e = edge_index(faces_[f][(k + 1) % 3], faces_[f][(k + 2) % 3]);
      face_edges_[f][k] = e;
      if (face_count[e] < 2) edge_faces_[e][face_count[e]] = static_cast<int>(f);
      ++face_count[e];
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (face_count[e] != 2) {
      throw NotClosedSurface("edge " + edge_name(edges_[e].u, edges_[e].v) + " lies on " +
                             std::to_string(face_count[e]) + " faces");
    }
  }

  // Every vertex is used and its link is one cycle.
  std::vector<std::vector<int>> faces_at(static_cast<std::size_t>(vertex_count_));
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    for (int x : faces_[f]) faces_at[x].push_back(static_cast<int>(f));
  }
  for (int v = 0; v < vertex_count_; ++v) {
    const auto& around = faces_at[v];
    if (around.empty()) throw NotClosedSurface("vertex " + std::to_string(v) + " is on no face");
    // Walk the link: faces around v are adjacent when they share an edge through v.
    std::vector<char> visited(around.size(), 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int x : faces_[around[i]]) {
        if (x == v) continue;
        int e = edge_index(v, x);
        for (int g : edge_faces_[e]) {
          auto it = std::find(around.begin(), around.end(), g);
          auto j = static_cast<std::size_t>(it - around.begin());
          if (!visited[j]) {
            visited[j] = 1;
            ++reached;
            stack.push_back(static_cast<int>(j));
          }
        }
      }
    }
    if (reached != around.size()) {
      throw NotClosedSurface("link of vertex " + std::to_string(v) + " is not a single cycle");
    }
  }

  // Connectivity.
  std::vector<char> reached(static_cast<std::size_t>(vertex_count_), 0);
  std::vector<int> stack{0};
  reached[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (auto [y, e] : neighbours_[x]) {
      if (!reached[y]) {
        reached[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  if (count != vertex_count_) {
    throw Disconnected(std::to_string(vertex_count_ - count) + " vertices unreachable from vertex 0");
  }

  // Orientability: propagate face orientations across shared edges.
  auto direction = [&](int f, int e) {
    const Face& face = faces_[f];
    for (int k = 0; k < 3; ++k) {
      if (face[k] == edges_[e].u && face[(k + 1) % 3] == edges_[e].v) return 1;
    }
    return -1;
  };
  std::vector<int> sign(faces_.size(), 0);
  sign[0] = 1;
  std::queue<int> queue;
  queue.push(0);
  while (!queue.empty() && orientable_) {
    int f = queue.front();
    queue.pop();
    for (int e : face_edges_[f]) {
      int g = edge_faces_[e][0] == f ? edge_faces_[e][1] : edge_faces_[e][0];
      int want = -sign[f] * direction(f, e) * direction(g, e);
      if (sign[g] == 0) {
        sign[g] = want;
        queue.push(g);
      } else if (sign[g] != want) {
        orientable_ = false;
        break;
      }
    }
  }

  euler_ = vertex_count_ - static_cast<int>(edges_.size()) + static_cast<int>(faces_.size());
}

int Topology::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) return -1;
  const auto& list = neighbours_[u];
  auto it = std::lower_bound(list.begin(), list.end(), std::pair(v, -1));
  if (it == list.end() || it->first != v) return -1;
  return it->second;
}

bool satisfies_triangle_inequalities(const Topology& topo, std::span<const double> lengths) {
  for (const auto& fe : topo.face_edges()) {
    double a = lengths[fe[0]], b = lengths[fe[1]], c = lengths[fe[2]];
    if (!(a < b + c && b < a + c && c < a + b)) return false;
  }
  return true;
}

namespace {

void check_lengths(const Topology& topo, std::span<const double> lengths) {
  for (std::size_t e = 0; e < lengths.size(); ++e) {
    if (!(lengths[e] > 0.0) || !std::isfinite(lengths[e])) {
      const Edge& edge = topo.edges()[e];
      throw TriangleInequalityViolated("edge " + edge_name(edge.u, edge.v) +
                                       " has non-positive length " + format_double(lengths[e]));
    }
  }
  const auto& fe = topo.face_edges();
  for (std::size_t f = 0; f < fe.size(); ++f) {
    double a = lengths[fe[f][0]], b = lengths[fe[f][1]], c = lengths[fe[f][2]];
    if (!(a < b + c && b < a + c && c < a + b)) {
      const Face& face = topo.faces()[f];
      throw TriangleInequalityViolated("face " + std::to_string(f) + " (" + std::to_string(face[0]) + " " +
                                       std::to_string(face[1]) + " " + std::to_string(face[2]) +
                                       ") has sides " + format_double(a) + ", " + format_double(b) +
                                       ", " + format_double(c));
    }
  }
}

}  // namespace

TriMesh::TriMesh(std::shared_ptr<const Topology> topo, std::vector<double> lengths)
    : topo_(std::move(topo)), lengths_(std::move(lengths)) {}

TriMesh TriMesh::create(int vertex_count, std::vector<Face> faces, const EdgeLengthMap& lengths) {
  auto topo = std::make_shared<const Topology>(vertex_count, std::move(faces));
  std::vector<double> per_edge(topo->edges().size());
  for (std::size_t e = 0; e < per_edge.size(); ++e) {
    const Edge& edge = topo->edges()[e];
    auto it = lengths.find({edge.u, edge.v});
    if (it == lengths.end()) throw ParseError("missing length for edge " + edge_name(edge.u, edge.v));
    per_edge[e] = it->second;
  }
  for (const auto& [key, value] : lengths) {
    if (topo->edge_index(key.first, key.second) < 0) {
      throw ParseError("length given for " + edge_name(key.first, key.second) + ", which is not an edge");
    }
  }
  check_lengths(*topo, per_edge);
  return TriMesh(std::move(topo), std::move(per_edge));
}

TriMesh TriMesh::uniform(int vertex_count, std::vector<Face> faces, double length) {
  auto topo = std::make_shared<const Topology>(vertex_count, std::move(faces));
  std::vector<double> per_edge(topo->edges().size(), length);
  check_lengths(*topo, per_edge);
  return TriMesh(std::move(topo), std::move(per_edge));
}

TriMesh TriMesh::create(std::shared_ptr<const Topology> topo, std::vector<double> lengths) {
  if (lengths.size() != topo->edges().size()) {
    throw std::invalid_argument("expected " + std::to_string(topo->edges().size()) + " lengths, got " +
                                std::to_string(lengths.size()));
  }
  check_lengths(*topo, lengths);
  return TriMesh(std::move(topo), std::move(lengths));
}

TriMesh TriMesh::with_lengths(std::vector<double> lengths) const {
  if (lengths.size() != topo_->edges().size()) {
    throw std::invalid_argument("with_lengths: expected " + std::to_string(topo_->edges().size()) +
                                " lengths, got " + std::to_string(lengths.size()));
  }
  check_lengths(*topo_, lengths);
  return TriMesh(topo_, std::move(lengths));
}

TriMesh TriMesh::scaled(double factor) const {
  std::vector<double> out = lengths_;
  for (double& x : out) x *= factor;
  return with_lengths(std::move(out));
}

double TriMesh::length_between(int u, int v) const {
  int e = edge_index(u, v);
  if (e < 0) throw std::out_of_range("no edge " + edge_name(u, v));
  return lengths_[static_cast<std::size_t>(e)];
}

namespace detail {

double triangle_area(double a, double b, double c) {
  // Kahan's arrangement of Heron's formula, stable for needle triangles.
  if (a < b) std::swap(a, b);
  if (a < c) std::swap(a, c);
  if (b < c) std::swap(b, c);
  double p = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
  return 0.25 * std::sqrt(std::max(p, 0.0));
}

}  // namespace detail

double area(const TriMesh& mesh) {
  const auto& fe = mesh.topology()->face_edges();
  double total = 0.0;
  for (const auto& f : fe) total += detail::triangle_area(mesh.length(f[0]), mesh.length(f[1]), mesh.length(f[2]));
  return total;
}

// ---------------------------------------------------------------------------

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    Line parsed{number, {}};
    for (std::string tok; in >> tok;) parsed.tokens.push_back(tok);
    if (!parsed.tokens.empty()) out.push_back(std::move(parsed));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

long parse_int(const std::string& tok, int line) {
  long value = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + tok + "'");
  }
  return value;
}

double parse_length(const std::string& tok, int line) {
  double value = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || !(value > 0.0) || !std::isfinite(value)) {
    throw ParseError("line " + std::to_string(line) + ": expected a positive decimal length, got '" + tok + "'");
  }
  return value;
}

void expect(const Line& line, std::size_t count, const char* what) {
  if (line.tokens.size() != count) {
    throw ParseError("line " + std::to_string(line.number) + ": expected " + what);
  }
}

}  // namespace

TriMesh load_mesh(std::string_view text) {
  auto lines = tokenize(text);
  std::size_t i = 0;
  auto next = [&](const char* what) -> const Line& {
    if (i >= lines.size()) throw ParseError(std::string("unexpected end of input, expected ") + what);
    return lines[i++];
  };

  const Line& header = next("header");
  if (header.tokens != std::vector<std::string>{"systole-mesh", "v1"}) {
    throw ParseError("line " + std::to_string(header.number) + ": expected header 'systole-mesh v1'");
  }
  const Line& vline = next("'vertices N'");
  expect(vline, 2, "'vertices N'");
  if (vline.tokens[0] != "vertices") throw ParseError("line " + std::to_string(vline.number) + ": expected 'vertices N'");
  long n = parse_int(vline.tokens[1], vline.number);
  if (n <= 0) throw ParseError("line " + std::to_string(vline.number) + ": vertex count must be positive");

  const Line& fline = next("'faces M'");
  expect(fline, 2, "'faces M'");
  if (fline.tokens[0] != "faces") throw ParseError("line " + std::to_string(fline.number) + ": expected 'faces M'");
  long m = parse_int(fline.tokens[1], fline.number);
  if (m <= 0) throw ParseError("line " + std::to_string(fline.number) + ": face count must be positive");

  std::vector<Face> faces;
  for (long f = 0; f < m; ++f) {
    const Line& line = next("a face line 'i j k'");
    expect(line, 3, "a face line 'i j k'");
    Face face{};
    for (int k = 0; k < 3; ++k) {
      long id = parse_int(line.tokens[k], line.number);
      if (id < 0 || id >= n) {
        throw ParseError("line " + std::to_string(line.number) + ": vertex id " + std::to_string(id) +
                         " out of range");
      }
      face[k] = static_cast<int>(id);
    }
    faces.push_back(face);
  }

  const Line& lline = next("'lengths'");
  if (lline.tokens != std::vector<std::string>{"lengths"}) {
    throw ParseError("line " + std::to_string(lline.number) + ": expected 'lengths'");
  }
  EdgeLengthMap lengths;
  while (i < lines.size()) {
    const Line& line = lines[i++];
    expect(line, 3, "a length line 'i j L'");
    long a = parse_int(line.tokens[0], line.number);
    long b = parse_int(line.tokens[1], line.number);
    double len = parse_length(line.tokens[2], line.number);
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
      throw ParseError("line " + std::to_string(line.number) + ": bad vertex pair");
    }
    auto key = std::pair(static_cast<int>(std::min(a, b)), static_cast<int>(std::max(a, b)));
    if (!lengths.emplace(key, len).second) {
      throw ParseError("line " + std::to_string(line.number) + ": second length for edge " +
                       edge_name(key.first, key.second));
    }
  }
  return TriMesh::create(static_cast<int>(n), std::move(faces), lengths);
}

TriMesh load_mesh_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_mesh(buf.str());
}

std::string write_mesh(const TriMesh& mesh, std::string_view comment) {
  std::ostringstream out;
  out << "systole-mesh v1\n";
  if (!comment.empty()) {
    std::istringstream lines{std::string(comment)};
    for (std::string line; std::getline(lines, line);) out << "# " << line << "\n";
  }
  out << "vertices " << mesh.vertex_count() << "\n";
  out << "faces " << mesh.faces().size() << "\n";
  for (const Face& f : mesh.faces()) out << f[0] << " " << f[1] << " " << f[2] << "\n";
  out << "lengths\n";
  for (std::size_t e = 0; e < mesh.edges().size(); ++e) {
    out << mesh.edges()[e].u << " " << mesh.edges()[e].v << " " << format_double(mesh.lengths()[e]) << "\n";
  }
  return out.str();
}

}  // namespace syscat::mesh
