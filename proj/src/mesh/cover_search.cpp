#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "mesh_internal.hpp"

namespace syscat::mesh::detail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Relative slack separating exact ties from genuinely longer loops.
constexpr double kTieTolerance = 1e-10;

// Dijkstra on the (Z2)^rank cover; cover node = node * sheets + sheet.
class CoverSearch {
 public:
  CoverSearch(const PathGraph& g, int rank)
      : g_(g), sheets_(std::size_t{1} << rank), dist_(static_cast<std::size_t>(g.node_count) * sheets_, kInf),
        done_(dist_.size(), 0) {}

  std::size_t sheets() const { return sheets_; }
  double dist(int node, std::size_t sheet) const { return dist_[node * sheets_ + sheet]; }

  // Dijkstra from (source, 0) up to `radius`. Returns the shortest
  // nontrivial closed walk through the source if it is below `best`, found by
  // joining two settled branches across one arc; the search stops once no
  // shorter walk can appear.
  double run(int source, double radius, double best, const std::vector<char>* removed, bool join = true) {
    for (std::size_t i : reached_) {
      dist_[i] = kInf;
      done_[i] = 0;
    }
    reached_.clear();
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    const std::size_t start = static_cast<std::size_t>(source) * sheets_;
    dist_[start] = 0.0;
    reached_.push_back(start);
    heap.push({0.0, start});
    while (!heap.empty()) {
      auto [d, id] = heap.top();
      heap.pop();
      if (d > dist_[id] || done_[id]) continue;
      if (join && 2 * d > best * (1 + 1e-9)) break;
      done_[id] = 1;
      const int node = static_cast<int>(id / sheets_);
      const std::size_t sheet = id % sheets_;
      for (const Arc& arc : g_.out(node)) {
        if (removed && (*removed)[arc.to]) continue;
        const double nd = d + arc.weight;
        const std::size_t row = static_cast<std::size_t>(arc.to) * sheets_;
        const std::size_t same = sheet ^ arc.sig;
        if (join && nd < best) {
          for (std::size_t k = 0; k < sheets_; ++k) {
            if (k != same && done_[row + k]) best = std::min(best, nd + dist_[row + k]);
          }
        }
        if (nd > radius) continue;
        const std::size_t to = row + same;
        if (nd < dist_[to]) {
          if (dist_[to] == kInf) reached_.push_back(to);
          dist_[to] = nd;
          heap.push({nd, to});
        }
      }
    }
    return best;
  }

 private:
  const PathGraph& g_;
  std::size_t sheets_;
  std::vector<double> dist_;
  std::vector<char> done_;
  std::vector<std::size_t> reached_;
};

void check_rank(int rank) {
  if (rank < 0 || rank > 24) throw CoverTooLarge("cover with 2^" + std::to_string(rank) + " sheets");
}

}  // namespace

double shortest_nontrivial_length(const PathGraph& g, int rank) {
  check_rank(rank);
  if (rank == 0) return kInf;
  // Greedy vertex cover of the arcs with nonzero label.
  std::vector<int> degree(static_cast<std::size_t>(g.node_count), 0);
  for (int x = 0; x < g.node_count; ++x) {
    for (const Arc& arc : g.out(x)) degree[x] += arc.sig != 0;
  }
  std::vector<int> sources;
  for (;;) {
    int pick = 0;
    for (int x = 1; x < g.node_count; ++x) {
      if (degree[x] > degree[pick]) pick = x;
    }
    if (degree[pick] == 0) break;
    sources.push_back(pick);
    degree[pick] = 0;
    for (const Arc& arc : g.out(pick)) {
      if (arc.sig != 0 && degree[arc.to] > 0) --degree[arc.to];
    }
  }
  // Every nontrivial cycle meets a source. Once a source is done, cycles
  // through it are accounted for and it is removed from later searches.
  CoverSearch search(g, rank);
  std::vector<char> removed(static_cast<std::size_t>(g.node_count), 0);
  double best = kInf;
  for (int x : sources) {
    best = search.run(x, kInf, best, &removed);
    removed[x] = 1;
  }
  return best;
}

Cycle canonical_cycle(const PathGraph& g, int rank, double length) {
  check_rank(rank);
  const double limit = length * (1 + kTieTolerance);
  CoverSearch search(g, rank);
  const std::size_t sheets = search.sheets();

  int start = -1;
  for (int v = 0; v < g.node_count && start < 0; ++v) {
    if (search.run(v, kInf, limit * (1 + 1e-9), nullptr) <= limit) start = v;
  }
  if (start < 0) throw std::logic_error("canonical_cycle: no cycle of the given length");
  search.run(start, limit, kInf, nullptr, false);

  Cycle cycle;
  cycle.nodes.push_back(start);
  std::vector<char> targets(sheets, 0);
  for (std::size_t s = 1; s < sheets; ++s) targets[s] = search.dist(start, s) <= limit;
  std::vector<char> on_path(static_cast<std::size_t>(g.node_count), 0);
  on_path[start] = 1;
  std::size_t cls = 0;
  double walked = 0.0;
  std::vector<char> next_targets(sheets);

  for (;;) {
    const int u = cycle.nodes.back();
    bool moved = false;
    for (const Arc& arc : g.out(u)) {
      const int w = arc.to;
      if (w < start) continue;
      const std::size_t c = cls ^ arc.sig;
      const double l = walked + arc.weight;
      if (l > limit) continue;
      if (w == start) {
        if (cycle.nodes.size() >= 2 && c != 0 && targets[c]) {
          cycle.length = 0.0;
          for (std::size_t i = 0; i < cycle.nodes.size(); ++i) {
            const int a = cycle.nodes[i];
            const int b = cycle.nodes[(i + 1) % cycle.nodes.size()];
            // The lightest arc a->b, matching the one the search used.
            double wab = kInf;
            for (const Arc& x : g.out(a)) {
              if (x.to == b) wab = std::min(wab, x.weight);
            }
            cycle.length += wab;
          }
          cycle.cls = c;
          return cycle;
        }
        continue;
      }
      if (on_path[w]) continue;
      bool any = false;
      for (std::size_t t = 1; t < sheets; ++t) {
        next_targets[t] = targets[t] && l + search.dist(w, c ^ t) <= limit;
        any = any || next_targets[t];
      }
      if (!any) continue;
      targets.swap(next_targets);
      cycle.nodes.push_back(w);
      on_path[w] = 1;
      cls = c;
      walked = l;
      moved = true;
      break;
    }
    if (!moved) throw std::logic_error("canonical_cycle: greedy extension failed");
  }
}

}  // namespace syscat::mesh::detail
