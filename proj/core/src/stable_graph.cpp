#include "jchi/stable_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace jchi {
namespace {

// Union-find sized to a vertex count.
class Components {
 public:
  explicit Components(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

int count_components(const StableGraph& g, EdgeSubset kept) {
  Components uf(g.num_vertices());
  int components = g.num_vertices();
  for (int i = 0; i < g.num_edges(); ++i) {
    if (kept.contains(i) && uf.unite(g.edge(i).u, g.edge(i).v)) --components;
  }
  return components;
}

void require_edge_capacity(const StableGraph& g) {
  if (g.num_edges() > EdgeSubset::kMaxEdges) {
    throw InvalidInput("graph has more than 64 edges; edge subsets are unsupported");
  }
}

}  // namespace

EdgeSubset EdgeSubset::of(const std::vector<int>& indices) {
  EdgeSubset s;
  for (int i : indices) {
    if (i < 0 || i >= kMaxEdges) throw InvalidInput("edge index out of range");
    s.insert(i);
  }
  return s;
}

EdgeSubset EdgeSubset::all(int num_edges) {
  if (num_edges >= kMaxEdges) return EdgeSubset(~std::uint64_t{0});
  return EdgeSubset((std::uint64_t{1} << num_edges) - 1);
}

std::vector<int> EdgeSubset::indices() const {
  std::vector<int> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

bool operator<(const EdgeSubset& a, const EdgeSubset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.indices() < b.indices();
}

StableGraph::StableGraph(std::vector<int> genera, std::vector<Edge> edges, std::vector<int> leg_vertices)
    : genera_(std::move(genera)), edges_(std::move(edges)), legs_(std::move(leg_vertices)) {
  const int nv = num_vertices();
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= nv || e.v < 0 || e.v >= nv) {
      throw InvalidInput("edge endpoint out of range");
    }
  }
  for (int v : legs_) {
    if (v < 0 || v >= nv) throw InvalidInput("leg attached to a nonexistent vertex");
  }
  for (int g : genera_) {
    if (g < 0) throw InvalidInput("negative vertex genus");
  }
}

int StableGraph::half_edge_vertex(int h) const {
  const int edge_halves = 2 * num_edges();
  if (h < edge_halves) return (h % 2 == 0) ? edges_[h / 2].u : edges_[h / 2].v;
  return legs_[h - edge_halves];
}

int StableGraph::half_edge_partner(int h) const {
  if (h < 2 * num_edges()) return h ^ 1;
  return h;
}

int StableGraph::half_edge_label(int h) const {
  const int edge_halves = 2 * num_edges();
  return h < edge_halves ? 0 : h - edge_halves + 1;
}

int StableGraph::valence(int v) const {
  int n = 0;
  for (const Edge& e : edges_) n += (e.u == v) + (e.v == v);
  for (int w : legs_) n += (w == v);
  return n;
}

int StableGraph::num_loops_at(int v) const {
  int n = 0;
  for (const Edge& e : edges_) n += (e.u == v && e.v == v);
  return n;
}

int StableGraph::total_genus() const {
  return std::accumulate(genera_.begin(), genera_.end(), 0) + b1();
}

bool StableGraph::is_connected() const {
  if (num_vertices() == 0) return false;
  Components uf(num_vertices());
  int components = num_vertices();
  for (const Edge& e : edges_) {
    if (uf.unite(e.u, e.v)) --components;
  }
  return components == 1;
}

bool StableGraph::all_genus_zero() const {
  return std::all_of(genera_.begin(), genera_.end(), [](int g) { return g == 0; });
}

std::vector<std::string> StableGraph::violations() const {
  std::vector<std::string> out;
  if (num_vertices() == 0) {
    out.emplace_back("graph has no vertices");
    return out;
  }
  if (!is_connected()) out.emplace_back("graph is not connected");
  for (int v = 0; v < num_vertices(); ++v) {
    const int stab = 2 * genera_[v] - 2 + valence(v);
    if (stab <= 0) {
      std::ostringstream msg;
      msg << "vertex " << v << " unstable: 2g-2+n = " << stab;
      out.push_back(msg.str());
    }
  }
  return out;
}

void StableGraph::validate() const {
  const auto v = violations();
  if (!v.empty()) throw InvalidInput(v.front());
}

StableGraph delete_edges(const StableGraph& g, EdgeSubset s) {
  require_edge_capacity(g);
  return restrict_edges(g, s.complement(g.num_edges()));
}

StableGraph restrict_edges(const StableGraph& g, EdgeSubset kept) {
  require_edge_capacity(g);
  std::vector<Edge> edges;
  for (int i = 0; i < g.num_edges(); ++i) {
    if (kept.contains(i)) edges.push_back(g.edge(i));
  }
  return StableGraph(g.genera(), std::move(edges), g.leg_vertices());
}

bool spans_connected(const StableGraph& g, EdgeSubset kept) {
  if (g.num_vertices() == 0) return false;
  return count_components(g, kept) == 1;
}

bool is_non_disconnecting(const StableGraph& g, EdgeSubset s) {
  require_edge_capacity(g);
  return spans_connected(g, s.complement(g.num_edges()));
}

bool is_spanning_tree(const StableGraph& g, EdgeSubset t) {
  require_edge_capacity(g);
  return t.size() == g.num_vertices() - 1 && spans_connected(g, t);
}

std::vector<EdgeSubset> connected_spanning_subgraphs(const StableGraph& g, const Budget& budget) {
  require_edge_capacity(g);
  budget.require_subsets(g.num_edges(), "connected_spanning_subgraphs");
  std::vector<EdgeSubset> out;
  const std::uint64_t count = std::uint64_t{1} << g.num_edges();
  for (std::uint64_t m = 0; m < count; ++m) {
    if (spans_connected(g, EdgeSubset(m))) out.emplace_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

StableGraph relabel_vertices(const StableGraph& g, const std::vector<int>& perm) {
  std::vector<int> genera(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) genera[perm[v]] = g.genus(v);
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  std::vector<int> legs;
  legs.reserve(g.num_legs());
  for (int v : g.leg_vertices()) legs.push_back(perm[v]);
  return StableGraph(std::move(genera), std::move(edges), std::move(legs));
}

StableGraph reorder_edges(const StableGraph& g, const std::vector<int>& order,
                          const std::vector<bool>& flip) {
  std::vector<Edge> edges;
  edges.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    Edge e = g.edge(order[i]);
    if (flip[i]) std::swap(e.u, e.v);
    edges.push_back(e);
  }
  return StableGraph(g.genera(), std::move(edges), g.leg_vertices());
}

}  // namespace jchi
