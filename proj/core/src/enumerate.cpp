#include "jchi/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "jchi/matrix_tree.hpp"

namespace jchi {
namespace {

std::string cell_name(int g, int n) {
  return "(g, n) = (" + std::to_string(g) + ", " + std::to_string(n) + ")";
}

std::vector<StableGraph> sorted_by_key(std::vector<std::pair<CanonicalKey, StableGraph>> keyed) {
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < keyed.size(); ++i) {
    if (keyed[i].first == keyed[i - 1].first) {
      throw std::logic_error("enumeration produced two isomorphic graphs");
    }
  }
  std::vector<StableGraph> out;
  out.reserve(keyed.size());
  for (auto& [key, g] : keyed) out.push_back(std::move(g));
  return out;
}

// --- direct enumeration -----------------------------------------------------

class DirectEnumerator {
 public:
  DirectEnumerator(int genus, int legs, bool genus0_only, const Budget& budget)
      : genus_(genus), legs_(legs), genus0_only_(genus0_only), budget_(budget) {}

  std::vector<StableGraph> run() {
    const int max_vertices = std::max(1, 2 * genus_ - 2 + legs_);
    for (int nv = 1; nv <= max_vertices; ++nv) {
      for (int b1 = 0; b1 <= genus_; ++b1) {
        const int ne = b1 + nv - 1;
        const int vertex_genus = genus_ - b1;
        if (genus0_only_ && vertex_genus != 0) continue;
        pairs_.clear();
        for (int i = 0; i < nv; ++i) {
          for (int j = i; j < nv; ++j) pairs_.push_back({i, j});
        }
        std::vector<Edge> edges;
        edge_multisets(nv, ne, vertex_genus, 0, edges);
      }
    }
    std::vector<std::pair<CanonicalKey, StableGraph>> keyed;
    keyed.reserve(found_.size());
    for (auto& [key, g] : found_) keyed.emplace_back(key, std::move(g));
    return sorted_by_key(std::move(keyed));
  }

 private:
  void edge_multisets(int nv, int remaining, int vertex_genus, std::size_t pair_index,
                      std::vector<Edge>& edges) {
    if (remaining == 0) {
      const StableGraph shape(std::vector<int>(nv, 0), edges, {});
      if (!shape.is_connected()) return;
      std::vector<int> genera(nv, 0);
      distribute_genus(shape, vertex_genus, 0, genera);
      return;
    }
    if (pair_index == pairs_.size()) return;
    // Take the current pair type k times, k from `remaining` down to 0.
    for (int k = remaining; k >= 0; --k) {
      for (int c = 0; c < k; ++c) edges.push_back(pairs_[pair_index]);
      edge_multisets(nv, remaining - k, vertex_genus, pair_index + 1, edges);
      edges.resize(edges.size() - static_cast<std::size_t>(k));
    }
  }

  void distribute_genus(const StableGraph& shape, int remaining, int v, std::vector<int>& genera) {
    const int nv = shape.num_vertices();
    if (v == nv - 1) {
      genera[v] = remaining;
      add_skeleton(StableGraph(genera, shape.edges(), {}));
      return;
    }
    for (int gv = 0; gv <= remaining; ++gv) {
      genera[v] = gv;
      distribute_genus(shape, remaining - gv, v + 1, genera);
    }
  }

  void add_skeleton(const StableGraph& skeleton) {
    // Legs needed to make every vertex stable.
    int deficit = 0;
    for (int v = 0; v < skeleton.num_vertices(); ++v) {
      deficit += std::max(0, 3 - 2 * skeleton.genus(v) - skeleton.valence(v));
    }
    if (deficit > legs_) return;
    if (!skeletons_.insert(canonical_key(skeleton)).second) return;
    std::vector<int> leg_vertices(legs_, 0);
    assign_legs(skeleton, 0, leg_vertices);
  }

  void assign_legs(const StableGraph& skeleton, int label, std::vector<int>& leg_vertices) {
    if (label == legs_) {
      StableGraph g(skeleton.genera(), skeleton.edges(), leg_vertices);
      if (!g.is_valid()) return;
      CanonicalKey key = canonical_key(g);
      if (found_.count(key) != 0) return;
      if (found_.size() >= budget_.max_graphs) {
        throw BudgetExceeded("stable graph enumeration for " + cell_name(genus_, legs_) +
                             " exceeds the graph budget");
      }
      found_.emplace(std::move(key), std::move(g));
      return;
    }
    for (int v = 0; v < skeleton.num_vertices(); ++v) {
      leg_vertices[label] = v;
      assign_legs(skeleton, label + 1, leg_vertices);
    }
  }

  int genus_;
  int legs_;
  bool genus0_only_;
  const Budget& budget_;
  std::vector<Edge> pairs_;
  std::set<CanonicalKey> skeletons_;
  std::map<CanonicalKey, StableGraph> found_;
};

// --- leg insertion ----------------------------------------------------------

std::vector<StableGraph> seeds(int genus, bool genus0_only, const Budget& budget) {
  if (genus == 0) return {StableGraph({0}, {}, {0, 0, 0})};
  if (genus == 1) {
    std::vector<StableGraph> out;
    if (!genus0_only) out.emplace_back(std::vector<int>{1}, std::vector<Edge>{}, std::vector<int>{0});
    out.emplace_back(std::vector<int>{0}, std::vector<Edge>{{0, 0}}, std::vector<int>{0});
    return out;
  }
  return enumerate_stable_graphs_direct(genus, 0, genus0_only, budget);
}

class Grower {
 public:
  Grower(int target_legs, const std::function<void(const StableGraph&)>& visit, const Budget& budget,
         std::string cell)
      : target_(target_legs), visit_(visit), budget_(budget), cell_(std::move(cell)) {}

  void grow(const StableGraph& g) {
    if (g.num_legs() == target_) {
      if (++count_ > budget_.max_graphs) {
        throw BudgetExceeded("stable graph enumeration for " + cell_ + " exceeds the graph budget");
      }
      visit_(g);
      return;
    }
    for (const StableGraph& child : add_leg_children(g)) grow(child);
  }

  std::uint64_t count() const { return count_; }

 private:
  int target_;
  const std::function<void(const StableGraph&)>& visit_;
  const Budget& budget_;
  std::string cell_;
  std::uint64_t count_ = 0;
};

// Orbit minimum test under a list of vertex permutations.
bool is_orbit_min(int v, const std::vector<std::vector<int>>& auts) {
  return std::all_of(auts.begin(), auts.end(), [v](const auto& a) { return a[v] >= v; });
}

bool is_orbit_min(std::pair<int, int> p, const std::vector<std::vector<int>>& auts) {
  for (const auto& a : auts) {
    std::pair<int, int> q{a[p.first], a[p.second]};
    if (q.first > q.second) std::swap(q.first, q.second);
    if (q < p) return false;
  }
  return true;
}

}  // namespace

void require_stable_range(int genus, int legs) {
  if (genus < 0 || legs < 0 || 2 * genus - 2 + legs <= 0) {
    throw InvalidInput("unstable " + cell_name(genus, legs) + ": need 2g - 2 + n > 0");
  }
}

std::vector<StableGraph> enumerate_stable_graphs_direct(int genus, int legs, bool genus0_only,
                                                        const Budget& budget) {
  require_stable_range(genus, legs);
  return DirectEnumerator(genus, legs, genus0_only, budget).run();
}

std::vector<StableGraph> add_leg_children(const StableGraph& parent) {
  const SymmetryInfo sym = analyze_symmetry(parent);
  const auto& auts = sym.vertex_automorphisms;
  const int nv = parent.num_vertices();
  const int label = parent.num_legs() + 1;
  std::vector<StableGraph> children;

  for (int v = 0; v < nv; ++v) {
    if (!is_orbit_min(v, auts)) continue;
    std::vector<int> legs = parent.leg_vertices();
    legs.push_back(v);
    children.emplace_back(parent.genera(), parent.edges(), std::move(legs));
  }

  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < parent.num_edges(); ++i) {
    const Edge& e = parent.edge(i);
    const std::pair<int, int> p{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (!seen.insert(p).second || !is_orbit_min(p, auts)) continue;
    std::vector<int> genera = parent.genera();
    genera.push_back(0);
    std::vector<Edge> edges = parent.edges();
    edges[i] = {e.u, nv};
    edges.push_back({nv, e.v});
    std::vector<int> legs = parent.leg_vertices();
    legs.push_back(nv);
    children.emplace_back(std::move(genera), std::move(edges), std::move(legs));
  }

  for (int l = 1; l < label; ++l) {
    std::vector<int> genera = parent.genera();
    genera.push_back(0);
    std::vector<Edge> edges = parent.edges();
    edges.push_back({parent.leg_vertex(l), nv});
    std::vector<int> legs = parent.leg_vertices();
    legs[l - 1] = nv;
    legs.push_back(nv);
    children.emplace_back(std::move(genera), std::move(edges), std::move(legs));
  }
  return children;
}

std::uint64_t for_each_stable_graph(int genus, int legs, bool genus0_only,
                                    const std::function<void(const StableGraph&)>& visit,
                                    const Budget& budget) {
  require_stable_range(genus, legs);
  Grower grower(legs, visit, budget, cell_name(genus, legs));
  for (const StableGraph& seed : seeds(genus, genus0_only, budget)) grower.grow(seed);
  return grower.count();
}

std::vector<StableGraph> enumerate_stable_graphs(int genus, int legs, bool genus0_only, const Budget& budget) {
  std::vector<std::pair<CanonicalKey, StableGraph>> keyed;
  for_each_stable_graph(
      genus, legs, genus0_only, [&](const StableGraph& g) { keyed.emplace_back(canonical_key(g), g); },
      budget);
  return sorted_by_key(std::move(keyed));
}

std::vector<MarkedOrbit> spanning_tree_orbits(const StableGraph& g, const Budget& budget) {
  std::map<CanonicalKey, MarkedOrbit> orbits;
  for (const EdgeSubset& t : enumerate_spanning_trees(g, budget)) {
    MarkedGraph m{g, t};
    auto [it, inserted] = orbits.try_emplace(canonical_key(m), MarkedOrbit{m, 0});
    ++it->second.orbit_size;
  }
  std::vector<MarkedOrbit> out;
  out.reserve(orbits.size());
  for (auto& [key, orbit] : orbits) out.push_back(std::move(orbit));
  return out;
}

std::vector<MarkedGraph> enumerate_marked(int genus, int legs, const Budget& budget) {
  std::vector<MarkedGraph> out;
  for (const StableGraph& g : enumerate_stable_graphs(genus, legs, true, budget)) {
    for (MarkedOrbit& o : spanning_tree_orbits(g, budget)) out.push_back(std::move(o.marked));
  }
  return out;
}

MarkedGraph glue_tree(const StableGraph& tree, int genus) {
  if (genus < 0) throw InvalidInput("glue_tree: negative genus");
  if (!tree.is_valid() || !tree.all_genus_zero() || tree.b1() != 0) {
    throw InvalidInput("glue_tree: input must be a stable genus-0 tree");
  }
  const int legs = tree.num_legs() - 2 * genus;
  if (legs < 0) throw InvalidInput("glue_tree: fewer than 2g legs");
  std::vector<Edge> edges = tree.edges();
  for (int i = 1; i <= genus; ++i) {
    edges.push_back({tree.leg_vertex(legs + 2 * i - 1), tree.leg_vertex(legs + 2 * i)});
  }
  std::vector<int> kept(tree.leg_vertices().begin(), tree.leg_vertices().begin() + legs);
  return MarkedGraph{StableGraph(tree.genera(), std::move(edges), std::move(kept)),
                     EdgeSubset::all(tree.num_edges())};
}

bool FiberCensus::consistent() const {
  std::uint64_t total = 0;
  for (const FiberBucket& b : buckets) {
    if (Rational(BigInt(static_cast<long long>(b.count))) != b.expected) return false;
    total += b.count;
  }
  return total == source_count;
}

FiberCensus fiber_census(int genus, int legs, const Budget& budget) {
  require_stable_range(genus, legs);
  const Rational numerator(BigInt(1LL << genus) * factorial(static_cast<unsigned>(genus)));
  std::map<CanonicalKey, FiberBucket> buckets;
  FiberCensus census;
  census.genus = genus;
  census.legs = legs;
  census.source_count = for_each_stable_graph(
      0, 2 * genus + legs, false,
      [&](const StableGraph& t) {
        MarkedGraph m = glue_tree(t, genus);
        CanonicalKey key = canonical_key(m);
        auto it = buckets.find(key);
        if (it == buckets.end()) {
          FiberBucket b;
          b.key = key;
          b.aut_marked = aut_order_marked(m);
          b.expected = numerator / Rational(b.aut_marked);
          b.representative = std::move(m);
          it = buckets.emplace(std::move(key), std::move(b)).first;
        }
        ++it->second.count;
      },
      budget);
  for (auto& [key, b] : buckets) census.buckets.push_back(std::move(b));
  return census;
}

}  // namespace jchi
