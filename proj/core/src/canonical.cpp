#include "jchi/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace jchi {
namespace {

constexpr int kChannelShift = 16;
constexpr std::uint32_t kChannelMask = 0xffff;

// Vertex-level view of a graph: pair weights pack the count of plain edges
// in the low half and of coloured edges in the high half.
struct Structure {
  int n = 0;
  bool colored = false;
  std::vector<std::uint32_t> weight;  // n * n, symmetric; diagonal = loops
  std::vector<std::vector<int>> invariant;
  const StableGraph* graph = nullptr;

  std::uint32_t w(int i, int j) const { return weight[static_cast<std::size_t>(i) * n + j]; }
};

Structure build_structure(const StableGraph& g, EdgeSubset colored) {
  Structure s;
  s.n = g.num_vertices();
  s.colored = !colored.empty();
  s.graph = &g;
  s.weight.assign(static_cast<std::size_t>(s.n) * s.n, 0);
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    const std::uint32_t inc = colored.contains(i) ? (1u << kChannelShift) : 1u;
    s.weight[static_cast<std::size_t>(e.u) * s.n + e.v] += inc;
    if (!e.is_loop()) s.weight[static_cast<std::size_t>(e.v) * s.n + e.u] += inc;
  }
  s.invariant.assign(s.n, {});
  std::vector<std::vector<int>> legs(s.n);
  for (int k = 1; k <= g.num_legs(); ++k) legs[g.leg_vertex(k)].push_back(k);
  for (int v = 0; v < s.n; ++v) {
    auto& inv = s.invariant[v];
    const std::uint32_t loops = s.w(v, v);
    inv = {g.genus(v), static_cast<int>(loops & kChannelMask), static_cast<int>(loops >> kChannelShift),
           g.valence(v), static_cast<int>(legs[v].size())};
    inv.insert(inv.end(), legs[v].begin(), legs[v].end());
  }
  return s;
}

// Dense ranks of `keys`, ordered by key.
template <typename Key>
int rank_by(const std::vector<Key>& keys, std::vector<int>& out) {
  const int n = static_cast<int>(keys.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  out.assign(n, 0);
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && keys[idx[i]] != keys[idx[i - 1]]) ++rank;
    out[idx[i]] = rank;
  }
  return n == 0 ? 0 : rank + 1;
}

// Colour refinement to the coarsest equitable partition finer than `colors`.
int refine(const Structure& s, std::vector<int>& colors) {
  int cells = 0;
  {
    std::vector<int> dense;
    cells = rank_by(colors, dense);
    colors.swap(dense);
  }
  std::vector<std::vector<std::uint64_t>> sig(s.n);
  while (cells < s.n) {
    for (int v = 0; v < s.n; ++v) {
      auto& row = sig[v];
      row.clear();
      row.push_back(static_cast<std::uint64_t>(colors[v]));
      const std::size_t head = row.size();
      for (int u = 0; u < s.n; ++u) {
        const std::uint32_t wt = s.w(v, u);
        if (u != v && wt != 0) row.push_back((static_cast<std::uint64_t>(colors[u]) << 32) | wt);
      }
      std::sort(row.begin() + static_cast<std::ptrdiff_t>(head), row.end());
    }
    std::vector<int> next;
    const int next_cells = rank_by(sig, next);
    colors.swap(next);
    if (next_cells == cells) break;
    cells = next_cells;
  }
  return cells;
}

class Search {
 public:
  explicit Search(const Structure& s) : s_(s) {}

  void run() {
    std::vector<int> colors;
    rank_by(s_.invariant, colors);
    descend(std::move(colors));
  }

  const std::string& best() const { return best_; }
  const std::vector<std::vector<int>>& best_leaves() const { return leaves_; }

 private:
  void descend(std::vector<int> colors) {
    const int cells = refine(s_, colors);
    if (cells == s_.n) {
      leaf(colors);
      return;
    }
    std::vector<int> count(cells, 0);
    for (int c : colors) ++count[c];
    const int target = static_cast<int>(std::find_if(count.begin(), count.end(), [](int k) { return k > 1; }) -
                                        count.begin());
    for (int v = 0; v < s_.n; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> next(s_.n);
      for (int u = 0; u < s_.n; ++u) next[u] = 2 * colors[u] + ((colors[u] == target && u != v) ? 1 : 0);
      descend(std::move(next));
    }
  }

  void leaf(const std::vector<int>& colors) {
    std::vector<int> order(s_.n);
    for (int v = 0; v < s_.n; ++v) order[colors[v]] = v;
    std::string enc = encode(order);
    if (leaves_.empty() || enc < best_) {
      best_ = std::move(enc);
      leaves_.clear();
      leaves_.push_back(std::move(order));
    } else if (enc == best_) {
      leaves_.push_back(std::move(order));
    }
  }

  std::string encode(const std::vector<int>& order) const {
    const StableGraph& g = *s_.graph;
    std::vector<int> pos(s_.n);
    for (int i = 0; i < s_.n; ++i) pos[order[i]] = i;
    std::string out;
    out.reserve(3 + s_.n + g.num_legs() + s_.n * (s_.n + 1));
    put(out, s_.n);
    put(out, g.num_legs());
    put(out, s_.colored ? 2 : 1);
    for (int i = 0; i < s_.n; ++i) put(out, g.genus(order[i]));
    for (int k = 1; k <= g.num_legs(); ++k) put(out, pos[g.leg_vertex(k)]);
    for (int i = 0; i < s_.n; ++i) {
      for (int j = i; j < s_.n; ++j) {
        const std::uint32_t wt = s_.w(order[i], order[j]);
        put(out, static_cast<int>(wt & kChannelMask));
        if (s_.colored) put(out, static_cast<int>(wt >> kChannelShift));
      }
    }
    return out;
  }

  static void put(std::string& out, int value) {
    if (value < 0 || value > 255) throw InvalidInput("graph too large for canonical encoding");
    out.push_back(static_cast<char>(value));
  }

  const Structure& s_;
  std::string best_;
  std::vector<std::vector<int>> leaves_;
};

BigInt edge_factor(const Structure& s) {
  BigInt f(1);
  for (int i = 0; i < s.n; ++i) {
    for (int j = i; j < s.n; ++j) {
      const std::uint32_t wt = s.w(i, j);
      for (const unsigned c : {wt & kChannelMask, wt >> kChannelShift}) {
        if (c == 0) continue;
        f *= factorial(c);
        if (i == j) f *= BigInt(1LL << c);
      }
    }
  }
  return f;
}

std::vector<Edge> edges_in_order(const Structure& s, const std::vector<int>& order, int channel) {
  std::vector<Edge> edges;
  for (int i = 0; i < s.n; ++i) {
    for (int j = i; j < s.n; ++j) {
      const std::uint32_t wt = s.w(order[i], order[j]);
      const unsigned c = channel == 0 ? (wt & kChannelMask) : (wt >> kChannelShift);
      for (unsigned k = 0; k < c; ++k) edges.push_back({i, j});
    }
  }
  return edges;
}

}  // namespace

std::string CanonicalKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

CanonicalKey CanonicalKey::from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw InvalidInput("canonical key: bad hex digit");
  };
  if (hex.size() % 2 != 0) throw InvalidInput("canonical key: odd hex length");
  CanonicalKey k;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    k.bytes.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  return k;
}

SymmetryInfo analyze_symmetry(const StableGraph& g, EdgeSubset colored) {
  const Structure s = build_structure(g, colored);
  Search search(s);
  search.run();

  SymmetryInfo info;
  info.key.bytes = search.best();
  const auto& leaves = search.best_leaves();
  info.canonical_order = leaves.front();
  for (const auto& leaf : leaves) {
    std::vector<int> perm(s.n);
    for (int i = 0; i < s.n; ++i) perm[info.canonical_order[i]] = leaf[i];
    info.vertex_automorphisms.push_back(std::move(perm));
  }
  info.edge_factor = edge_factor(s);
  return info;
}

CanonicalKey canonical_key(const StableGraph& g) { return analyze_symmetry(g).key; }

CanonicalKey canonical_key(const MarkedGraph& m) {
  // A second colour channel is always present for marked graphs, even when
  // the tree is empty, so marked and plain keys never collide.
  const Structure s = [&] {
    Structure st = build_structure(m.graph, m.tree);
    st.colored = true;
    return st;
  }();
  Search search(s);
  search.run();
  return CanonicalKey{search.best()};
}

BigInt aut_order(const StableGraph& g) { return analyze_symmetry(g).order(); }

BigInt aut_order_marked(const MarkedGraph& m) { return analyze_symmetry(m.graph, m.tree).order(); }

StableGraph canonical_form(const StableGraph& g) {
  const Structure s = build_structure(g, {});
  Search search(s);
  search.run();
  const auto& order = search.best_leaves().front();
  std::vector<int> pos(s.n);
  for (int i = 0; i < s.n; ++i) pos[order[i]] = i;
  std::vector<int> genera(s.n);
  for (int i = 0; i < s.n; ++i) genera[i] = g.genus(order[i]);
  std::vector<int> legs;
  for (int v : g.leg_vertices()) legs.push_back(pos[v]);
  return StableGraph(std::move(genera), edges_in_order(s, order, 0), std::move(legs));
}

MarkedGraph canonical_form(const MarkedGraph& m) {
  Structure s = build_structure(m.graph, m.tree);
  s.colored = true;
  Search search(s);
  search.run();
  const auto& order = search.best_leaves().front();
  std::vector<int> pos(s.n);
  for (int i = 0; i < s.n; ++i) pos[order[i]] = i;
  std::vector<int> genera(s.n);
  for (int i = 0; i < s.n; ++i) genera[i] = m.graph.genus(order[i]);
  std::vector<int> legs;
  for (int v : m.graph.leg_vertices()) legs.push_back(pos[v]);
  std::vector<Edge> edges = edges_in_order(s, order, 1);
  const int tree_size = static_cast<int>(edges.size());
  const std::vector<Edge> rest = edges_in_order(s, order, 0);
  edges.insert(edges.end(), rest.begin(), rest.end());
  return MarkedGraph{StableGraph(std::move(genera), std::move(edges), std::move(legs)),
                     EdgeSubset::all(tree_size)};
}

}  // namespace jchi
