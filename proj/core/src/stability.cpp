#include "jchi/stability.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "jchi/matrix_tree.hpp"

namespace jchi {
namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("twister lattice entry overflow");
  return static_cast<std::int64_t>(v);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::string subset_text(EdgeSubset s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i : s.indices()) {
    os << (first ? "" : ",") << i;
    first = false;
  }
  os << "}";
  return os.str();
}

std::string md_text(const Multidegree& md) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < md.size(); ++i) os << (i ? "," : "") << md[i];
  os << ")";
  return os.str();
}

std::vector<int> vertex_list(std::uint32_t mask) {
  std::vector<int> out;
  for (int v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1u) out.push_back(v);
  }
  return out;
}

void require_vertex_subsets(const StableGraph& g) {
  if (g.num_vertices() > 20) throw BudgetExceeded("polarization checks need at most 20 vertices");
}

// φ scaled to integers: scaled[v] = 2 D φ(v) with D the common denominator.
struct ScaledPolarization {
  std::int64_t denom = 1;  // D
  std::vector<std::int64_t> scaled;
};

ScaledPolarization scale(const StableGraph& g, const Polarization& phi, std::int64_t degree) {
  if (static_cast<int>(phi.size()) != g.num_vertices()) {
    throw InvalidInput("polarization has " + std::to_string(phi.size()) + " entries for " +
                       std::to_string(g.num_vertices()) + " vertices");
  }
  Rational total;
  mpz_class lcm = 1;
  for (const Rational& x : phi) {
    total += x;
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.den().raw().get_mpz_t());
  }
  if (total != Rational(degree)) {
    throw InvalidInput("polarization sums to " + total.to_string() + ", not the degree " +
                       std::to_string(degree));
  }
  ScaledPolarization s;
  s.denom = BigInt(lcm).to_int64();
  for (const Rational& x : phi) {
    s.scaled.push_back((x * Rational(BigInt(2) * BigInt(lcm))).num().to_int64());
  }
  return s;
}

}  // namespace

bool degree_set_membership(const StableGraph& host, EdgeSubset sub, std::int64_t degree, const Multidegree& md) {
  if (static_cast<int>(md.size()) != host.num_vertices()) return false;
  const EdgeSubset kept(sub.mask() & EdgeSubset::all(host.num_edges()).mask());
  const std::int64_t removed = host.num_edges() - kept.size();
  return std::accumulate(md.begin(), md.end(), std::int64_t{0}) == degree - removed;
}

Multidegree twister_vector(const StableGraph& g, EdgeSubset sub, int v) {
  if (v < 0 || v >= g.num_vertices()) throw InvalidInput("twister_vector: vertex out of range");
  Multidegree tw(g.num_vertices(), 0);
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    if (!sub.contains(i) || e.is_loop()) continue;
    if (e.u == v) {
      ++tw[e.v];
      --tw[v];
    } else if (e.v == v) {
      ++tw[e.u];
      --tw[v];
    }
  }
  return tw;
}

Multidegree twister_vector(const StableGraph& g, int v) {
  return twister_vector(g, EdgeSubset::all(g.num_edges()), v);
}

TwisterLattice::TwisterLattice(const StableGraph& g, EdgeSubset sub) : n_(g.num_vertices()) {
  if (!spans_connected(g, sub)) throw InvalidInput("twister lattice needs a connected spanning subgraph");
  for (int v = 0; v < n_; ++v) generators_.push_back(twister_vector(g, sub, v));

  const int m = n_ - 1;
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& gen : generators_) rows.emplace_back(gen.begin(), gen.begin() + m);

  for (int c = 0; c < m; ++c) {
    // Euclid on column c over the rows not yet used as pivots.
    for (;;) {
      int best = -1;
      for (int r = c; r < static_cast<int>(rows.size()); ++r) {
        if (rows[r][c] != 0 && (best < 0 || std::llabs(rows[r][c]) < std::llabs(rows[best][c]))) best = r;
      }
      if (best < 0) throw std::logic_error("twister lattice is not of full rank");
      std::swap(rows[c], rows[best]);
      bool done = true;
      for (int r = c + 1; r < static_cast<int>(rows.size()); ++r) {
        if (rows[r][c] == 0) continue;
        const std::int64_t q = floor_div(rows[r][c], rows[c][c]);
        for (int k = c; k < m; ++k) rows[r][k] = checked(static_cast<__int128>(rows[r][k]) - static_cast<__int128>(q) * rows[c][k]);
        if (rows[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[c][c] < 0) {
      for (auto& x : rows[c]) x = -x;
    }
    for (int r = 0; r < c; ++r) {
      const std::int64_t q = floor_div(rows[r][c], rows[c][c]);
      if (q == 0) continue;
      for (int k = c; k < m; ++k) rows[r][k] = checked(static_cast<__int128>(rows[r][k]) - static_cast<__int128>(q) * rows[c][k]);
    }
  }
  rows.resize(m);
  basis_ = std::move(rows);
  for (int c = 0; c < m; ++c) pivots_.push_back(basis_[c][c]);
}

std::int64_t TwisterLattice::index() const {
  std::int64_t p = 1;
  for (std::int64_t x : pivots_) p = checked(static_cast<__int128>(p) * x);
  return p;
}

Multidegree TwisterLattice::reduce(const Multidegree& x) const {
  if (static_cast<int>(x.size()) != n_) throw InvalidInput("multidegree has the wrong length");
  const int m = n_ - 1;
  const std::int64_t total = std::accumulate(x.begin(), x.end(), std::int64_t{0});
  Multidegree y(x.begin(), x.begin() + m);
  for (int c = 0; c < m; ++c) {
    const std::int64_t q = floor_div(y[c], pivots_[c]);
    if (q == 0) continue;
    for (int k = c; k < m; ++k) y[k] = checked(static_cast<__int128>(y[k]) - static_cast<__int128>(q) * basis_[c][k]);
  }
  y.push_back(total - std::accumulate(y.begin(), y.end(), std::int64_t{0}));
  return y;
}

bool TwisterLattice::contains(const Multidegree& x) const {
  if (static_cast<int>(x.size()) != n_) return false;
  if (std::accumulate(x.begin(), x.end(), std::int64_t{0}) != 0) return false;
  const Multidegree r = reduce(x);
  return std::all_of(r.begin(), r.end(), [](std::int64_t v) { return v == 0; });
}

bool TwisterLattice::equivalent(const Multidegree& a, const Multidegree& b) const {
  if (a.size() != b.size()) return false;
  Multidegree diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  return contains(diff);
}

bool twister_membership(const TwisterLattice& lattice, const Multidegree& x) { return lattice.contains(x); }

std::vector<Multidegree> orbit_representatives(const StableGraph& host, EdgeSubset sub, std::int64_t degree) {
  const TwisterLattice lattice(host, sub);
  const int n = host.num_vertices();
  const std::int64_t total = degree - (host.num_edges() - sub.size());
  std::vector<Multidegree> reps;
  Multidegree box(n - 1, 0);
  for (;;) {
    Multidegree md = box;
    md.push_back(total - std::accumulate(box.begin(), box.end(), std::int64_t{0}));
    reps.push_back(std::move(md));
    int c = n - 2;
    while (c >= 0 && ++box[c] == lattice.pivots()[c]) box[c--] = 0;
    if (c < 0) break;
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

const std::vector<Multidegree>& StabilityCondition::at(EdgeSubset sub) const {
  const auto it = sigma.find(sub);
  if (it == sigma.end()) throw InvalidInput("stability condition has no entry for subgraph " + subset_text(sub));
  return it->second;
}

std::optional<std::vector<int>> degeneracy_witness(const StableGraph& g, const Polarization& phi,
                                                   std::int64_t degree) {
  require_vertex_subsets(g);
  const ScaledPolarization sp = scale(g, phi, degree);
  const int n = g.num_vertices();
  for (std::uint32_t w = 1; w + 1 < (1u << n); ++w) {
    std::int64_t phi_w = 0;
    for (int v = 0; v < n; ++v) {
      if (w >> v & 1u) phi_w += sp.scaled[v];
    }
    std::int64_t crossing = 0;
    for (const Edge& e : g.edges()) crossing += ((w >> e.u & 1u) != (w >> e.v & 1u));
    // 2D (φ(W) - e(W)/2) ≡ 0 mod 2D
    if ((phi_w - sp.denom * crossing) % (2 * sp.denom) == 0) return vertex_list(w);
  }
  return std::nullopt;
}

bool is_nondegenerate(const StableGraph& g, const Polarization& phi, std::int64_t degree) {
  return !degeneracy_witness(g, phi, degree).has_value();
}

StabilityCondition sigma_from_polarization(const StableGraph& g, const Polarization& phi, std::int64_t degree,
                                           const Budget& budget) {
  require_vertex_subsets(g);
  if (auto w = degeneracy_witness(g, phi, degree)) {
    std::ostringstream msg;
    msg << "degenerate polarization: witness W = {";
    // Vertices are named v1..vN here, v1 being vertex 0 of the graph file.
    for (std::size_t i = 0; i < w->size(); ++i) msg << (i ? "," : "") << 'v' << (*w)[i] + 1;
    msg << "}";
    throw DegeneratePolarization(msg.str(), *w);
  }
  const ScaledPolarization sp = scale(g, phi, degree);
  const std::int64_t dd = sp.denom;
  const int n = g.num_vertices();
  const std::uint32_t full = (1u << n) - 1;

  StabilityCondition out;
  out.degree = degree;
  out.host = g;
  for (const EdgeSubset& sub : connected_spanning_subgraphs(g, budget)) {
    const std::int64_t total = degree - (g.num_edges() - sub.size());
    std::vector<Multidegree>& chosen = out.sigma[sub];
    if (n == 1) {
      chosen.push_back({total});
      continue;
    }
    // Per-subset constants of the scaled inequality
    //   | 2D Σ_W d + 2D r_in + D r_cross - φ'(W) | < D e_G(W).
    std::vector<std::int64_t> offset(full + 1, 0), bound(full + 1, 0);
    for (std::uint32_t w = 1; w < full; ++w) {
      std::int64_t r_in = 0, r_cross = 0, e_g = 0, phi_w = 0;
      for (int i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        const bool a = w >> e.u & 1u, b = w >> e.v & 1u;
        if (sub.contains(i)) {
          e_g += (a != b);
        } else if (a && b) {
          ++r_in;
        } else if (a != b) {
          ++r_cross;
        }
      }
      for (int v = 0; v < n; ++v) {
        if (w >> v & 1u) phi_w += sp.scaled[v];
      }
      offset[w] = 2 * dd * r_in + dd * r_cross - phi_w;
      bound[w] = dd * e_g;
    }
    // Singleton subsets bound each coordinate: lo < 2D d_v + offset < hi.
    std::vector<std::int64_t> lo(n), hi(n);
    for (int v = 0; v < n; ++v) {
      const std::uint32_t w = 1u << v;
      lo[v] = floor_div(-bound[w] - offset[w], 2 * dd) + 1;
      hi[v] = ceil_div(bound[w] - offset[w], 2 * dd) - 1;
    }
    Multidegree md(n, 0);
    auto accept = [&]() {
      for (std::uint32_t w = 1; w < full; ++w) {
        std::int64_t s = 0;
        for (int v = 0; v < n; ++v) {
          if (w >> v & 1u) s += md[v];
        }
        const std::int64_t val = 2 * dd * s + offset[w];
        if (val <= -bound[w] || val >= bound[w]) return false;
      }
      return true;
    };
    auto recurse = [&](auto&& self, int v, std::int64_t partial) -> void {
      if (v == n - 1) {
        md[v] = total - partial;
        if (md[v] >= lo[v] && md[v] <= hi[v] && accept()) chosen.push_back(md);
        return;
      }
      for (std::int64_t x = lo[v]; x <= hi[v]; ++x) {
        md[v] = x;
        self(self, v + 1, partial + x);
      }
    };
    recurse(recurse, 0, 0);
    std::sort(chosen.begin(), chosen.end());
  }
  return out;
}

std::string StabilityReport::summary() const {
  std::ostringstream os;
  if (ok()) {
    os << "OK: axioms (1),(2) hold; |σ(G)| = c(G) for all " << subgraphs << " subgraphs";
    return os.str();
  }
  os << "FAIL: " << violations.size() << " violation(s)";
  for (const auto& v : violations) os << "\n  " << v;
  return os.str();
}

StabilityReport validate_stability(const StabilityCondition& sigma, const Budget& budget) {
  StabilityReport report;
  const StableGraph& g = sigma.host;
  const auto subgraphs = connected_spanning_subgraphs(g, budget);
  report.subgraphs = static_cast<int>(subgraphs.size());

  for (const auto& [sub, mds] : sigma.sigma) {
    if (!std::binary_search(subgraphs.begin(), subgraphs.end(), sub)) {
      report.violations.push_back("entry for " + subset_text(sub) + " is not a connected spanning subgraph");
    }
  }

  for (const EdgeSubset& sub : subgraphs) {
    const auto it = sigma.sigma.find(sub);
    if (it == sigma.sigma.end()) {
      report.violations.push_back("σ(G) missing for G = " + subset_text(sub));
      continue;
    }
    const auto& mds = it->second;
    const std::string where = "G = " + subset_text(sub);

    bool well_formed = true;
    for (const Multidegree& md : mds) {
      if (!degree_set_membership(g, sub, sigma.degree, md)) {
        report.violations.push_back(where + ": " + md_text(md) + " not in S^d(G)");
        well_formed = false;
      }
    }
    if (!well_formed) continue;

    // Axiom (1): adding an edge and a unit at either endpoint stays in σ.
    for (int e = 0; e < g.num_edges(); ++e) {
      if (sub.contains(e)) continue;
      EdgeSubset bigger = sub;
      bigger.insert(e);
      const auto up = sigma.sigma.find(bigger);
      for (const Multidegree& md : mds) {
        for (const int v : {g.edge(e).u, g.edge(e).v}) {
          Multidegree next = md;
          ++next[v];
          if (up == sigma.sigma.end() || !std::binary_search(up->second.begin(), up->second.end(), next)) {
            report.violations.push_back("axiom (1): " + where + ", " + md_text(md) + " + e_" + std::to_string(v) +
                                        " via edge " + std::to_string(e) + " missing from σ(G ∪ {e})");
          }
          if (g.edge(e).is_loop()) break;
        }
      }
    }

    // Axiom (2): pairwise inequivalent, and exactly c(G) of them.
    const TwisterLattice lattice(g, sub);
    std::map<Multidegree, Multidegree> seen;
    for (const Multidegree& md : mds) {
      auto [pos, inserted] = seen.emplace(lattice.reduce(md), md);
      if (!inserted) {
        report.violations.push_back("axiom (2): " + where + ", " + md_text(md) + " and " + md_text(pos->second) +
                                    " are twister-equivalent");
      }
    }
    const BigInt c = spanning_tree_count(g, sub);
    if (BigInt(static_cast<long long>(mds.size())) != c) {
      report.violations.push_back("count: " + where + " has |σ(G)| = " + std::to_string(mds.size()) +
                                  " but c(G) = " + c.to_string());
    }
  }
  return report;
}

std::int64_t pushed_degree(const StableGraph& g, EdgeSubset s, std::int64_t degree) {
  std::int64_t non_loops = 0;
  for (int i : s.indices()) non_loops += !g.edge(i).is_loop();
  return degree + non_loops;
}

std::vector<int> surviving_edges(const StableGraph& g, EdgeSubset s) {
  std::vector<int> out;
  for (int i = 0; i < g.num_edges(); ++i) {
    if (!s.contains(i)) out.push_back(i);
  }
  return out;
}

StabilityCondition push_stability(const StabilityCondition& sigma, EdgeSubset s, const Budget& budget) {
  const StableGraph& g = sigma.host;
  if (!s.is_subset_of(EdgeSubset::all(g.num_edges()))) throw InvalidInput("push_stability: S is not a set of edges of Γ");
  if (!is_non_disconnecting(g, s)) throw InvalidInput("push_stability: removing S = " + subset_text(s) + " disconnects Γ");

  Multidegree shift(g.num_vertices(), 0);
  for (int i : s.indices()) {
    ++shift[g.edge(i).u];
    if (!g.edge(i).is_loop()) ++shift[g.edge(i).v];
  }
  const std::vector<int> old_index = surviving_edges(g, s);

  StabilityCondition out;
  out.degree = pushed_degree(g, s, sigma.degree);
  out.host = delete_edges(g, s);
  for (const EdgeSubset& sub : connected_spanning_subgraphs(out.host, budget)) {
    EdgeSubset in_host;
    for (int j : sub.indices()) in_host.insert(old_index[j]);
    std::vector<Multidegree> mds = sigma.at(in_host);
    for (Multidegree& md : mds) {
      for (std::size_t v = 0; v < md.size(); ++v) md[v] += shift[v];
    }
    std::sort(mds.begin(), mds.end());
    out.sigma.emplace(sub, std::move(mds));
  }
  return out;
}

}  // namespace jchi
