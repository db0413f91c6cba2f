#pragma once

// Degree-d stability conditions on a stable graph Γ.
//
// For a connected spanning subgraph G ⊆ Γ the degree set S^d_Γ(G) holds the
// integer vectors on V(Γ) with coordinate sum d - |E(Γ) \ E(G)|. The twister
// lattice Tw(G) is generated by the negated Laplacian rows of G; its index in
// the zero-sum lattice is c(G). A stability condition σ picks, for every G,
// a complete set of Tw(G)-orbit representatives in S^d_Γ(G) such that adding
// an edge e = (v1, v2) to G and a unit at v1 or v2 stays inside σ.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jchi/errors.hpp"
#include "jchi/exact.hpp"
#include "jchi/stable_graph.hpp"

namespace jchi {

using Multidegree = std::vector<std::int64_t>;
using Polarization = std::vector<Rational>;

/// Σ_v md(v) = d - |E(Γ) \ G| (and md has one entry per vertex).
bool degree_set_membership(const StableGraph& host, EdgeSubset sub, std::int64_t degree,
                           const Multidegree& md);

/// Tw_{G,v} for G = (V, sub): edge counts to the other vertices, minus the
/// non-loop degree at v. Loops contribute nothing.
Multidegree twister_vector(const StableGraph& g, EdgeSubset sub, int v);
Multidegree twister_vector(const StableGraph& g, int v);

/// Tw(G) together with a Hermite normal form of its projection that drops
/// the last coordinate (injective on zero-sum vectors).
class TwisterLattice {
 public:
  /// Requires (V, sub) connected; throws InvalidInput otherwise.
  TwisterLattice(const StableGraph& g, EdgeSubset sub);

  int dimension() const { return n_; }
  const std::vector<Multidegree>& generators() const { return generators_; }
  /// Π of the HNF pivots; equals c(G).
  std::int64_t index() const;
  const std::vector<std::int64_t>& pivots() const { return pivots_; }

  bool contains(const Multidegree& x) const;
  /// The representative of x + Tw(G) whose first n-1 coordinates lie in the
  /// HNF box [0, pivot_i). Preserves the coordinate sum.
  Multidegree reduce(const Multidegree& x) const;
  bool equivalent(const Multidegree& a, const Multidegree& b) const;

 private:
  int n_ = 0;
  std::vector<Multidegree> generators_;
  std::vector<std::vector<std::int64_t>> basis_;  // row i has pivot in column i
  std::vector<std::int64_t> pivots_;
};

bool twister_membership(const TwisterLattice& lattice, const Multidegree& x);

/// The c(G) fundamental-box representatives of S^d_Γ(G) / Tw(G), sorted.
std::vector<Multidegree> orbit_representatives(const StableGraph& host, EdgeSubset sub, std::int64_t degree);

/// σ stored extensionally: connected spanning subgraph -> sorted multidegrees.
struct StabilityCondition {
  std::int64_t degree = 0;
  StableGraph host;
  std::map<EdgeSubset, std::vector<Multidegree>> sigma;

  /// σ(G); throws InvalidInput when G has no entry.
  const std::vector<Multidegree>& at(EdgeSubset sub) const;
};

/// Thrown for a degenerate polarization; carries the offending vertex set.
class DegeneratePolarization : public InvalidInput {
 public:
  DegeneratePolarization(const std::string& what, std::vector<int> witness)
      : InvalidInput(what), witness_(std::move(witness)) {}
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

/// A proper nonempty W ⊂ V with φ(W) - e_Γ(W)/2 integral, if one exists
/// (smallest bitmask first). Throws InvalidInput unless Σφ = d.
std::optional<std::vector<int>> degeneracy_witness(const StableGraph& g, const Polarization& phi,
                                                   std::int64_t degree);
bool is_nondegenerate(const StableGraph& g, const Polarization& phi, std::int64_t degree);

/// σ_φ: d̲ ∈ σ_φ(G) iff for every proper nonempty W ⊂ V
///   | Σ_W d̲ + r_in(W) + r_cross(W)/2 - φ(W) | < e_G(W)/2
/// where r_in / r_cross count removed edges (Γ \ G) inside / crossing W and
/// e_G(W) counts edges of G crossing W.
StabilityCondition sigma_from_polarization(const StableGraph& g, const Polarization& phi, std::int64_t degree,
                                           const Budget& budget = {});

struct StabilityReport {
  int subgraphs = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks degree-set membership, axiom (1), pairwise Tw-inequivalence and
/// |σ(G)| = c(G) for every connected spanning G. Violations are reported with
/// a witness, never thrown.
StabilityReport validate_stability(const StabilityCondition& sigma, const Budget& budget = {});

/// d + #(non-loop edges in S).
std::int64_t pushed_degree(const StableGraph& g, EdgeSubset s, std::int64_t degree);

/// σ_S on Γ_S = Γ minus S (edges renumbered as in delete_edges): every
/// σ(G) translated by the number of S-edges meeting each vertex, which is
/// deg_S(v) - |S_v| with loops counted twice in deg_S. The result has degree
/// pushed_degree(...). Throws InvalidInput if S disconnects Γ.
StabilityCondition push_stability(const StabilityCondition& sigma, EdgeSubset s, const Budget& budget = {});

/// Γ_S edge j -> the Γ edge it came from.
std::vector<int> surviving_edges(const StableGraph& g, EdgeSubset s);

}  // namespace jchi
