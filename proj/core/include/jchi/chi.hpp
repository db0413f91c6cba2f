#pragma once

// Orbifold Euler characteristics.
//
//   χ(M_{g,n})        Harer–Zagier closed form
//   χ(M^Γ)            Π_v χ(M_{g(v),n(v)}) / |Aut Γ|
//   χ(M̄_{g,n})        Σ_{Γ ∈ G(g,n)} χ(M^Γ)
//   χ(J̄_{g,n}) strata  Σ_{Γ ∈ G(g,n)^0} c(Γ) χ(M^Γ)
//   χ(J̄_{g,n}) closed  χ(M̄_{0,2g+n}) / (2^g g!)
//
// None of these depend on the degree d of the compactified Jacobian, so no
// function here takes one.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jchi/errors.hpp"
#include "jchi/exact.hpp"
#include "jchi/stability.hpp"
#include "jchi/stable_graph.hpp"

namespace jchi {

/// χ_orb(M_{g,n}) = B_{2g} (-1)^n (2g-1) (2g+n-3)! / (2g)!.
Rational hz_chi_open(int genus, int legs);

/// χ_orb of the open stratum M^Γ, for arbitrary vertex genera.
Rational chi_open_stratum(const StableGraph& g);

/// χ of a generalized Jacobian with dual graph `g`: 1 for a tree of genus-0
/// vertices, 0 otherwise. Requires `g` connected.
int chi_generalized_jacobian(const StableGraph& g);

/// χ_top of the fine compactified Jacobian J̄_σ(C) of a curve with dual graph
/// Γ, summed over its strata: Σ_S |σ_S(Γ_S)| χ(J(C_S)) over non-disconnecting
/// S, with σ_S from push_stability.
BigInt chi_fine_cj(const StableGraph& g, const StabilityCondition& sigma, const Budget& budget = {});

/// Which route produced a value.
enum class Route { Strata, Closed };
const char* route_name(Route r);

struct ChiRow {
  int genus = 0;
  int legs = 0;
  std::string route;
  Rational value;
};

std::string chi_table_json(const std::vector<ChiRow>& rows);
/// Header "g,n,route,value".
std::string chi_table_csv(const std::vector<ChiRow>& rows);

struct VerifyCell {
  enum class Status { Equal, Mismatch, Skipped, Unstable };
  int genus = 0;
  int legs = 0;
  Status status = Status::Unstable;
  std::optional<Rational> strata;
  std::optional<Rational> closed;
  bool fiber_checked = false;
  bool fiber_ok = true;
  std::string note;
};

const char* status_name(VerifyCell::Status s);

struct VerifyReport {
  std::vector<VerifyCell> cells;
  /// No mismatch and no fiber inconsistency among the computed cells.
  bool all_equal() const;
  std::string table() const;
};

struct VerifyOptions {
  /// Run fiber_census on cells with 2g + n at most this.
  int fiber_max_points = 8;
};

/// Memoized χ tables shared across routes. Thread-safe.
class ChiEngine {
 public:
  explicit ChiEngine(Budget budget = {}) : budget_(budget) {}

  const Budget& budget() const { return budget_; }

  Rational chi_open(int genus, int legs);
  Rational chi_bar(int genus, int legs);
  Rational chi_jacobian_strata(int genus, int legs);
  Rational chi_jacobian_closed(int genus, int legs);

  /// Both routes for every cell with g <= g_max and n <= n_max; budget
  /// overruns mark a cell Skipped instead of aborting the sweep.
  VerifyReport verify_main_theorem(int g_max, int n_max, const VerifyOptions& options = {});

  struct Entry {
    Rational value;
    std::string source;  // which computation produced the value
  };
  /// Snapshot of the χ(M̄_{g,n}) memo table.
  std::map<std::pair<int, int>, Entry> bar_table() const;

 private:
  Budget budget_;
  mutable std::mutex mutex_;
  std::map<std::pair<int, int>, Entry> open_;
  std::map<std::pair<int, int>, Entry> bar_;
};

/// Convenience wrappers over a fresh engine.
Rational chi_bar(int genus, int legs, const Budget& budget = {});
Rational chi_jacobian_strata(int genus, int legs, const Budget& budget = {});
Rational chi_jacobian_closed(int genus, int legs, const Budget& budget = {});

}  // namespace jchi
