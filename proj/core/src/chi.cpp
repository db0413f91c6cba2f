#include "jchi/chi.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "jchi/canonical.hpp"
#include "jchi/enumerate.hpp"
#include "jchi/matrix_tree.hpp"

namespace jchi {
namespace {

// Per-sweep cache of vertex factors χ(M_{g(v),n(v)}).
class VertexFactors {
 public:
  const Rational& get(int genus, int valence) {
    auto it = cache_.find({genus, valence});
    if (it == cache_.end()) it = cache_.emplace(std::pair{genus, valence}, hz_chi_open(genus, valence)).first;
    return it->second;
  }

  Rational product(const StableGraph& g) {
    Rational p(1);
    for (int v = 0; v < g.num_vertices(); ++v) p *= get(g.genus(v), g.valence(v));
    return p;
  }

 private:
  std::map<std::pair<int, int>, Rational> cache_;
};

}  // namespace

Rational hz_chi_open(int genus, int legs) {
  require_stable_range(genus, legs);
  const unsigned g2 = 2u * static_cast<unsigned>(genus);
  Rational value = bernoulli(g2);
  if (legs % 2 == 1) value = -value;
  value *= Rational(static_cast<long long>(2 * genus - 1));
  value *= Rational(factorial(g2 + static_cast<unsigned>(legs) - 3));
  value /= Rational(factorial(g2));
  return value;
}

Rational chi_open_stratum(const StableGraph& g) {
  g.validate();
  VertexFactors factors;
  return factors.product(g) / Rational(aut_order(g));
}

int chi_generalized_jacobian(const StableGraph& g) {
  if (!g.is_connected()) throw InvalidInput("chi_generalized_jacobian: graph is not connected");
  return (g.all_genus_zero() && g.b1() == 0) ? 1 : 0;
}

BigInt chi_fine_cj(const StableGraph& g, const StabilityCondition& sigma, const Budget& budget) {
  if (!(sigma.host == g)) throw InvalidInput("chi_fine_cj: σ lives on a different graph");
  budget.require_subsets(g.num_edges(), "chi_fine_cj");
  BigInt total(0);
  const std::uint64_t count = std::uint64_t{1} << g.num_edges();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const EdgeSubset s(mask);
    if (!is_non_disconnecting(g, s)) continue;
    const StableGraph gs = delete_edges(g, s);
    const int chi = chi_generalized_jacobian(gs);
    if (chi == 0) continue;
    const StabilityCondition pushed = push_stability(sigma, s, budget);
    const auto& top = pushed.at(EdgeSubset::all(gs.num_edges()));
    total += BigInt(static_cast<long long>(top.size())) * BigInt(chi);
  }
  return total;
}

const char* route_name(Route r) { return r == Route::Strata ? "strata" : "closed"; }

std::string chi_table_json(const std::vector<ChiRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const ChiRow& r : rows) {
    out.push_back({{"g", r.genus}, {"n", r.legs}, {"route", r.route}, {"value", r.value.to_string()}});
  }
  return out.dump();
}

std::string chi_table_csv(const std::vector<ChiRow>& rows) {
  std::ostringstream os;
  os << "g,n,route,value\n";
  for (const ChiRow& r : rows) os << r.genus << ',' << r.legs << ',' << r.route << ',' << r.value << '\n';
  return os.str();
}

const char* status_name(VerifyCell::Status s) {
  switch (s) {
    case VerifyCell::Status::Equal: return "EQUAL";
    case VerifyCell::Status::Mismatch: return "MISMATCH";
    case VerifyCell::Status::Skipped: return "SKIP";
    case VerifyCell::Status::Unstable: return "UNSTABLE";
  }
  return "?";
}

bool VerifyReport::all_equal() const {
  for (const VerifyCell& c : cells) {
    if (c.status == VerifyCell::Status::Mismatch) return false;
    if (c.fiber_checked && !c.fiber_ok) return false;
  }
  return true;
}

std::string VerifyReport::table() const {
  std::ostringstream os;
  os << std::left << std::setw(4) << "g" << std::setw(4) << "n" << std::setw(16) << "strata" << std::setw(16)
     << "closed" << std::setw(10) << "status" << "fiber\n";
  for (const VerifyCell& c : cells) {
    if (c.status == VerifyCell::Status::Unstable) continue;
    os << std::setw(4) << c.genus << std::setw(4) << c.legs << std::setw(16)
       << (c.strata ? c.strata->to_string() : "-") << std::setw(16) << (c.closed ? c.closed->to_string() : "-")
       << std::setw(10) << status_name(c.status)
       << (c.fiber_checked ? (c.fiber_ok ? "ok" : "BAD") : "-");
    if (!c.note.empty()) os << "  " << c.note;
    os << '\n';
  }
  return os.str();
}

Rational ChiEngine::chi_open(int genus, int legs) {
  require_stable_range(genus, legs);
  {
    std::lock_guard lock(mutex_);
    if (auto it = open_.find({genus, legs}); it != open_.end()) return it->second.value;
  }
  Rational v = hz_chi_open(genus, legs);
  std::lock_guard lock(mutex_);
  open_.try_emplace({genus, legs}, Entry{v, "harer-zagier"});
  return v;
}

Rational ChiEngine::chi_bar(int genus, int legs) {
  require_stable_range(genus, legs);
  {
    std::lock_guard lock(mutex_);
    if (auto it = bar_.find({genus, legs}); it != bar_.end()) return it->second.value;
  }
  VertexFactors factors;
  Rational sum;
  for_each_stable_graph(
      genus, legs, false,
      [&](const StableGraph& g) { sum += factors.product(g) / Rational(aut_order(g)); }, budget_);
  std::lock_guard lock(mutex_);
  bar_.try_emplace({genus, legs}, Entry{sum, "stratification"});
  return sum;
}

Rational ChiEngine::chi_jacobian_strata(int genus, int legs) {
  require_stable_range(genus, legs);
  VertexFactors factors;
  Rational sum;
  for_each_stable_graph(
      genus, legs, true,
      [&](const StableGraph& g) {
        sum += Rational(spanning_tree_count(g)) * factors.product(g) / Rational(aut_order(g));
      },
      budget_);
  return sum;
}

Rational ChiEngine::chi_jacobian_closed(int genus, int legs) {
  require_stable_range(genus, legs);
  const BigInt scale = BigInt(1LL << genus) * factorial(static_cast<unsigned>(genus));
  return chi_bar(0, 2 * genus + legs) / Rational(scale);
}

std::map<std::pair<int, int>, ChiEngine::Entry> ChiEngine::bar_table() const {
  std::lock_guard lock(mutex_);
  return bar_;
}

VerifyReport ChiEngine::verify_main_theorem(int g_max, int n_max, const VerifyOptions& options) {
  if (g_max < 0 || n_max < 0) throw InvalidInput("verify: bounds must be nonnegative");
  VerifyReport report;
  for (int g = 0; g <= g_max; ++g) {
    for (int n = 0; n <= n_max; ++n) {
      VerifyCell cell;
      cell.genus = g;
      cell.legs = n;
      if (2 * g - 2 + n <= 0) {
        cell.status = VerifyCell::Status::Unstable;
        report.cells.push_back(std::move(cell));
        continue;
      }
      try {
        cell.strata = chi_jacobian_strata(g, n);
        cell.closed = chi_jacobian_closed(g, n);
        cell.status = (*cell.strata == *cell.closed) ? VerifyCell::Status::Equal : VerifyCell::Status::Mismatch;
        if (2 * g + n <= options.fiber_max_points) {
          cell.fiber_checked = true;
          cell.fiber_ok = fiber_census(g, n, budget_).consistent();
        }
      } catch (const BudgetExceeded& e) {
        cell.status = VerifyCell::Status::Skipped;
        cell.note = e.what();
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

Rational chi_bar(int genus, int legs, const Budget& budget) { return ChiEngine(budget).chi_bar(genus, legs); }

Rational chi_jacobian_strata(int genus, int legs, const Budget& budget) {
  return ChiEngine(budget).chi_jacobian_strata(genus, legs);
}

Rational chi_jacobian_closed(int genus, int legs, const Budget& budget) {
  return ChiEngine(budget).chi_jacobian_closed(genus, legs);
}

}  // namespace jchi
