#include "cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jchi/canonical.hpp"
#include "jchi/chi.hpp"
#include "jchi/enumerate.hpp"
#include "jchi/graph_cache.hpp"
#include "jchi/graph_io.hpp"
#include "jchi/matrix_tree.hpp"
#include "jchi/stability.hpp"
#include "jchi/stability_io.hpp"

namespace jchi::cli {
namespace {

using nlohmann::json;

struct Config {
  std::optional<std::string> cache_dir;
  bool no_cache = false;
  int edge_budget = Budget{}.max_edges;
  std::uint64_t subset_budget = Budget{}.max_subsets;
  std::uint64_t graph_budget = Budget{}.max_graphs;
  std::string format = "text";

  Budget budget() const {
    Budget b;
    b.max_edges = edge_budget;
    b.max_subsets = subset_budget;
    b.max_graphs = graph_budget;
    return b;
  }
};

void emit(std::ostream& out, const std::filesystem::path& path, const std::string& text) {
  if (path.empty()) {
    out << text << '\n';
  } else {
    write_text_file_atomic(path, text + "\n");
  }
}

// --- graphs -------------------------------------------------------------

int cmd_graphs(const Config& cfg, int genus, int legs, bool genus0_only, std::ostream& out) {
  require_stable_range(genus, legs);
  std::vector<StableGraph> graphs;
  if (cfg.no_cache) {
    graphs = enumerate_stable_graphs(genus, legs, genus0_only, cfg.budget());
  } else {
    graphs = GraphCache(resolve_cache_dir(cfg.cache_dir)).get_or_compute(genus, legs, genus0_only, cfg.budget());
  }

  if (cfg.format == "json") {
    json rows = json::array();
    for (const StableGraph& g : graphs) {
      json vertices = json::array();
      for (int v = 0; v < g.num_vertices(); ++v) vertices.push_back({{"genus", g.genus(v)}, {"valence", g.valence(v)}});
      rows.push_back({{"key", canonical_key(g).hex()},
                      {"aut", aut_order(g).to_string()},
                      {"spanning_trees", spanning_tree_count(g).to_string()},
                      {"vertices", vertices},
                      {"graph", json::parse(graph_to_json(g))}});
    }
    out << rows.dump(1) << '\n';
    return kOk;
  }

  const char sep = cfg.format == "csv" ? ',' : ' ';
  if (cfg.format == "csv") out << "key,aut,spanning_trees,vertices,edges\n";
  for (const StableGraph& g : graphs) {
    out << canonical_key(g).hex() << sep << aut_order(g) << sep << spanning_tree_count(g) << sep;
    // genus:valence per vertex, then the edge list
    for (int v = 0; v < g.num_vertices(); ++v) out << (v ? ";" : "") << g.genus(v) << ':' << g.valence(v);
    out << sep;
    for (int i = 0; i < g.num_edges(); ++i) out << (i ? ";" : "") << g.edges()[i].u << '-' << g.edges()[i].v;
    out << '\n';
  }
  return kOk;
}

// --- chi ----------------------------------------------------------------

int cmd_chi(const Config& cfg, const std::string& target, int genus, int legs, const std::string& route,
            std::optional<long long> degree, std::ostream& out, std::ostream& err) {
  require_stable_range(genus, legs);
  ChiEngine engine(cfg.budget());
  std::vector<ChiRow> rows;
  if (target == "open") {
    rows.push_back({genus, legs, route_name(Route::Closed), engine.chi_open(genus, legs)});
  } else if (target == "bar") {
    rows.push_back({genus, legs, route_name(Route::Strata), engine.chi_bar(genus, legs)});
  } else {
    if (degree) err << "degree " << *degree << " accepted; the Euler characteristic does not depend on it\n";
    if (route == "strata" || route == "both") {
      rows.push_back({genus, legs, route_name(Route::Strata), engine.chi_jacobian_strata(genus, legs)});
    }
    if (route == "closed" || route == "both") {
      rows.push_back({genus, legs, route_name(Route::Closed), engine.chi_jacobian_closed(genus, legs)});
    }
  }
  if (target != "jacobian" && degree) err << "--degree applies to jacobian only; ignored\n";

  if (cfg.format == "json") {
    out << chi_table_json(rows) << '\n';
  } else if (cfg.format == "csv") {
    out << chi_table_csv(rows);
  } else {
    for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? " " : "") << rows[i].value;
    out << '\n';
  }
  if (rows.size() == 2 && rows[0].value != rows[1].value) {
    err << "MISMATCH: strata " << rows[0].value << " != closed " << rows[1].value << '\n';
    return kMismatch;
  }
  return kOk;
}

// --- stability ----------------------------------------------------------

int cmd_stability_check(const Config& cfg, const std::string& file, std::ostream& out) {
  const StabilityCondition sigma = load_stability_file(file);
  const StabilityReport report = validate_stability(sigma, cfg.budget());
  out << report.summary() << '\n';
  return report.ok() ? kOk : kMismatch;
}

int cmd_stability_from_polarization(const Config& cfg, const std::string& graph_file, const std::string& pol_file,
                                    const std::string& output, std::ostream& out) {
  const StableGraph g = load_graph_file(graph_file);
  const PolarizationFile pol = load_polarization_file(pol_file);
  const StabilityCondition sigma = sigma_from_polarization(g, pol.phi, pol.degree, cfg.budget());
  emit(out, output, stability_to_json(sigma));
  return kOk;
}

int cmd_stability_push(const Config& cfg, const std::string& file, const std::vector<int>& remove,
                       const std::string& output, std::ostream& out, std::ostream& err) {
  const StabilityCondition sigma = load_stability_file(file);
  for (int i : remove) {
    if (i < 0 || i >= sigma.host.num_edges()) {
      throw InvalidInput("--remove: edge index " + std::to_string(i) + " out of range");
    }
  }
  const EdgeSubset s = EdgeSubset::of(remove);
  const StabilityCondition pushed = push_stability(sigma, s, cfg.budget());
  err << "d_S = " << pushed.degree << '\n';
  emit(out, output, stability_to_json(pushed));
  return kOk;
}

// --- verify -------------------------------------------------------------

int cmd_verify(const Config& cfg, int g_max, int n_max, int fiber_max, std::ostream& out) {
  ChiEngine engine(cfg.budget());
  VerifyOptions options;
  options.fiber_max_points = fiber_max;
  const VerifyReport report = engine.verify_main_theorem(g_max, n_max, options);
  if (cfg.format == "json") {
    json cells = json::array();
    for (const VerifyCell& c : report.cells) {
      if (c.status == VerifyCell::Status::Unstable) continue;
      json cell = {{"g", c.genus}, {"n", c.legs}, {"status", status_name(c.status)}};
      if (c.strata) cell["strata"] = c.strata->to_string();
      if (c.closed) cell["closed"] = c.closed->to_string();
      if (c.fiber_checked) cell["fiber_ok"] = c.fiber_ok;
      if (!c.note.empty()) cell["note"] = c.note;
      cells.push_back(cell);
    }
    out << json{{"all_equal", report.all_equal()}, {"cells", cells}}.dump(1) << '\n';
  } else {
    out << report.table();
    out << (report.all_equal() ? "ALL EQUAL" : "MISMATCH FOUND") << '\n';
  }
  return report.all_equal() ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact orbifold Euler characteristics of moduli of curves and universal compactified Jacobians"};
  app.name("jchi");
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  Config cfg;
  app.add_option("--cache-dir", cfg.cache_dir, "Graph-table cache directory (default $JCHI_CACHE_DIR or ./jchi-cache)");
  app.add_flag("--no-cache", cfg.no_cache, "Do not read or write the graph-table cache");
  app.add_option("--edge-budget", cfg.edge_budget, "Largest edge count for exhaustive edge-subset scans")
      ->check(CLI::PositiveNumber);
  app.add_option("--subset-budget", cfg.subset_budget, "Largest number of edge subsets per scan")
      ->check(CLI::PositiveNumber);
  app.add_option("--graph-budget", cfg.graph_budget, "Largest number of stable graphs per enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  int genus = 0;
  int legs = 0;

  auto* graphs = app.add_subcommand("graphs", "List G(g,n) with canonical keys, |Aut| and spanning-tree counts");
  bool genus0_only = false;
  graphs->add_option("--genus", genus)->required();
  graphs->add_option("--legs", legs)->required();
  graphs->add_flag("--genus0-only", genus0_only, "Only graphs with every vertex of genus 0");

  auto* chi = app.add_subcommand("chi", "Orbifold Euler characteristics");
  std::string target;
  std::string route = "strata";
  std::optional<long long> degree;
  chi->add_option("target", target)->required()->check(CLI::IsMember({"open", "bar", "jacobian"}));
  chi->add_option("--genus", genus)->required();
  chi->add_option("--legs", legs)->required();
  chi->add_option("--route", route, "jacobian only")->check(CLI::IsMember({"strata", "closed", "both"}));
  chi->add_option("--degree", degree, "Echoed and ignored: the answer is the same for every degree");

  auto* stability = app.add_subcommand("stability", "Stability conditions");
  stability->require_subcommand(1);
  std::string file;
  std::string pol_file;
  std::string output;
  std::vector<int> remove;
  auto* check = stability->add_subcommand("check", "Validate a stability file");
  check->add_option("file", file)->required()->check(CLI::ExistingFile);
  auto* from_pol = stability->add_subcommand("from-polarization", "Build σ_φ from a graph and a polarization");
  from_pol->add_option("graph", file)->required()->check(CLI::ExistingFile);
  from_pol->add_option("polarization", pol_file)->required()->check(CLI::ExistingFile);
  from_pol->add_option("-o,--output", output, "Output file (default stdout)");
  auto* push = stability->add_subcommand("push", "Push σ along removed edges S");
  push->add_option("file", file)->required()->check(CLI::ExistingFile);
  push->add_option("--remove", remove, "Edge indices of S")->delimiter(',');
  push->add_option("-o,--output", output, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Compare both routes to χ(J̄_{g,n}) on a grid");
  int g_max = 0;
  int n_max = 0;
  int fiber_max = VerifyOptions{}.fiber_max_points;
  verify->add_option("--gmax", g_max)->required()->check(CLI::NonNegativeNumber);
  verify->add_option("--nmax", n_max)->required()->check(CLI::NonNegativeNumber);
  verify->add_option("--fiber-max", fiber_max, "Run the gluing census when 2g+n is at most this");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*graphs) return cmd_graphs(cfg, genus, legs, genus0_only, out);
    if (*chi) return cmd_chi(cfg, target, genus, legs, route, degree, out, err);
    if (*check) return cmd_stability_check(cfg, file, out);
    if (*from_pol) return cmd_stability_from_polarization(cfg, file, pol_file, output, out);
    if (*push) return cmd_stability_push(cfg, file, remove, output, out, err);
    if (*verify) return cmd_verify(cfg, g_max, n_max, fiber_max, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace jchi::cli
