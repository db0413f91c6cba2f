#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "jchi/canonical.hpp"
#include "jchi/enumerate.hpp"
#include "jchi/exact.hpp"
#include "jchi/graph_cache.hpp"
#include "jchi/matrix_tree.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run jchi_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = jchi::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("jchi-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string file(const std::string& name, const std::string& contents) const {
    std::ofstream(path / name) << contents;
    return (path / name).string();
  }
};

const char* kBanana =
    R"({"vertices":[{"genus":0},{"genus":0}],"edges":[[0,1],[0,1]],)"
    R"("legs":[{"vertex":0,"label":1},{"vertex":1,"label":2}]})";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("graphs") {
    TempDir tmp;
    const std::string cache = "--cache-dir=" + tmp.path.string();
    const Run r = jchi_run({"graphs", "--genus", "1", "--legs", "1", cache});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 2);
    const Run g0 = jchi_run({"graphs", "--genus", "2", "--legs", "0", "--genus0-only", cache, "--format", "csv"});
    CHECK(g0.code == 0);
    CHECK(count_lines(g0.out) == 4);  // header + 3 rows
    CHECK(g0.out.rfind("key,aut,spanning_trees,vertices,edges\n", 0) == 0);
    CHECK(jchi_run({"graphs", "--genus", "0", "--legs", "2", "--no-cache"}).code == 2);
    const Run json = jchi_run({"graphs", "--genus", "1", "--legs", "2", "--no-cache", "--format", "json"});
    CHECK(json.out.find("\"spanning_trees\"") != std::string::npos);
  }

  TEST_CASE("graph budget exit code") {
    CHECK(jchi_run({"graphs", "--genus", "0", "--legs", "7", "--no-cache", "--graph-budget", "5"}).code == 3);
    CHECK(jchi_run({"chi", "bar", "--genus", "0", "--legs", "7", "--graph-budget", "5"}).code == 3);
  }

  TEST_CASE("chi") {
    const Run both = jchi_run({"chi", "jacobian", "--genus", "1", "--legs", "2", "--route", "both"});
    CHECK(both.code == 0);
    CHECK(both.out == "1 1\n");
    CHECK(jchi_run({"chi", "open", "--genus", "1", "--legs", "1"}).out == "-1/12\n");
    CHECK(jchi_run({"chi", "bar", "--genus", "0", "--legs", "5"}).out == "7\n");
    const Run deg = jchi_run({"chi", "jacobian", "--genus", "2", "--legs", "0", "--degree", "5"});
    CHECK(deg.out == "1/4\n");
    CHECK(deg.err.find("degree 5") != std::string::npos);
    CHECK(jchi_run({"chi", "jacobian", "--genus", "2", "--legs", "0", "--degree", "-3"}).out == "1/4\n");
    const Run csv = jchi_run({"chi", "jacobian", "--genus", "1", "--legs", "1", "--route", "both", "--format", "csv"});
    CHECK(csv.out == "g,n,route,value\n1,1,strata,1/2\n1,1,closed,1/2\n");
    CHECK(jchi_run({"chi", "bar", "--genus", "0", "--legs", "2"}).code == 2);
    CHECK(jchi_run({"chi", "sideways", "--genus", "1", "--legs", "1"}).code == 2);
    CHECK(jchi_run({}).code == 2);
    CHECK(jchi_run({"--help"}).code == 0);
  }

  TEST_CASE("printed rationals parse back") {
    const Run r = jchi_run({"chi", "jacobian", "--genus", "2", "--legs", "3", "--route", "both"});
    std::istringstream in(r.out);
    std::string a, b;
    in >> a >> b;
    CHECK(jchi::Rational::parse(a).to_string() == a);
    CHECK(jchi::Rational::parse(b) == jchi::Rational::parse(a));
  }

  TEST_CASE("stability subcommands") {
    TempDir tmp;
    const std::string graph = tmp.file("g.json", kBanana);
    const std::string good = tmp.file("p.json", R"({"degree":0,"phi":["1/3","-1/3"]})");
    const std::string bad = tmp.file("p0.json", R"({"degree":0,"phi":["0","0"]})");
    const std::string sigma = (tmp.path / "s.json").string();
    const std::string pushed = (tmp.path / "t.json").string();

    CHECK(jchi_run({"stability", "from-polarization", graph, good, "-o", sigma}).code == 0);
    const Run check = jchi_run({"stability", "check", sigma});
    CHECK(check.code == 0);
    CHECK(check.out == "OK: axioms (1),(2) hold; |σ(G)| = c(G) for all 3 subgraphs\n");

    const Run degenerate = jchi_run({"stability", "from-polarization", graph, bad});
    CHECK(degenerate.code == 2);
    CHECK(degenerate.err.find("W = {v1}") != std::string::npos);

    const Run push = jchi_run({"stability", "push", sigma, "--remove", "0", "-o", pushed});
    CHECK(push.code == 0);
    CHECK(push.err.find("d_S = 1") != std::string::npos);
    CHECK(jchi_run({"stability", "check", pushed}).code == 0);
    CHECK(jchi_run({"stability", "push", sigma, "--remove", "0,1"}).code == 2);
    CHECK(jchi_run({"stability", "push", sigma, "--remove", "7"}).code == 2);

    // a broken σ file exits 1
    std::string text;
    {
      std::ifstream in(sigma);
      std::getline(in, text, '\0');
    }
    const auto pos = text.find("[[0,0],[1,-1]]");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 14, "[[0,0]]");
    const std::string broken = tmp.file("broken.json", text);
    CHECK(jchi_run({"stability", "check", broken}).code == 1);
    CHECK(jchi_run({"stability", "check", tmp.file("junk.json", "{")}).code == 2);
    CHECK(jchi_run({"stability", "check", (tmp.path / "missing.json").string()}).code == 2);
  }

  TEST_CASE("verify") {
    const Run r = jchi_run({"verify", "--gmax", "2", "--nmax", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("MISMATCH") == std::string::npos);
    CHECK(r.out.find("ALL EQUAL") != std::string::npos);
    const Run g0 = jchi_run({"verify", "--gmax", "0", "--nmax", "6"});
    CHECK(g0.code == 0);
    CHECK(g0.out.find("34") != std::string::npos);
    const Run skip = jchi_run({"verify", "--gmax", "1", "--nmax", "5", "--graph-budget", "30"});
    CHECK(skip.code == 0);
    CHECK(skip.out.find("SKIP") != std::string::npos);
    CHECK(skip.out.find("EQUAL") != std::string::npos);
  }

  TEST_CASE("output is deterministic") {
    const std::vector<std::string> args = {"graphs", "--genus", "1", "--legs", "3", "--no-cache", "--format", "json"};
    CHECK(jchi_run(args).out == jchi_run(args).out);
    const std::vector<std::string> v = {"verify", "--gmax", "1", "--nmax", "4", "--format", "json"};
    CHECK(jchi_run(v).out == jchi_run(v).out);
  }

  TEST_CASE("cache round trip") {
    TempDir tmp;
    const jchi::GraphCache cache(tmp.path);
    const auto fresh = cache.get_or_compute(2, 1, false);
    REQUIRE(fs::exists(cache.file_for(2, 1, false)));
    const auto loaded = cache.load(2, 1, false);
    REQUIRE(loaded);
    REQUIRE(loaded->size() == fresh.size());
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      CHECK(jchi::aut_order((*loaded)[i]) == jchi::aut_order(fresh[i]));
      CHECK(jchi::spanning_tree_count((*loaded)[i]) == jchi::spanning_tree_count(fresh[i]));
      CHECK(jchi::canonical_key((*loaded)[i]) == jchi::canonical_key(fresh[i]));
    }
    // another version is ignored and recomputed
    std::string text;
    {
      std::ifstream in(cache.file_for(2, 1, false));
      std::getline(in, text, '\0');
    }
    const auto pos = text.find("\"version\":1");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 11, "\"version\":0");
    std::ofstream(cache.file_for(2, 1, false)) << text;
    CHECK_FALSE(cache.load(2, 1, false));
    CHECK(cache.get_or_compute(2, 1, false).size() == fresh.size());
    CHECK(cache.load(2, 1, false));
  }

  TEST_CASE("cache directory resolution") {
    CHECK(jchi::resolve_cache_dir(std::string("/x/y")) == fs::path("/x/y"));
    ::setenv("JCHI_CACHE_DIR", "/from/env", 1);
    CHECK(jchi::resolve_cache_dir(std::nullopt) == fs::path("/from/env"));
    ::unsetenv("JCHI_CACHE_DIR");
    CHECK(jchi::resolve_cache_dir(std::nullopt) == fs::path("jchi-cache"));
  }
}
