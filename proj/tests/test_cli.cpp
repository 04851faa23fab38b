#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <vector>

#include "locolor/cli.hpp"
#include "locolor/constructions.hpp"
#include "locolor/io.hpp"

using namespace locolor;
namespace fs = std::filesystem;

namespace {

int run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"locolor"};
  argv.insert(argv.end(), args.begin(), args.end());
  return cli_dispatch(static_cast<int>(argv.size()), argv.data());
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / "locolor-cli-test") {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("verify exit codes") {
  TempDir tmp;
  save_graph(path_graph(4), tmp.file("p4.graph"));
  save_coloring({{1, 2, 3, 1}, 3}, tmp.file("good.coloring"));
  save_coloring({{1, 2, 1, 2}, 2}, tmp.file("bad.coloring"));

  const std::string g = tmp.file("p4.graph");
  CHECK(run({"verify", "--kind", "nl", "--graph", g.c_str(), "--coloring",
             tmp.file("good.coloring").c_str()}) == 0);
  CHECK(run({"verify", "--kind", "nl", "--graph", g.c_str(), "--coloring",
             tmp.file("bad.coloring").c_str()}) == 1);
  CHECK(run({"verify", "--kind", "locating", "--graph", g.c_str(), "--coloring",
             tmp.file("good.coloring").c_str(), "--json"}) == 0);
  // proper accepts the NL-violating 2-coloring
  CHECK(run({"verify", "--kind", "proper", "--graph", g.c_str(), "--coloring",
             tmp.file("bad.coloring").c_str()}) == 0);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({"verify", "--kind", "nl"}) == 2);            // missing options
  CHECK(run({"nonsense"}) == 2);                          // unknown subcommand
  CHECK(run({"verify", "--kind", "sideways", "--graph", "x", "--coloring",
             "y"}) == 2);                                 // bad enum value
  TempDir tmp;
  std::ofstream(tmp.file("garbage.graph")) << "not a graph\n";
  std::ofstream(tmp.file("f.coloring")) << "k 1\n0 1\n";
  CHECK(run({"verify", "--kind", "nl", "--graph",
             tmp.file("garbage.graph").c_str(), "--coloring",
             tmp.file("f.coloring").c_str()}) == 2);
  CHECK(run({"verify", "--kind", "nl", "--graph",
             tmp.file("missing.graph").c_str(), "--coloring",
             tmp.file("f.coloring").c_str()}) == 2);
}

TEST_CASE("solve: feasibility and budget exhaustion") {
  TempDir tmp;
  save_graph(path_graph(24), tmp.file("p24.graph"));
  const std::string g = tmp.file("p24.graph");
  CHECK(run({"solve", "--invariant", "chi-nl", "--graph", g.c_str(), "--k",
             "4"}) == 0);
  CHECK(run({"solve", "--invariant", "chi-nl", "--graph", g.c_str(), "--k",
             "3"}) == 1);
  CHECK(run({"solve", "--invariant", "chi-nl", "--graph", g.c_str(), "--k",
             "4", "--budget", "1"}) == 3);
  CHECK(run({"solve", "--invariant", "chi-nl", "--graph", g.c_str(),
             "--budget", "1"}) == 3);
  CHECK(run({"solve", "--invariant", "chi", "--graph", g.c_str(), "--json"}) ==
        0);
  CHECK(run({"solve", "--invariant", "chi-l", "--graph", g.c_str()}) == 0);
}

TEST_CASE("construct writes graph, coloring and manifest") {
  TempDir tmp;
  const std::string prefix = tmp.file("fam");
  CHECK(run({"construct", "--family", "nl-family", "--delta", "3", "--s", "4",
             "--out", prefix.c_str()}) == 0);
  Graph g = load_graph(prefix + ".graph");
  CHECK(g.vertex_count() == 144);
  Coloring phi = load_coloring(prefix + ".coloring", g.vertex_count());
  CHECK(check_nl(g, phi).ok());
  CHECK(fs::exists(prefix + ".json"));

  const std::string gp = tmp.file("gap");
  CHECK(run({"construct", "--family", "gap-pair", "--k", "1", "--out",
             gp.c_str()}) == 0);
  CHECK(load_graph(gp + ".graph").vertex_count() == 5);
  CHECK(load_graph(gp + "_h.graph").vertex_count() == 4);

  CHECK(run({"construct", "--family", "gpqr", "--p", "2", "--q", "2", "--r",
             "3"}) == 2);  // excluded family
}

TEST_CASE("bounds subcommand") {
  CHECK(run({"bounds", "--formula", "path", "--n", "25"}) == 0);
  CHECK(run({"bounds", "--formula", "general", "--k", "3"}) == 0);
  CHECK(run({"bounds", "--formula", "avgdeg", "--k", "4", "--avgdeg", "599/100",
             "--json"}) == 0);
  CHECK(run({"bounds", "--formula", "maxdeg", "--k", "4", "--delta", "4"}) ==
        2);  // delta >= k rejected
  CHECK(run({"bounds", "--formula", "unknown"}) == 2);
}

TEST_CASE("reduce subcommand") {
  TempDir tmp;
  save_graph(path_graph(3), tmp.file("p3.graph"));
  save_coloring({{1, 2, 1}, 3}, tmp.file("f3.coloring"));
  const std::string g = tmp.file("p3.graph");
  const std::string prefix = tmp.file("gstar");

  CHECK(run({"reduce", "--graph", g.c_str(), "--report", "--out",
             prefix.c_str(), "--json"}) == 0);
  Graph gstar = load_graph(prefix + ".graph");
  CHECK(gstar.vertex_count() == 33);
  CHECK(gstar.edge_count() == 68);

  const std::string lifted = tmp.file("lifted");
  CHECK(run({"reduce", "--graph", g.c_str(), "--lift",
             tmp.file("f3.coloring").c_str(), "--out", lifted.c_str()}) == 0);
  Coloring big = load_coloring(lifted + ".coloring", gstar.vertex_count());
  CHECK(check_nl(gstar, big).ok());

  const std::string extracted = tmp.file("back");
  CHECK(run({"reduce", "--graph", g.c_str(), "--extract",
             (lifted + ".coloring").c_str(), "--out", extracted.c_str()}) == 0);
  Coloring back = load_coloring(extracted + ".coloring", 3);
  CHECK(check_proper(path_graph(3), back).ok());
}

TEST_CASE("corpus subcommand") {
  TempDir tmp;
  const std::string dir = tmp.file("corpus");
  CHECK(run({"corpus", "--seed", "0", "--size", "40", "--out", dir.c_str()}) ==
        0);
  CHECK(fs::exists(dir + "/manifest.json"));
  CHECK(fs::exists(dir + "/path_2.graph"));
  CHECK(fs::exists(dir + "/gstar_cycle_4.graph"));
  int files = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    (void)entry;
    ++files;
  }
  CHECK(files == 41);  // 40 graphs + manifest
}
