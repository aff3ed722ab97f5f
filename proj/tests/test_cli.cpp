#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "srgswitch/cli.hpp"

using namespace srgsw;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "srgswitch");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> records(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    out.push_back(json::parse(line));
    EXPECT_EQ(out.back()["schema"], cli::kRecordSchema);
  }
  return out;
}

std::filesystem::path temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "srgswitch-cli-test";
  std::filesystem::create_directories(dir);
  const auto p = dir / name;
  std::filesystem::remove(p);
  std::filesystem::remove(p.string() + ".idx");
  return p;
}

const std::string kCoT8 = graph6::encode(complement(triangular_graph(8)));

}  // namespace

TEST(Cli, ConstructMatchesLibrary) {
  const auto r = run({"construct", "complement-triangular", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, kCoT8 + "\n");
}

TEST(Cli, VerifyFromStdin) {
  const auto r = run({"--format", "records", "verify"}, kCoT8 + "\n" + graph6::encode(cycle_graph(6)) + "\n");
  ASSERT_EQ(r.code, 0);
  const auto rs = records(r.out);
  ASSERT_EQ(rs.size(), 2U);
  EXPECT_EQ(rs[0]["classification"], "primitive-srg");
  EXPECT_EQ(rs[0]["params"], json::array({28, 15, 6, 10}));
  EXPECT_EQ(rs[1]["classification"], "regular-not-srg");
  EXPECT_TRUE(rs[1]["params"].is_null());
}

TEST(Cli, SpectrumMatchesLibrary) {
  const auto r = run({"--format", "records", "spectrum", "--params", "16,10,6,6"});
  ASSERT_EQ(r.code, 0);
  const auto s = derive_spectrum({16, 10, 6, 6});
  const auto j = records(r.out).at(0);
  EXPECT_EQ(j["theta1"], s.theta1);
  EXPECT_EQ(j["theta2"], s.theta2);
  EXPECT_EQ(j["m1"], s.m1);
  EXPECT_EQ(j["m2"], s.m2);
  EXPECT_EQ(j["rho"], *s.rho);
  EXPECT_EQ(run({"spectrum", "--params", "10,3,0,2"}).code, 1);
  EXPECT_EQ(run({"spectrum", "--params", "10,3"}).code, 2);
}

TEST(Cli, SwitchMatchesLibrary) {
  const auto r = run({"switch", "--set", "0,1,2,3"}, kCoT8);
  ASSERT_EQ(r.code, 0);
  const auto want = switch_graph(complement(triangular_graph(8)), SwitchingSet::parse("0,1,2,3"));
  EXPECT_EQ(r.out, graph6::encode(want) + "\n");
  EXPECT_EQ(run({"switch", "--set", "0,99"}, kCoT8).code, 1);
  EXPECT_EQ(run({"switch", "--set", "a"}, kCoT8).code, 2);
}

TEST(Cli, CanonAndIso) {
  const Graph g = chang_graph(1);
  const auto [f, grp] = canonical_form_with_group(g);
  const auto r = run({"--format", "records", "canon", "named:chang:1"});
  ASSERT_EQ(r.code, 0);
  const auto j = records(r.out).at(0);
  EXPECT_EQ(j["digest"], f.digest.hex());
  EXPECT_EQ(j["aut_order"], "384");
  EXPECT_EQ(j["canonical"], graph6::encode(canonical_graph(g, f)));

  const auto no = run({"iso", "named:lattice:4", "named:shrikhande:16"});
  EXPECT_EQ(no.code, 0);
  EXPECT_EQ(no.out, "not isomorphic\n");
  const auto yes = run({"--format", "records", "iso", "named:petersen:10", "named:complement-triangular:5"});
  EXPECT_TRUE(records(yes.out).at(0)["isomorphic"].get<bool>());
  EXPECT_EQ(run({"iso", "named:petersen:10"}).code, 2);
}

TEST(Cli, FindSetsMatchesLibrary) {
  const Graph g = complement(triangular_graph(8));
  const auto want = collect_sets(g, spectrum_of(g), SetStrategy::cliques());
  const auto r = run({"--strategy", "cliques", "--format", "records", "find-sets"}, kCoT8);
  ASSERT_EQ(r.code, 0);
  const auto rs = records(r.out);
  ASSERT_EQ(rs.size(), want.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    EXPECT_EQ(rs[i]["set"].get<std::vector<Vertex>>(), std::vector<Vertex>(want[i].vertices().begin(), want[i].vertices().end()));
}

TEST(Cli, ClosureRecordsAndOutputFiles) {
  const auto path = temp_path("ct8.g6");
  const std::vector<std::string> args{"--orbits", "--max-h", "10", "--format", "records", "--out", path.string(),
                                      "closure", "named:complement-triangular:8"};
  const auto r = run(args);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rs = records(r.out);
  ASSERT_EQ(rs.size(), 5U);
  EXPECT_EQ(rs.back()["kind"], "closure-summary");
  EXPECT_EQ(rs.back()["classes"], 4);
  EXPECT_FALSE(rs.back()["truncated"].get<bool>());

  // appending a second run keeps one header and doubles the lines
  ASSERT_EQ(run(args).code, 0);
  std::ifstream g6(path), idx(path.string() + ".idx");
  EXPECT_EQ(graph6::read_all(g6).size(), 8U);
  std::string line;
  int headers = 0, lines = 0;
  while (std::getline(idx, line)) {
    if (line.starts_with("#")) ++headers;
    else ++lines;
  }
  EXPECT_EQ(headers, 1);
  EXPECT_EQ(lines, 8);
}

TEST(Cli, ClosureThm2) {
  const auto r = run({"--format", "records", "closure-thm2", "named:complement-clebsch:16"});
  ASSERT_EQ(r.code, 0);
  const auto rs = records(r.out);
  EXPECT_EQ(rs.back()["classes"], 2);
  EXPECT_EQ(rs.front()["params"], json::array({16, 6, 2, 2}));
}

TEST(Cli, EmbedTwoGraphCatalog) {
  const auto e = run({"--format", "records", "embed-check", "named:complement-clebsch:16"});
  ASSERT_EQ(e.code, 0);
  const auto j = records(e.out).at(0);
  EXPECT_EQ(j["rank"], 10);
  EXPECT_EQ(j["relative_bound"], "16");
  EXPECT_EQ(j["inner_values"], json::array({"-1/5", "1/5"}));

  const auto t = run({"--format", "records", "two-graph", "named:triangular:5"});
  ASSERT_EQ(t.code, 0);
  EXPECT_EQ(records(t.out).at(0)["seidel_eigenvalues"], json::array({3, -3}));

  const auto c = run({"--format", "records", "catalog-check"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(records(c.out).size(), kSwitchableCatalog.size());
}

TEST(Cli, ConfigAndPrecedence) {
  const auto cfg = temp_path("run.cfg");
  {
    std::ofstream f(cfg);
    f << "strategy = cliques\nformat = records\nseed = named:complement-triangular:8\nmax_graphs = 1\n";
  }
  const auto r = run({"--config", cfg.string(), "closure"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto summary = records(r.out).back();
  EXPECT_TRUE(summary["truncated"].get<bool>());
  EXPECT_EQ(summary["graphs_visited"], 1);
  // a flag overrides the file
  const auto t = run({"--config", cfg.string(), "--format", "table", "closure"});
  EXPECT_NE(t.out.find("TRUNCATED"), std::string::npos);
  EXPECT_EQ(run({"--config", "/nonexistent/x.cfg", "verify"}).code, 2);
}

TEST(Cli, VertexCapSources) {
  EXPECT_EQ(run({"--vertex-cap", "10", "verify", "named:complement-clebsch:16"}).code, 3);
  ::setenv(kVertexCapEnv, "12", 1);
  EXPECT_EQ(run({"verify", "named:complement-clebsch:16"}).code, 3);
  EXPECT_EQ(run({"--vertex-cap", "20", "verify", "named:complement-clebsch:16"}).code, 0);
  ::unsetenv(kVertexCapEnv);
  set_vertex_cap(kDefaultVertexCap);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify"}, "not-a-graph\n").code, 2);
  EXPECT_EQ(run({"verify", "/nonexistent/file.g6"}).code, 2);
  EXPECT_EQ(run({"closure", "named:petersen:10"}).code, 1);
  EXPECT_EQ(run({"--budget", "10", "find-sets", "named:complement-triangular:8"}).code, 3);
  EXPECT_EQ(run({"--threads", "0", "verify", "named:petersen:10"}).code, 1);
  EXPECT_EQ(run({"--format", "xml", "verify"}).code, 2);
}
