#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"
#include "rwstab/dimacs.hpp"
#include "rwstab/rose_window.hpp"

namespace rwstab {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string command = env + " " + RWSTAB_CLI + " " + args + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) result.out.append(buffer, got);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rwstab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write_graph(const std::string& name, const Graph& g) const {
    std::ofstream out(path(name));
    write_dimacs(out, g);
  }

  fs::path dir_;
};

TEST_F(CliTest, ClassifyNamedInstances) {
  auto w3 = run("classify 5 4 1");
  ASSERT_EQ(w3.code, 0);
  auto j = nlohmann::json::parse(w3.out);
  EXPECT_EQ(j["stability_kind"], "NontriviallyUnstable");
  EXPECT_EQ(j["families"], nlohmann::json::array({"W3"}));

  auto bip = run("classify 6 2 1");
  ASSERT_EQ(bip.code, 0);
  j = nlohmann::json::parse(bip.out);
  EXPECT_EQ(j["stability_kind"], "TriviallyUnstable");
  const auto& reasons = j["reasons"];
  EXPECT_NE(std::find(reasons.begin(), reasons.end(), "bipartite_with_nontrivial_aut"), reasons.end());

  EXPECT_EQ(run("classify 5 0 1").code, 2);
  EXPECT_EQ(run("classify 5 1").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST_F(CliTest, SweepIsDeterministicAcrossJobs) {
  EXPECT_EQ(run("sweep 3 20 --jobs 4 -o " + path("four.json")).code, 0);
  EXPECT_EQ(run("sweep 3 20 --jobs 1 -o " + path("one.json")).code, 0);
  const auto four = slurp(path("four.json"));
  EXPECT_FALSE(four.empty());
  EXPECT_EQ(four, slurp(path("one.json")));
  auto j = nlohmann::json::parse(four);
  EXPECT_EQ(j["tool_version"], "1.0.0");
  EXPECT_TRUE(j["summary"]["passed"]);
  EXPECT_TRUE(j["summary"]["violations"]["V1"].empty());
}

TEST_F(CliTest, SweepArgumentErrors) {
  EXPECT_EQ(run("sweep 20 3").code, 2);
  EXPECT_EQ(run("sweep 3 5 --jobs 0").code, 2);
  EXPECT_EQ(run("sweep 3 5 --format xml").code, 2);
  EXPECT_EQ(run("sweep 3 5 -o " + path("missing/dir/out.json")).code, 2);
}

TEST_F(CliTest, EnvironmentJobsOnlyWithoutFlag) {
  EXPECT_EQ(run("sweep 3 6", "RWSTAB_JOBS=bogus").code, 2);
  EXPECT_EQ(run("sweep 3 6 --jobs 2", "RWSTAB_JOBS=bogus").code, 0);
  EXPECT_EQ(run("sweep 3 6", "RWSTAB_JOBS=3").code, 0);
}

TEST_F(CliTest, CsvHasOneRowPerTriple) {
  auto csv = run("sweep 3 8 --format csv");
  ASSERT_EQ(csv.code, 0);
  std::size_t lines = std::count(csv.out.begin(), csv.out.end(), '\n');
  std::size_t triples = 0;
  for (int n = 3; n <= 8; ++n) triples += static_cast<std::size_t>((n / 2) * (n / 2));
  EXPECT_EQ(lines, triples + 1);
  EXPECT_EQ(csv.out.rfind("n,a,r,", 0), 0u);
}

TEST_F(CliTest, AutOnDimacsFiles) {
  write_graph("c6.col", oracle::cycle(6));
  auto c6 = run("aut " + path("c6.col"));
  ASSERT_EQ(c6.code, 0);
  EXPECT_EQ(c6.out.rfind("order 12\n", 0), 0u);

  const Graph pet = oracle::petersen();
  ASSERT_EQ(oracle::count_automorphisms(pet), 120u);
  write_graph("petersen.col", pet);
  auto p = run("aut " + path("petersen.col"));
  ASSERT_EQ(p.code, 0);
  EXPECT_EQ(p.out.rfind("order 120\n", 0), 0u);

  std::ofstream(path("bad.col")) << "p edge 2 1\ne 0 1\n";
  EXPECT_EQ(run("aut " + path("bad.col")).code, 2);
  const std::string diag = RWSTAB_CLI + std::string(" aut ") + path("bad.col") + " 2>&1";
  FILE* pipe = popen(diag.c_str(), "r");
  char buffer[512] = {};
  fread(buffer, 1, sizeof buffer - 1, pipe);
  pclose(pipe);
  EXPECT_NE(std::string(buffer).find("line 2"), std::string::npos) << buffer;
  EXPECT_EQ(run("aut " + path("absent.col")).code, 2);
}

TEST_F(CliTest, CdcFiles) {
  ASSERT_EQ(run("cdc 5 1 2 -o " + path("g.col")).code, 0);
  const Graph g = read_dimacs_file(path("g.col"));
  EXPECT_EQ(g.vertex_count(), 20u);
  EXPECT_EQ(g.edges().size(), 40u);
  EXPECT_EQ(g, oracle::direct_product_k2(oracle::rose_window(5, 1, 2)));
  EXPECT_EQ(g, build_cdc(RoseWindowParams::make(5, 1, 2)));

  auto split = run("cdc 6 2 1");
  ASSERT_EQ(split.code, 0);
  std::istringstream in(split.out);
  EXPECT_EQ(oracle::component_count(read_dimacs(in)), 2u);
  EXPECT_EQ(run("cdc 6 1 6").code, 2);
  EXPECT_EQ(run("cdc 5 1 2 -o " + path("nope/g.col")).code, 2);
}

TEST_F(CliTest, PropsExitCodes) {
  auto small = run("props 3 8");
  EXPECT_EQ(small.code, 0) << small.out;
  EXPECT_NE(small.out.find("odd-cover-map"), std::string::npos);
  EXPECT_EQ(run("props 3 10").code, 1);
  EXPECT_EQ(run("props 9 4").code, 2);
}

}  // namespace
}  // namespace rwstab
