#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cayley/find_subgroup.hpp"
#include "cayley/testkit.hpp"
#include "corpus.hpp"
#include "oracle.hpp"

using namespace cayley;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

// Runs a shell command; stderr is folded into `out`.
Result run(const std::string& args) {
  const std::string cmd = "sh -c '" + args + "' 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string cli() { return CAYLEY_CLI_PATH; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cayley_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string write(const std::string& name, const CayleyTable& t) {
    return write(name, format_table(t));
  }

  fs::path dir_;
};

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_F(CliTest, ValidateReportsAbelianFlag) {
  const auto z6 = write("z6.txt", testkit::build_cyclic(6));
  auto r = run(cli() + " validate " + z6);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("abelian: yes"), std::string::npos);
  EXPECT_NE(r.out.find("n: 6"), std::string::npos);

  const auto d3 = write("d3.txt", testkit::build_dihedral(3));
  r = run(cli() + " validate --assoc full " + d3);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("abelian: no"), std::string::npos);
}

TEST_F(CliTest, ValidateRejectsBadTables) {
  const auto bad = write("bad.txt", "3\n0 1 2\n1 1 0\n2 0 1\n");
  auto r = run(cli() + " validate " + bad);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("NotLatinSquare"), std::string::npos);

  const auto loop = corpus::all_loops(5);
  const auto it = std::find_if(loop.begin(), loop.end(), [](const auto& t) {
    return check_associativity(t, AssociativityMode::full).has_value();
  });
  ASSERT_NE(it, loop.end());
  const auto path = write("loop.txt", *it);
  for (const char* mode : {"light", "full"}) {
    r = run(cli() + " validate --assoc " + mode + " " + path);
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("NotAssociative"), std::string::npos);
  }

  r = run(cli() + " validate " + (dir_ / "missing.txt").string());
  EXPECT_EQ(r.code, 1);
}

TEST_F(CliTest, FindExitCodes) {
  const auto z6 = write("z6.txt", testkit::build_cyclic(6));
  auto r = run(cli() + " find " + z6 + " 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("subgroup: 0 2 4\n"), std::string::npos);

  EXPECT_EQ(run(cli() + " find " + z6 + " 4").code, 3);
  EXPECT_EQ(run(cli() + " find " + z6 + " 0").code, 3);

  const auto d3 = write("d3.txt", testkit::build_dihedral(3));
  r = run(cli() + " find " + d3 + " 2");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("abelian"), std::string::npos);

  const auto a4 = write("a4.txt", testkit::build_alternating(4));
  EXPECT_EQ(run(cli() + " find " + a4 + " 6").code, 2);

  const auto bad = write("bad.txt", "2\n0 0\n1 1\n");
  EXPECT_EQ(run(cli() + " find " + bad + " 1").code, 1);
}

TEST_F(CliTest, FindJsonAndTrace) {
  const auto t = testkit::build_abelian(std::vector<std::uint64_t>{3, 2});
  const auto path = write("z3z2.txt", t);
  const auto r = run(cli() + " find --json --trace " + path + " 3");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["m"], 3);
  EXPECT_EQ(j["subgroup"], (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(j["generators"], (std::vector<int>{2}));
  ASSERT_EQ(j["trace"].size(), 2u);
  EXPECT_EQ(j["trace"][0]["branch"], "pruned");
  EXPECT_EQ(j["trace"][1]["branch"], "early_exit");
  EXPECT_FALSE(j["trace"][1].contains("running_generated_order"));

  const auto plain = run(cli() + " find " + path + " 3 --json");
  EXPECT_FALSE(nlohmann::json::parse(plain.out).contains("trace"));

  const auto text = run(cli() + " find --trace " + path + " 3");
  EXPECT_NE(text.out.find("1: chose 1, order 2, pruned"), std::string::npos);
}

TEST_F(CliTest, EnumerateListsSubgroups) {
  const auto v4 = write("v4.txt", testkit::build_abelian(
                                      std::vector<std::uint64_t>{2, 2}));
  auto r = run(cli() + " enumerate " + v4);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 5u);
  EXPECT_EQ(r.out.substr(0, 5), "1: 0\n");

  const auto z1 = write("z1.txt", "1\n0\n");
  r = run(cli() + " enumerate " + z1);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 1u);

  const auto z100 = write("z100.txt", testkit::build_cyclic(100));
  EXPECT_EQ(run(cli() + " enumerate " + z100).code, 1);
  r = run(cli() + " enumerate --allow-large " + z100);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 9u);
}

TEST_F(CliTest, GenEmitsParseableTables) {
  auto r = run(cli() + " gen cyclic 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n0 1\n1 0\n");

  r = run(cli() + " gen abelian 2 3");
  ASSERT_EQ(r.code, 0);
  const auto t = parse_table(r.out);
  EXPECT_EQ(t.order(), 6u);
  bool has_order_six = false;
  for (ElementId a = 0; a < 6; ++a) has_order_six |= element_order(t, a) == 6;
  EXPECT_TRUE(has_order_six);

  EXPECT_EQ(run(cli() + " gen symmetric 6").code, 1);
  EXPECT_EQ(run(cli() + " gen dihedral 2").code, 1);
  EXPECT_EQ(run(cli() + " gen nonsense 3").code, 1);
}

TEST_F(CliTest, GenPipesIntoValidateAndFind) {
  const std::vector<std::string> specs = {
      "cyclic 12",   "abelian 4 2",   "abelian 2 2 3", "dihedral 5",
      "quaternion",  "symmetric 4",   "alternating 4", "product 3 4",
      "random 60 --seed 9"};
  for (const auto& spec : specs) {
    const auto r = run(cli() + " gen " + spec + " | " + cli() +
                       " validate --assoc full -");
    EXPECT_EQ(r.code, 0) << spec << "\n" << r.out;
  }

  const std::vector<std::vector<std::uint64_t>> groups = {
      {12}, {4, 2}, {2, 2, 3}, {2, 2, 2, 2}, {3, 9}};
  for (const auto& inv : groups) {
    const auto t = testkit::build_abelian(inv);
    std::string args;
    for (auto k : inv) args += " " + std::to_string(k);
    for (auto m : oracle::divisors(t.order())) {
      const auto r = run(cli() + " gen abelian" + args + " | " + cli() +
                         " find --json - " + std::to_string(m));
      ASSERT_EQ(r.code, 0) << r.out;
      const auto j = nlohmann::json::parse(r.out);
      const auto h = find_subgroup(t, m);
      EXPECT_EQ(j["subgroup"].get<std::vector<ElementId>>(), h.elements);
      EXPECT_EQ(j["generators"].get<std::vector<ElementId>>(), h.generators);
    }
  }
}

TEST_F(CliTest, Bench) {
  auto r = run(cli() + " bench --min-n 64 --max-n 64 --min-sample 0.001");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("fitted_exponent: absent"), std::string::npos);

  r = run(cli() +
          " bench --min-n 64 --max-n 256 --family cyclic --csv "
          "--min-sample 0.001");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 4u);
  EXPECT_EQ(r.out.substr(0, 23), "n,wall_time_s,family,m\n");

  EXPECT_EQ(run(cli() + " bench --min-n 16").code, 1);
  EXPECT_EQ(run(cli() + " bench --max-entries 100").code, 1);
}
