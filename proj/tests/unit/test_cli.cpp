#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli/commands.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = permcodes::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("permcodes_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Cli, Distance) {
  const auto r = run({"distance", "--a", "1 2 3 4", "--b", "2 3 4 1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("d_B=1\n"), std::string::npos);
  EXPECT_NE(r.out.find("d_C=0\n"), std::string::npos);
  const auto bad = run({"distance", "--a", "1 2 3 4", "--b", "2 3 1"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("length mismatch"), std::string::npos);
  EXPECT_EQ(run({"distance", "--a", "1 2 q"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"sphere"}).code, 2);
  EXPECT_EQ(run({"sphere", "--n", "13"}).code, 2);
  EXPECT_EQ(run({"--format", "yaml", "sphere", "--n", "4"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, BoundsGv) {
  const auto r = run({"bounds", "--n", "4", "--d", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("GV=2\n"), std::string::npos);
  EXPECT_NE(r.out.find("gv_rounding="), std::string::npos);
}

TEST(Cli, StructuredOutputIsJson) {
  const auto r = run({"--format", "structured", "sphere", "--n", "4"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["command"], "sphere");
  EXPECT_EQ(doc["results"]["profile"].size(), 5u);
  EXPECT_EQ(doc["results"]["profile"][3]["sphere"], 4);
}

TEST(Cli, ConstructThenVerifyAllFibers) {
  const auto dir = scratch("fibers");
  const auto made = run({"construct-cyclic", "--n", "6", "--d", "4", "--all-fibers", "--out", dir.string()});
  ASSERT_EQ(made.code, 0) << made.err;
  std::vector<std::string> args{"verify"};
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".txt") args.push_back(e.path().string());
  }
  EXPECT_EQ(args.size(), 50u);
  const auto checked = run(args);
  EXPECT_EQ(checked.code, 0) << checked.err;
  EXPECT_NE(checked.out.find("status=ok"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, VerifyRejectsCorruptedCodebook) {
  const auto dir = scratch("corrupt");
  fs::create_directories(dir);
  const auto path = (dir / "bad.txt").string();
  {
    std::ofstream f(path);
    f << "# metric=cyclic\n# n=4\n# d=4\n# label=bad\n1 2 3 4\n1 2 4 3\n";
  }
  const auto r = run({"verify", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("VIOLATION"), std::string::npos);
  {
    std::ofstream f(path);
    f << "# metric=cyclic\n# n=4\n# d=4\n# label=bad\n1 2 3\n";
  }
  EXPECT_EQ(run({"verify", path}).code, 2);
  fs::remove_all(dir);
}

TEST(Cli, WitnessBookVerifies) {
  const auto dir = scratch("witness");
  const auto path = (dir / "w.txt").string();
  ASSERT_EQ(run({"witnesses", "--n", "7", "--d", "4", "--out", path}).code, 0);
  EXPECT_EQ(run({"verify", path}).code, 0);
  fs::remove_all(dir);
}

TEST(Cli, EncodeAndAuxIndex) {
  const auto r = run({"encode-sys", "--n", "24", "--d", "4", "--perm",
                      "1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("codeword="), std::string::npos);
  EXPECT_EQ(run({"encode-sys", "--n", "24", "--d", "4", "--perm", "1 2 3"}).code, 2);
  const auto a = run({"aux-set", "--n", "24", "--d", "4", "--index", "0"});
  EXPECT_NE(a.out.find("member=1 1 1 1 1 1 1 1 1 1 1\n"), std::string::npos);
  EXPECT_EQ(run({"aux-set", "--n", "10", "--d", "4", "--index", "0"}).code, 2);
}

TEST(Cli, ReportsIgnoreWorkerCount) {
  const std::vector<std::string> cmd{"verify", "--systematic", "--n", "24", "--d", "4", "--samples", "3000"};
  auto one = cmd, eight = cmd;
  one.insert(one.begin(), {"--workers", "1"});
  eight.insert(eight.begin(), {"--workers", "8"});
  EXPECT_EQ(run(one).out, run(eight).out);
}
