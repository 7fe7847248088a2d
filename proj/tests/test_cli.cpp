#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "curvesi/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = curvesi::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("curvesi-cli-" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST(Cli, WordCommands) {
  EXPECT_EQ(run({"canon", "ba"}).out, "ab\n");
  EXPECT_EQ(run({"canon", "--quotient-inverse", "BA"}).out, "ab\n");
  EXPECT_EQ(run({"canon", "Aaba"}).out, "ab\n");
  EXPECT_EQ(run({"invert", "aab"}).out, "BAA\n");
  EXPECT_EQ(run({"primitive", "abab"}).out, "false\n");
  EXPECT_EQ(run({"primitive", "aab"}).out, "true\n");
}

TEST(Cli, SelfIntersection) {
  EXPECT_EQ(run({"si", "--surface", "pants", "aB"}).out, "1\n");
  EXPECT_EQ(run({"si", "--surface", "torus", "aB"}).out, "0\n");
  EXPECT_EQ(run({"si", "--surface", "torus", "aaabaaBAbAABabaB"}).out, "15\n");
  EXPECT_EQ(run({"si", "--surface", "pants", "aaabaaBAbAABabaB"}).out, "34\n");
  EXPECT_EQ(run({"si", "--surface", "pants", "--linked-pairs", "aaabaaBAbAABabaB"}).out, "71\n");
}

TEST(Cli, Polynomials) {
  EXPECT_EQ(run({"fricke", "aB"}).out, "x*y - z\n");
  EXPECT_EQ(run({"fricke", ""}).out, "2\n");
  const Result r = run({"fricke", "aaabaBaabaBAAbAB"});
  EXPECT_EQ(curvesi::TracePolynomial::parse(r.out.substr(0, r.out.size() - 1)),
            curvesi::trace_polynomial("aaabaBaabaBAAbAB"));
  EXPECT_EQ(run({"equiv", "aaabaaBAbAABabaB", "aaabaBaabaBAAbAB"}).out, "true equal\n");
  EXPECT_EQ(run({"equiv", "ab", "aB"}).out, "false\n");
  EXPECT_EQ(run({"equiv", "a", "baB"}).out, "true equal\n");
}

TEST(Cli, Numeric) {
  EXPECT_EQ(run({"fingerprint", "aB"}).out, "64 196\n");
  EXPECT_EQ(run({"fingerprint", "aB", "--point", "3,2,1", "--point", "4,3,1"}).out, "64 196\n");
  EXPECT_EQ(run({"fingerprint", "ab", "--point", "5,1,1", "--point", "4,3,1"}).out, "25 36\n");
  EXPECT_EQ(run({"length", "a", "--traces", "3,0,0"}).out, "1.9248473002384139\n");
  EXPECT_EQ(run({"length", "a", "--traces", "2,0,0"}).code, 2);
}

TEST(Cli, ExitCodes) {
  Result r = run({"canon", "abx"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("InvalidLetter", 0), 0u);
  r = run({"si", "--surface", "torus", "abab"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("NonPrimitive", 0), 0u);
  EXPECT_EQ(run({"si", "--surface", "sphere", "ab"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"canon", "--bogus", "ab"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"equiv", "ab"}).code, 1);
  EXPECT_EQ(run({"fingerprint", "ab", "--point", "3,2,1"}).code, 1);
  EXPECT_EQ(run({"fingerprint", "ab", "--point", "3,2,1", "--point", "3,2,1"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifyFamily) {
  const fs::path dir = scratch("family");
  {
    std::ofstream f(dir / "pair.txt");
    f << "# the long pair\naaabaaBAbAABabaB\n\naaabaBaabaBAAbAB\n";
  }
  Result r = run({"verify-family", (dir / "pair.txt").string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "word\tsi_torus\tsi_pants\trelation_to_first\n"
            "aaabaaBAbAABabaB\t15\t34\tequal\n"
            "aaabaBaabaBAAbAB\t19\t32\tequal\n"
            "all_trace_equivalent true\nsi_uniform_torus false\nsi_uniform_pants false\n");
  r = run({"verify-family", (dir / "pair.txt").string(), "--json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["all_trace_equivalent"].get<bool>());
  EXPECT_EQ(j["rows"].size(), 2u);
  {
    std::ofstream f(dir / "empty.txt");
    f << "# nothing\n";
  }
  r = run({"verify-family", (dir / "empty.txt").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("EmptyFamily", 0), 0u);
  EXPECT_EQ(run({"verify-family", (dir / "missing.txt").string()}).code, 2);
  fs::remove_all(dir);
}

TEST(Cli, SearchWritesReportsAndHonoursConfig) {
  const fs::path dir = scratch("search");
  {
    std::ofstream cfg(dir / "curvesi.conf");
    cfg << "# test config\nworkers = 2\nout = " << (dir / "from-config").string() << "\n";
  }
  Result r = run({"--config", (dir / "curvesi.conf").string(), "search", "--length", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("primitive classes: 5880"), std::string::npos) << r.out;
  EXPECT_TRUE(fs::exists(dir / "from-config" / "reports.json"));
  EXPECT_TRUE(fs::exists(dir / "from-config" / "classes.csv"));

  r = run({"search", "--length", "10", "--out", (dir / "flag").string(), "--workers", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  };
  EXPECT_EQ(slurp(dir / "flag" / "reports.json"), slurp(dir / "from-config" / "reports.json"));

  r = run({"search", "--length", "10", "--out", (dir / "flag").string(), "--resume"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("(36 resumed)"), std::string::npos) << r.err;
  EXPECT_EQ(slurp(dir / "flag" / "reports.json"), slurp(dir / "from-config" / "reports.json"));

  {
    std::ofstream cfg(dir / "bad.conf");
    cfg << "colour = blue\n";
  }
  r = run({"--config", (dir / "bad.conf").string(), "canon", "ab"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("InvalidConfig", 0), 0u);
  fs::remove_all(dir);
}

TEST(Cli, WorkersFromEnvironment) {
  const fs::path dir = scratch("env");
  ::setenv(curvesi::kWorkersEnv, "3", 1);
  Result r = run({"search", "--length", "8", "--out", dir.string()});
  ::unsetenv(curvesi::kWorkersEnv);
  EXPECT_EQ(r.code, 0) << r.err;
  ::setenv(curvesi::kWorkersEnv, "many", 1);
  r = run({"canon", "ab"});
  ::unsetenv(curvesi::kWorkersEnv);
  EXPECT_EQ(r.code, 2);
  fs::remove_all(dir);
}
