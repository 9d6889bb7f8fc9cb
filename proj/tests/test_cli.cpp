#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

// stdout only; stderr is folded in when `merge` is set.
CliResult run(const std::string& args, bool merge = false) {
  const std::string cmd = std::string("'") + BICHEB_CLI + "' " + args + (merge ? " 2>&1" : " 2>/dev/null");
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::path(testing::TempDir()) / ("bicheb_cli_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, BoundPrintsClosedForms) {
  const CliResult r = run("bound --lambda 1 --mu 1 --delta 0 --t 0.6 --eta 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("a2 <= 0.821583836258"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("a3 <= 0.76"), std::string::npos);
  EXPECT_NE(r.out.find("fs(eta=1) <= 0.4  branch FLAT"), std::string::npos);
}

TEST(Cli, BoundSingular) {
  const CliResult r = run("bound --lambda 2 --mu 1 --delta 0 --t 0.75");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("a2 <= inf  (unbounded)"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("bound --lambda 0.5 --mu 1 --delta 0 --t 0.6").code, 2);
  EXPECT_EQ(run("bound --lambda 1 --mu 1 --delta 0").code, 2);
  EXPECT_EQ(run("sweep --t 0.4").code, 2);
  EXPECT_EQ(run("sweep --format xml").code, 2);
  EXPECT_EQ(run("verify --samples 0").code, 2);
  EXPECT_EQ(run("verify --mode everything").code, 2);
  EXPECT_EQ(run("cheb --n 3 --t 2").code, 2);
  EXPECT_EQ(run("nonsense").code, 2);
  const CliResult msg = run("bound --lambda 0.5 --mu 1 --delta 0 --t 0.6", true);
  EXPECT_NE(msg.out.find("lambda"), std::string::npos);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run("--help").code, 0); }

TEST(Cli, IoErrors) {
  EXPECT_EQ(run("sweep --output /nonexistent-dir/x.csv").code, 3);
  EXPECT_EQ(run("bound --config /nonexistent-dir/c.toml").code, 3);
}

TEST(Cli, SweepRowMatchesBound) {
  const CliResult r = run("sweep --lambda 1 --mu 1 --delta 0 --t 0.6 --eta 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1,1,0,0.6,1,0.821583836258,0.76,0.4,2.56,false"), std::string::npos) << r.out;
}

TEST(Cli, SweepFlagsSingularRow) {
  const CliResult r = run("sweep --lambda 2 --mu 0 --delta 0 --t 0.6:0.7071067811865476:3 --eta 2");
  EXPECT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line, last;
  while (std::getline(in, line)) last = line;
  EXPECT_NE(last.find(",inf,"), std::string::npos) << last;
  EXPECT_EQ(last.substr(last.size() - 5), ",true");
}

TEST(Cli, SweepJsonToFile) {
  const auto path = temp_path("sweep.json");
  const CliResult r = run("sweep --t 0.6:0.9:4 --eta 0,2 --format json -o '" + path.string() + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  const std::string text = slurp(path);
  EXPECT_EQ(text.front(), '[');
  EXPECT_NE(text.find("\"fs_bound@2\""), std::string::npos);
}

TEST(Cli, ConfigFileWithOverride) {
  const auto path = temp_path("bound.toml");
  {
    std::ofstream out(path);
    out << "lambda = 1\nmu = 1\ndelta = 0\nt = 0.9\neta = 1\n";
  }
  const CliResult from_file = run("bound --config '" + path.string() + "'");
  EXPECT_EQ(from_file.code, 0);
  EXPECT_NE(from_file.out.find("t      0.9\n"), std::string::npos) << from_file.out;
  const CliResult overridden = run("bound --config '" + path.string() + "' --t 0.6");
  EXPECT_EQ(overridden.code, 0);
  EXPECT_NE(overridden.out.find("t      0.6\n"), std::string::npos) << overridden.out;
  EXPECT_NE(overridden.out.find("a2 <= 0.821583836258"), std::string::npos);
}

TEST(Cli, ChebTable) {
  const CliResult r = run("cheb --n 4 --t 0.6");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("4,-1.2464,-1.2464"), std::string::npos) << r.out;
}

TEST(Cli, SeriesInverse) {
  const CliResult r = run("series --coeff 0.3 --coeff 0.1 --order 4 --lambda 1 --mu 1 --delta 0 --t 0.6");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("4,(0, 0),(0.015, 0),,"), std::string::npos) << r.out;
}

TEST(Cli, VerifySmallGridPasses) {
  const CliResult r = run("verify --lambda 1 --mu 1 --delta 0 --t 0.6 --samples 200");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("verify: all suites passed"), std::string::npos);
}

TEST(Cli, VerifyAsPrintedReportsViolation) {
  const CliResult r = run("verify --lambda 1 --mu 1 --delta 0.5 --t 0.7 --eta 1.35 --samples 200 --variant as-printed");
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_NE(r.out.find("verify: FAILED"), std::string::npos);
}

TEST(Cli, RerunsAreByteIdentical) {
  const std::string args = "verify --lambda 1:2:2 --mu 0.5 --delta 0.3 --t 0.7 --samples 300 --seed 7 --refine";
  const CliResult a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const std::string sweep = "sweep --lambda 1:3:3 --t 0.55:0.95:5 --eta 0,1,2 --format json";
  EXPECT_EQ(run(sweep).out, run(sweep).out);
}

}  // namespace
