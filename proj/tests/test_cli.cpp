// Runs the nks3 binary and checks exit codes and output formats.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + NKS3_CLI_PATH + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("nks3_cli_test_" + name);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

TEST(Cli, VerifyStructure) {
  const CliRun r = run("verify --suite structure --seed 42");
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["seed"], 42);
}

TEST(Cli, VerifyUsageErrors) {
  EXPECT_EQ(run("verify --suite bogus").code, 2);
  EXPECT_EQ(run("verify --samples 0").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("verify --suite hypersurface --family m9").code, 2);
}

TEST(Cli, VerifyAllWritesJson) {
  const auto path = temp_path("all.json");
  std::filesystem::remove(path);
  EXPECT_EQ(run("verify --suite all --samples 10 --out " + path.string()).code, 0);
  std::ifstream in(path);
  ASSERT_TRUE(in.good());
  const auto doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc["suite"], "all");
  EXPECT_FALSE(doc["checks"].empty());
  std::filesystem::remove(path);
}

TEST(Cli, VerifyIoError) {
  EXPECT_EQ(run("verify --suite isometry --out /nonexistent-dir/x.json").code, 3);
}

TEST(Cli, SeedPrecedence) {
  const auto from_env = nlohmann::json::parse(run("verify --suite isometry", "NKS3_SEED=17").out);
  EXPECT_EQ(from_env["seed"], 17);
  const auto from_flag =
      nlohmann::json::parse(run("verify --suite isometry --seed 5", "NKS3_SEED=17").out);
  EXPECT_EQ(from_flag["seed"], 5);
  const auto fallback = nlohmann::json::parse(run("verify --suite isometry", "env -u NKS3_SEED").out);
  EXPECT_EQ(fallback["seed"], 0);
  EXPECT_EQ(run("verify --suite isometry", "NKS3_SEED=abc").code, 2);
}

TEST(Cli, AnalyzeJson) {
  const CliRun r = run("analyze --family m1 --r 1 --at 0,0,0,0,0");
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["alpha"].get<double>(), 0.0, 1e-6);
  EXPECT_EQ(doc["pxi_class"], "PLUS");
  EXPECT_EQ(doc["eigenvalues"].size(), 5u);

  const auto m2 = nlohmann::json::parse(run("analyze --family m2 --r 0.7").out);
  EXPECT_EQ(m2["pxi_class"], "MINUS");
  const auto m6 = nlohmann::json::parse(run("analyze --family m6 --k 0.6").out);
  EXPECT_NEAR(m6["l"].get<double>(), 0.8, 1e-15);
}

TEST(Cli, AnalyzeErrors) {
  EXPECT_EQ(run("analyze --family m1 --at 0,0,x,0,0").code, 2);
  EXPECT_EQ(run("analyze --family m1 --at 0,0,0,0").code, 2);
  EXPECT_EQ(run("analyze --family m1 --at 0,0,0,0,0,").code, 2);
  EXPECT_EQ(run("analyze --family m1 --r 1.5").code, 2);
  EXPECT_EQ(run("analyze --family m4 --k 0.6 --l 0.7").code, 2);
  EXPECT_EQ(run("analyze --family m4 --r 0.5").code, 2);
  const CliRun degenerate = run("analyze --family m1 --at 0,0.7853981633974483,0,0,0");
  EXPECT_EQ(degenerate.code, 1);
  EXPECT_TRUE(nlohmann::json::parse(degenerate.out).contains("error"));
}

TEST(Cli, SweepCsv) {
  const CliRun r = run("sweep --family m1 --r 0.2,0.4,0.6,0.8,1.0 --points 4");
  ASSERT_EQ(r.code, 0);
  std::stringstream ss(r.out);
  std::string line;
  std::getline(ss, line);
  EXPECT_EQ(line, "family,r,k,l,ev1,ev2,ev3,ev4,ev5,mult_pattern,traceA,pxi_class,theta");
  std::vector<double> radii;
  while (std::getline(ss, line)) {
    const auto f = split(line, ',');
    ASSERT_EQ(f.size(), 13u) << line;
    const double r = std::stod(f[1]);
    radii.push_back(r);
    EXPECT_EQ(f[9], "2+1+2");
    EXPECT_EQ(f[11], "PLUS");
    // lambda + beta = sqrt(1 - r^2) / r.
    const double lambda = std::stod(f[4]), beta = std::stod(f[8]);
    EXPECT_NEAR(lambda + beta, std::sqrt(1.0 - r * r) / r, 1e-6);
    if (r == 1.0) EXPECT_LE(std::abs(std::stod(f[10])), 1e-6);
  }
  EXPECT_EQ(radii, (std::vector<double>{0.2, 0.4, 0.6, 0.8, 1.0}));
}

TEST(Cli, SweepTorusAndDomain) {
  const CliRun r = run("sweep --family m4 --k 0.6,0.8 --points 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("m4,,0.6,0.8,"), std::string::npos);
  EXPECT_NE(r.out.find("1+1+1+1+1"), std::string::npos);
  EXPECT_EQ(run("sweep --family m1 --r 0.01").code, 2);
  EXPECT_EQ(run("sweep --family m1 --r 1.2").code, 2);
  EXPECT_EQ(run("sweep --family m1 --k 0.5").code, 2);
  EXPECT_EQ(run("sweep --family m5 --k 1").code, 2);
}
