#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

using namespace mzv;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mzv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, Product) {
  EXPECT_EQ(cli::cmd_product("stuffle", "z(2)", "z(3)"), "1*z(2,3) + 1*z(3,2) + 1*z(5)");
  EXPECT_EQ(cli::cmd_product("shuffle", "y", "y"), "2*yy");
  EXPECT_EQ(cli::cmd_product("shuffle", "z(1)", "z(1)"), "2*z(1,1)");
  EXPECT_EQ(cli::cmd_product("stuffle", "xy", "2"), "2*z(2,2) + 1*z(4)");
  EXPECT_EQ(cli::cmd_product("shuffle", "z(2)", "z(2)", true), "2*z(2,2) + 4*z(3,1)");
  EXPECT_THROW(cli::cmd_product("stuffle", "z(0)", "z(2)"), ParseError);
  EXPECT_THROW(cli::cmd_product("concat", "z(1)", "z(2)"), std::invalid_argument);

  const CliRun r = run_cli({"product", "stuffle", "z(2)", "z(3)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1*z(2,3) + 1*z(3,2) + 1*z(5)\n");
  const CliRun bad = run_cli({"product", "stuffle", "z(0)", "z(3)"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("error"), std::string::npos);
}

TEST(Cli, VerifySingleIdentity) {
  const CliRun r = run_cli({"verify", "--identity", "Thm31", "--k-min", "2", "--k-max", "2", "--n-min", "2", "--n-max", "12"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 11u);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "Thm31 k=2 n=2 verified");
  EXPECT_EQ(r.out.find("failed"), std::string::npos);
}

TEST(Cli, EmptyGridWarns) {
  const CliRun r = run_cli({"verify", "--identity", "Thm32", "--k-min", "4", "--k-max", "4", "--n-min", "2", "--n-max", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, ConfigErrors) {
  EXPECT_EQ(run_cli({"verify", "--k-min", "4", "--k-max", "3"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--identity", "Nope"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--n-max", "99"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--format", "xml"}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, DeterministicAcrossJobs) {
  const std::vector<std::string> base{"verify", "--k-max", "4", "--n-max", "9", "--format", "json"};
  auto with_jobs = [&](const char* j) {
    auto args = base;
    args.push_back("--jobs");
    args.push_back(j);
    return run_cli(args);
  };
  const CliRun one = with_jobs("1");
  const CliRun four = with_jobs("4");
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
  EXPECT_GT(count_lines(one.out), 50u);
  // Every line parses and every cell verified.
  std::istringstream lines(one.out);
  for (std::string line; std::getline(lines, line);) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["status"], "verified");
    EXPECT_TRUE(j["discrepancy"].empty());
  }
}

TEST(Cli, CsvFormat) {
  const CliRun r = run_cli({"verify", "--identity", "EulerDecomp", "--k-min", "2", "--k-max", "2", "--n-min", "3",
                         "--n-max", "4", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "identity,k,n,status,discrepancy\nEulerDecomp,2,3,verified,\"0\"\nEulerDecomp,2,4,verified,\"0\"\n");
}

TEST(Cli, FailedCellGivesExitOne) {
  cli::RunConfig config;
  config.identities = {IdentityId::Thm31};
  config.k_min = config.k_max = 2;
  config.n_min = config.n_max = 4;
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_verify(config, out, err), 0);
  std::ostringstream report;
  cli::write_report(report, IdentityReport::from(IdentityId::Thm31, 2, 4, LinComb<Composition>(Composition{4})),
                    cli::OutputFormat::text);
  EXPECT_EQ(report.str(), "Thm31 k=2 n=4 failed discrepancy: 1*z(4)\n");
}

TEST(Cli, Eval) {
  const CliRun r = run_cli({"eval", "z(2,1)", "--tol", "1e-25"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("zeta(2,1) = 1.2020569031595942853997381", 0), 0u) << r.out;
  const CliRun j = run_cli({"eval", "3", "--format", "json"});
  EXPECT_EQ(j.code, 0);
  const auto parsed = nlohmann::json::parse(j.out);
  EXPECT_EQ(parsed["composition"], nlohmann::json::array({3}));
  EXPECT_EQ(parsed["value"].get<std::string>().substr(0, 12), "1.2020569031");
  const CliRun bad = run_cli({"eval", "z(1,2)"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("diverges"), std::string::npos);
}

TEST(Cli, NoArgumentsPrintsHelp) {
  const CliRun r = run_cli({});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}
