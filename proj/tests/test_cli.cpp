#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hskein/bps.hpp"
#include "hskein/serialize.hpp"
#include "hskein_cli/cli.hpp"

using namespace hskein;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return (std::filesystem::path(HSKEIN_TEST_TMPDIR) / name).string(); }

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST(CliExpand, OneHoledTorus) {
  const auto r = run_cli({"expand", "--psi", "1,1,+", "--degree", "2", "--basis", "W"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 + z*W[1] + z*s*W[2] - z*s^-1*W[1,1]\n");
}

TEST(CliExpand, DiskMatchesClosedForm) {
  const auto r = run_cli({"expand", "--psi", "0,1,+", "--degree", "3", "--basis", "W"});
  ASSERT_EQ(r.code, 0);
  const auto parsed = parse_skein_text(r.out.substr(0, r.out.size() - 1));
  const auto expected = disk_closed_form<Scalar>(1, 3);
  for (const auto& [key, c] : expected.terms()) EXPECT_EQ(parsed.coeff(key.tuple[0]), c);
  EXPECT_EQ(parsed.size(), expected.size());
}

TEST(CliExpand, JsonRoundTrips) {
  const auto r = run_cli({"expand", "--psi", "0,2,-", "--degree", "3", "--basis", "P", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_series_json(r.out), make_psi<Scalar>({0, 2, -1, 3}));
}

TEST(CliExpand, Deterministic) {
  const std::vector<std::string> args{"expand", "--psi", "1,2,-", "--degree", "3"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(CliExpand, WritesOutputFile) {
  const std::string path = temp_path("expand_out.txt");
  const auto r = run_cli({"expand", "--psi", "0,1,-", "--degree", "1", "--output", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_file(path), "1 - z^-1*W[1]\n");
}

TEST(CliVerify, TheoremOnePasses) {
  const std::string path = temp_path("verify.json");
  const auto r = run_cli({"verify", "--suite", "theorem1", "--degree", "5", "--json", path});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(read_file(path));
  ASSERT_TRUE(j.is_array());
  EXPECT_GT(j.size(), 30u);
  for (const auto& rep : j) EXPECT_TRUE(rep["passed"].get<bool>()) << rep["name"];
}

TEST(CliVerify, RandomizedRecursions) {
  const auto r = run_cli({"verify", "--suite", "recursions", "--degree", "3", "--mode", "randomized", "--seed", "9"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("randomized"), std::string::npos);
}

TEST(CliSolve, RelativeDisk) {
  const std::string path = temp_path("disk.json");
  std::ofstream(path) << to_json(recursion_datum<Scalar>(DatumKind::Disk, 4).a);
  const auto r = run_cli({"solve", "--data", path, "--degree", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["kind"], "relative");
  EXPECT_TRUE(j["residual_zero"].get<bool>());
  EXPECT_EQ(parse_series_json(j["solution"].dump()), make_psi<Scalar>({0, 1, 1, 4}));
}

TEST(CliSolve, AbsoluteOperator) {
  const std::string path = temp_path("torus_operator.json");
  const auto d = recursion_datum<Scalar>(DatumKind::OneHoledTorus, 3);
  std::ofstream(path) << to_json(relative_to_absolute(d.a));
  const auto r = run_cli({"solve", "--data", path, "--degree", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("residual: zero through degree 3"), std::string::npos);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), to_text(convert_all(d.phi, Basis::W), true));
}

TEST(CliSolve, BadInput) {
  const std::string path = temp_path("bad.json");
  std::ofstream(path) << "{ not json";
  EXPECT_EQ(run_cli({"solve", "--data", path}).code, 2);
  EXPECT_EQ(run_cli({"solve", "--data", temp_path("missing.json")}).code, 2);
}

TEST(CliChartable, TextAndJson) {
  const auto text = run_cli({"chartable", "3"});
  EXPECT_EQ(text.code, 0);
  EXPECT_EQ(text.out,
            "          0   1   2\n"
            "[3]       1   1   1\n"
            "[2,1]    -1   0   2\n"
            "[1,1,1]   1  -1   1\n");
  const auto js = run_cli({"chartable", "3", "--format", "json"});
  const auto j = nlohmann::json::parse(js.out);
  EXPECT_EQ(j["values"][1][2], 2);
  EXPECT_EQ(j["partitions"][2], "[1,1,1]");
}

TEST(CliUsage, Errors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"expand", "--psi", "0,1"}).code, 2);
  EXPECT_EQ(run_cli({"expand", "--psi", "0,1,x"}).code, 2);
  EXPECT_EQ(run_cli({"expand", "--psi", "0,1,+", "--basis", "Q"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--degree", "-1"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--mode", "fast"}).code, 2);
  const auto help = run_cli({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("expand"), std::string::npos);
}
