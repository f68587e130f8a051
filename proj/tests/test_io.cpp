#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "lusztig.hpp"
#include "lusztig/io.hpp"

using namespace lusztig;
using lusztig::io::Json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(LUSZTIG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int run_cli_status_with_stderr(const std::string& args, std::string& err) {
  const auto path = std::filesystem::temp_directory_path() / "lusztig_cli_stderr.txt";
  const std::string command = std::string(LUSZTIG_CLI_PATH) + " " + args + " >/dev/null 2>" + path.string();
  const int status = std::system(command.c_str());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  err = ss.str();
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

// --- serialization --------------------------------------------------------------------

TEST(Json, Label) {
  const OrbitLabel l{SymplecticPartition({4, 2}), {{1, 1}, {1, -1}, {}}};
  const Json j = io::to_json(l);
  EXPECT_EQ(j["partition"], Json::parse("[4,2]"));
  EXPECT_EQ(j["forms"][0], Json::parse(R"({"part":2,"dim":1,"disc":1})"));
  EXPECT_EQ(j["forms"][1]["disc"], -1);
  EXPECT_TRUE(j["forms"][2]["disc"].is_null());
}

TEST(Json, ComplexRoundingFlushesNoise) {
  EXPECT_EQ(io::to_json(Complex(1e-17, -1.0)).dump(), R"({"re":0.0,"im":-1.0})");
  EXPECT_EQ(io::stable_real(0.1234567890123456), 0.123456789012);
}

TEST(Json, Atlas) {
  const Json j = io::to_json(build_atlas(1, FieldSpec(3)));
  EXPECT_EQ(j["cone_size"], 9);
  EXPECT_EQ(j["oracle_orbit_count"], 3);
  ASSERT_EQ(j["orbits"].size(), 3u);
  EXPECT_EQ(j["orbits"][0]["representative"], Json::parse("[[0,1],[0,0]]"));
  EXPECT_EQ(j["orbits"][0]["size"], 4);
}

TEST(Json, PadicDescriptor) {
  const Json j = io::to_json(lusztig_distributions(2, 3).front());
  EXPECT_EQ(j, Json::parse(R"({"vertex":1,"hyperspecial":false,"quotient":[2,2],"deltas":[1,1],"eigenvalue":"-1","stable":true})"));
}

TEST(Csv, Census) {
  const std::string csv = io::census_csv(census(10));
  std::istringstream in(csv);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 11u);
  EXPECT_EQ(lines[0], io::kCensusCsvHeader);
  EXPECT_EQ(lines[5], "5,0,0,2,2,0,0,0,false");
  EXPECT_EQ(lines[6], "6,3,3,3,0,3,8,1,true");
}

// --- command line ---------------------------------------------------------------------

TEST(Cli, Orbits) {
  const auto r = run_cli("orbits --n 1 --p 3 --format json");
  ASSERT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["orbits"].size(), 3u);
  const auto r2 = run_cli("orbits --n 2 --p 3");
  ASSERT_EQ(r2.exit_code, 0);
  EXPECT_EQ(Json::parse(r2.out)["oracle_orbit_count"], 7);
}

TEST(Cli, BadPrime) {
  std::string err;
  EXPECT_EQ(run_cli_status_with_stderr("orbits --n 1 --p 2", err), 2);
  EXPECT_NE(err.find("p must be an odd prime"), std::string::npos);
}

TEST(Cli, FtCheck) {
  const auto r = run_cli("ft-check --n 1 --p 3");
  ASSERT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["is_eigenfunction"].get<bool>());
  EXPECT_EQ(j["eigenvalue"], Json::parse(R"({"re":0.0,"im":-1.0})"));
  EXPECT_TRUE(j["matches_prediction"].get<bool>());

  const auto prod = run_cli("ft-check --product 1,1 --p 5");
  ASSERT_EQ(prod.exit_code, 0);
  EXPECT_EQ(Json::parse(prod.out)["eigenvalue"], Json::parse(R"({"re":1.0,"im":0.0})"));

  EXPECT_EQ(run_cli("ft-check --n 2 --p 3").exit_code, 2);
  EXPECT_EQ(run_cli("ft-check --n 1 --p 3 --tolerance -1").exit_code, 2);
}

TEST(Cli, Census) {
  const auto r = run_cli("census --n-max 10 --format csv");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, io::census_csv(census(10)));
  const auto one = run_cli("census --n-max 1");
  ASSERT_EQ(one.exit_code, 0);
  EXPECT_EQ(Json::parse(one.out)[0]["enum_count"], 2);
  EXPECT_EQ(run_cli("census --n-max 0").exit_code, 2);
}

TEST(Cli, Classify) {
  const auto regular = write_temp("lusztig_regular.json", "[[0,1],[0,0]]");
  const auto r = run_cli("classify " + regular + " --p 3");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(Json::parse(r.out), Json::parse(R"({"partition":[2],"forms":[{"part":2,"dim":1,"disc":1}]})"));

  const auto zero = write_temp("lusztig_zero.json", "[[0,0],[0,0]]");
  EXPECT_EQ(Json::parse(run_cli("classify " + zero + " --p 3").out)["partition"], Json::parse("[1,1]"));

  std::string err;
  const auto semisimple = write_temp("lusztig_semisimple.json", "[[1,0],[0,-1]]");
  EXPECT_EQ(run_cli_status_with_stderr("classify " + semisimple + " --p 3", err), 2);
  EXPECT_NE(err.find("not nilpotent"), std::string::npos);

  const auto outside = write_temp("lusztig_outside.json", "[[1,0],[0,1]]");
  EXPECT_EQ(run_cli_status_with_stderr("classify " + outside + " --p 3", err), 2);
  EXPECT_NE(err.find("not in the symplectic Lie algebra"), std::string::npos);

  const auto garbage = write_temp("lusztig_garbage.json", "[[1,");
  EXPECT_EQ(run_cli_status_with_stderr("classify " + garbage + " --p 3", err), 2);
  EXPECT_NE(err.find("cannot parse"), std::string::npos);
}

TEST(Cli, LusztigAndCatalog) {
  const auto r = run_cli("lusztig --n 3 --p 7");
  ASSERT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j["terms"].size(), 4u);
  EXPECT_EQ(j["terms"][2]["coefficient"], -1);

  const auto m = run_cli("lusztig --n 1 --p 3 --materialize");
  ASSERT_EQ(m.exit_code, 0);
  EXPECT_EQ(Json::parse(m.out)["function"]["entries"].size(), 8u);

  const auto c = run_cli("padic-catalog --n 6 --p 7");
  ASSERT_EQ(c.exit_code, 0);
  const Json cj = Json::parse(c.out);
  EXPECT_EQ(cj["dimension"], 3);
  EXPECT_EQ(cj["stable_dim"], 1);
  EXPECT_EQ(cj["eigenvalue"], "-1");
}

TEST(Cli, HilbertAndForms) {
  const auto h = run_cli("hilbert --a eps --b pi --p 5");
  ASSERT_EQ(h.exit_code, 0);
  EXPECT_EQ(Json::parse(h.out)["symbol"], -1);
  EXPECT_EQ(run_cli("hilbert --a two --b pi --p 5").exit_code, 2);

  const auto padic = run_cli("normalize-form --entries \"1,-eps,pi^-1\" --p 5");
  ASSERT_EQ(padic.exit_code, 0);
  EXPECT_EQ(Json::parse(padic.out)["class"]["dim"], 3);

  const auto finite = run_cli("normalize-form --finite --entries 1,1,1,1 --p 5");
  ASSERT_EQ(finite.exit_code, 0);
  const Json fj = Json::parse(finite.out);
  EXPECT_EQ(fj["hyperbolic_planes"], 2);
  EXPECT_EQ(fj["anisotropic"]["dim"], 0);
}

TEST(Cli, OutputFileAndUsageErrors) {
  const auto path = (std::filesystem::temp_directory_path() / "lusztig_out.csv").string();
  ASSERT_EQ(run_cli("census --n-max 3 --format csv --output " + path).exit_code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), io::census_csv(census(3)));
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("orbits --n 1").exit_code, 2);
  EXPECT_EQ(run_cli("orbits --n 1 --p 3 --format yaml").exit_code, 2);
  EXPECT_EQ(run_cli("--help").exit_code, 0);
}
