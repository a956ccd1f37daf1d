#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SPECGAP_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixtures_path() {
  return std::string(SPECGAP_SOURCE_DIR) + "/fixtures/published_tables.csv";
}

}  // namespace

TEST_CASE("gap runs emit deterministic well-formed JSON") {
  const std::string args = "gaps --quartic -s -2.3 -M 2 --window -0.49,7";
  RunResult r1 = run_cli(args);
  CHECK(r1.exit_code == 0);
  RunResult r2 = run_cli(args);
  CHECK(r1.out == r2.out);  // byte-identical across runs

  json j = json::parse(r1.out);
  CHECK(j["potential"] == "quartic");
  CHECK(j["s"] == doctest::Approx(-2.3));
  CHECK(j["M"] == 2);
  CHECK(j["gaps"].is_array());
  CHECK(j["gaps"].empty());
  CHECK(j["certificates_sampled"].is_number_integer());
  // field order is part of the schema
  CHECK(r1.out.rfind("{\"potential\":", 0) == 0);
}

TEST_CASE("gap run reports a known interval") {
  RunResult r = run_cli("gaps --sextic -M 1 --window 0,6");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["gaps"].size() == 1);
  CHECK(std::abs(double(j["gaps"][0]["lo"]) - 0.967) <= 2e-3);
  CHECK(std::abs(double(j["gaps"][0]["hi"]) - 1.041) <= 2e-3);
  CHECK(j["s"].is_null());
}

TEST_CASE("gap runs can emit CSV rows") {
  RunResult r = run_cli("gaps --sextic -M 1 --window 0,6 --format csv");
  CHECK(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "s,M,boundary_lo,boundary_hi,gap_index");
}

TEST_CASE("spectrum command") {
  RunResult r = run_cli("spectrum --quartic -s -2.3 -n 7");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["energies"].size() == 7);
  const double published[7] = {-0.5012, -0.2549, 0.9606, 2.1003, 3.5281, 5.1202, 6.8609};
  for (int i = 0; i < 7; ++i) CHECK(std::abs(double(j["energies"][i]) - published[i]) <= 5e-4);
  CHECK(j["basis_size"].is_number_integer());
  CHECK(j["convergence_estimate"].is_number());

  RunResult h = run_cli("spectrum --custom 0,0,0.5 -n 3");
  json jh = json::parse(h.out);
  CHECK(double(jh["energies"][0]) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(double(jh["energies"][1]) == doctest::Approx(1.5).epsilon(1e-9));
  CHECK(double(jh["energies"][2]) == doctest::Approx(2.5).epsilon(1e-9));
}

TEST_CASE("spectrum exit code on unreachable tolerance") {
  RunResult r = run_cli("spectrum --quartic -s -2.3 -n 2 --tol 1e-18");
  CHECK(r.exit_code == 3);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli("gaps -M 1").exit_code == 1);                    // no potential chosen
  CHECK(run_cli("gaps --quartic -M 1").exit_code == 1);          // quartic without s
  CHECK(run_cli("nonsense").exit_code == 1);
  CHECK(run_cli("fn -N 9 --quartic").exit_code == 1);
  CHECK(run_cli("sweep -s 1..2:0.5 -M 1").exit_code == 1);       // sweep requires --out
  CHECK(run_cli("verify bogus --fixtures " + fixtures_path()).exit_code == 1);
}

TEST_CASE("operator rendering") {
  RunResult r = run_cli("fn -N 2 --quartic");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("a0^(3): 1/2") != std::string::npos);
  CHECK(r.out.find("F_2") != std::string::npos);

  RunResult r3 = run_cli("fn -N 3 --quartic");
  CHECK(r3.out.find("a0^(4): -1/6") != std::string::npos);

  RunResult r1 = run_cli("fn -N 1 --quartic");
  CHECK(r1.out.find("a0^(2): -1") != std::string::npos);
}

TEST_CASE("published coefficient verification passes") {
  RunResult r = run_cli("verify delta0 --fixtures " + fixtures_path());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("delta0 constant") != std::string::npos);
}

TEST_CASE("sweep writes schema-stable CSV plus a companion level file") {
  std::string out = std::string(SPECGAP_SOURCE_DIR) + "/build/test_sweep_out.csv";
  std::string levels = std::string(SPECGAP_SOURCE_DIR) + "/build/test_sweep_out_levels.csv";
  std::remove(out.c_str());
  std::remove(levels.c_str());
  RunResult r = run_cli("sweep --quartic -s 4..5:0.5 -M 1 -n 3 --out " + out);
  CHECK(r.exit_code == 0);
  std::ifstream main_file(out);
  REQUIRE(main_file.good());
  std::string header;
  std::getline(main_file, header);
  CHECK(header == "s,M,boundary_lo,boundary_hi,gap_index");
  std::ifstream level_file(levels);
  REQUIRE(level_file.good());
  std::getline(level_file, header);
  CHECK(header == "s,level,energy");
  int rows = 0;
  std::string line;
  while (std::getline(level_file, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 9);  // 3 s-values x 3 levels

  CHECK(run_cli("sweep --quartic -s 5..4:0.5 -M 1 --out " + out).exit_code == 1);
}
