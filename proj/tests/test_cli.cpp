// End-to-end exercises of the command-line tool: exit codes, CSV shape and
// bit-stability, JSON round-trips.  The binary path comes in through
// SEMIOSC_CLI_PATH at compile time.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SEMIOSC_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(line);
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) out.push_back(cell);
  return out;
}

// value of `name` in a two-column name,value CSV body
double csv_lookup(const std::string& body, const std::string& name) {
  for (const auto& line : lines_of(body)) {
    const auto cells = split_csv(line);
    if (cells.size() == 2 && cells[0] == name) return std::stod(cells[1]);
  }
  FAIL("missing csv key " << name);
  return 0.0;
}

}  // namespace

TEST_CASE("params echoes primitive and derived quantities", "[cli]") {
  const RunResult r = run_cli("params");
  REQUIRE(r.exit_code == 0);
  CHECK(lines_of(r.out)[0] == "name,value");
  CHECK(csv_lookup(r.out, "lambda0") == 1.0);
  CHECK(csv_lookup(r.out, "alpha") == 2.0);
  CHECK(csv_lookup(r.out, "e0") == 0.5);
  CHECK(csv_lookup(r.out, "threshold_a") == Catch::Approx(std::sqrt(0.5)).epsilon(1e-15));

  const RunResult scaled = run_cli("--a 2.5 --omega 2 params");
  REQUIRE(scaled.exit_code == 0);
  CHECK(csv_lookup(scaled.out, "alpha") ==
        Catch::Approx(2.0 * 2.0 * 2.5 * 2.5).epsilon(1e-14));
}

TEST_CASE("params serializes to parseable JSON", "[cli]") {
  const RunResult r = run_cli("--format json params");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_object());
  CHECK(j.at("alpha").get<double>() == 2.0);
  CHECK(j.at("lambda0").get<double>() == 1.0);
  CHECK(j.at("e0").get<double>() == 0.5);
  CHECK(j.at("threshold_a").get<double>() == Catch::Approx(std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("eval emits the closed-form triples", "[cli]") {
  const RunResult r = run_cli("eval --model constant --n 0 --x 0 --x 1");
  REQUIRE(r.exit_code == 0);
  const auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "x,value,d1,d2");
  const auto row0 = split_csv(rows[1]);
  REQUIRE(row0.size() == 4);
  CHECK(std::stod(row0[1]) == Catch::Approx(std::pow(M_PI, -0.25)).epsilon(1e-15));
  CHECK(std::stod(row0[2]) == 0.0);

  // past-wall points of the confined model print the zero triple
  const RunResult wall = run_cli("eval --model semiconfined --n 2 --x -1 --x -3");
  REQUIRE(wall.exit_code == 0);
  for (std::size_t i = 1; i < lines_of(wall.out).size(); ++i) {
    const auto cells = split_csv(lines_of(wall.out)[i]);
    CHECK(std::stod(cells[1]) == 0.0);
  }
}

TEST_CASE("spectrum lists the shared equidistant levels", "[cli]") {
  const RunResult r = run_cli("--format json spectrum --n-max 5");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 6);
  for (int n = 0; n <= 5; ++n) {
    CHECK(j[n].at("n").get<int>() == n);
    CHECK(j[n].at("energy").get<double>() == Catch::Approx(n + 0.5).epsilon(1e-15));
  }
}

TEST_CASE("csv output is bit-stable across runs", "[cli]") {
  const std::string args = "uncertainty --n-range 0..4";
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  CHECK(first.out == second.out);
  REQUIRE(!first.out.empty());
}

TEST_CASE("uncertainty reports the ground-state product", "[cli]") {
  for (const char* mode : {"closed", "quadrature"}) {
    const RunResult r = run_cli(std::string("uncertainty --n-range 0..0 --mode ") + mode);
    REQUIRE(r.exit_code == 0);
    const auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "n,mean_x,mean_p,var_x,var_p,product");
    const auto cells = split_csv(rows[1]);
    REQUIRE(cells.size() == 6);
    CHECK(std::stod(cells[5]) == Catch::Approx(0.75).epsilon(1e-9));
  }
  // alpha below one has no momentum variance: clean usage error, not a crash
  const RunResult below = run_cli("--a 0.5 uncertainty --n-range 0..0");
  CHECK(below.exit_code == 2);
}

TEST_CASE("verification subcommands succeed and their JSON round-trips", "[cli]") {
  for (const char* sub : {"verify algebra --nmax 8", "verify identities --nmax 6",
                          "verify factorization", "verify commutators", "verify heisenberg"}) {
    const RunResult r = run_cli(std::string("--format json ") + sub);
    INFO(sub);
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(!j.empty());
    for (const auto& row : j) {
      INFO(row.dump());
      CHECK(row.at("pass").get<bool>());
      CHECK(row.at("max_abs_error").get<double>() <= row.at("tolerance").get<double>());
      REQUIRE(row.at("details").is_array());
      for (const auto& d : row.at("details")) {
        CHECK(d.at("error").is_number());
        CHECK(d.at("location").is_string());
      }
    }
    // parse(dump) is the identity on the emitted document
    CHECK(nlohmann::json::parse(j.dump()) == j);
  }
}

TEST_CASE("limits gate passes on the default sweeps", "[cli]") {
  const RunResult r = run_cli("limits");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("wavefunction-limit-n0") != std::string::npos);
  CHECK(r.out.find("laguerre-hermite-limit-n6") != std::string::npos);
}

TEST_CASE("oracle subcommand gates on the relative error", "[cli]") {
  const RunResult r = run_cli("oracle --points 1200 --k 4 --tol 5e-3");
  REQUIRE(r.exit_code == 0);
  const auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "n,E_numeric,E_exact,rel_error");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto cells = split_csv(rows[i]);
    CHECK(std::stod(cells[3]) < 5e-3);
  }
  // an unreachable tolerance flips the exit code but still prints the table
  const RunResult tight = run_cli("oracle --points 400 --k 2 --tol 1e-9");
  CHECK(tight.exit_code == 1);
  CHECK(!tight.out.empty());
}

TEST_CASE("--out writes the report to a file", "[cli]") {
  const std::string path = "/tmp/semiosc_cli_out_test.csv";
  std::remove(path.c_str());
  const RunResult r = run_cli("params --out " + path);
  REQUIRE(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream body;
  body << in.rdbuf();
  CHECK(csv_lookup(body.str(), "alpha") == 2.0);
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit with status 2", "[cli]") {
  CHECK(run_cli("--definitely-not-a-flag").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);                              // missing subcommand
  CHECK(run_cli("eval --model nope --n 0 --x 0").exit_code == 2); // bad enum value
  CHECK(run_cli("eval --model constant --n -3 --x 0").exit_code == 2);  // domain error
  CHECK(run_cli("oracle --points 1").exit_code == 2);             // grid too small
  CHECK(run_cli("--help").exit_code == 0);
}
