#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef OPTCHAN_CLI_PATH
#error "OPTCHAN_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& arguments) {
  const std::string command =
      std::string(OPTCHAN_CLI_PATH) + " " + arguments + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe))
    result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream stream(line);
  std::string field;
  while (std::getline(stream, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("degenerate spectrum has a single nonzero row") {
  const auto result = run_cli("spectrum --s0 3 --ratio 1");
  CHECK(result.exit_code == 0);
  const auto lines = lines_of(result.output);
  REQUIRE(lines.size() >= 2);
  CHECK(lines[0] == "s,value");
  int nonzero = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv(lines[i]);
    REQUIRE(fields.size() == 2);
    if (std::abs(std::stod(fields[1])) > 1e-12) ++nonzero;
  }
  CHECK(nonzero == 1);
}

TEST_CASE("raw spectrum column sums to one") {
  const auto result = run_cli("spectrum --s0 1 --ratio 200 --norm raw");
  CHECK(result.exit_code == 0);
  const auto lines = lines_of(result.output);
  double sum = 0.0;
  for (std::size_t i = 1; i < lines.size(); ++i) sum += std::stod(split_csv(lines[i])[1]);
  CHECK(sum >= 1.0 - 1e-8);
  CHECK(sum <= 1.0 + 1e-12);
}

TEST_CASE("multi-s0 spectrum emits one block per index") {
  const auto result = run_cli("spectrum --s0 1..3 --ratio 20");
  CHECK(result.exit_code == 0);
  int headers = 0;
  for (const auto& line : lines_of(result.output))
    if (line == "s,value") ++headers;
  CHECK(headers == 3);
}

TEST_CASE("zero-dispersion fidelity row is an exact revival") {
  const auto result = run_cli("fidelity --s0 1 --D 0");
  CHECK(result.exit_code == 0);
  const auto lines = lines_of(result.output);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "s0,D_ps_per_nm_km,F");
  const auto fields = split_csv(lines[1]);
  REQUIRE(fields.size() == 3);
  CHECK(fields[0] == "1");
  CHECK(fields[1] == "0");
  CHECK(std::stod(fields[2]) == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("kerr preset reports the lithium niobate shift") {
  const auto result = run_cli("kerr --material linbo3 --intensity 1e11W_cm2");
  CHECK(result.exit_code == 0);
  REQUIRE(result.output.rfind("dn = ", 0) == 0);
  CHECK(std::stod(result.output.substr(5)) == doctest::Approx(8.33e-4).epsilon(1e-12));
}

TEST_CASE("rabi report is a single line in rad/s") {
  const auto result = run_cli("rabi");
  CHECK(result.exit_code == 0);
  REQUIRE(result.output.rfind("Omega0 = ", 0) == 0);
  CHECK(result.output.find(" rad/s") != std::string::npos);
  CHECK(std::stod(result.output.substr(9)) > 0.0);
}

TEST_CASE("swap trace is six states ending at the swapped encoding") {
  const auto result = run_cli("gate --protocol swap --input 10 --trace");
  CHECK(result.exit_code == 0);
  const auto parsed = nlohmann::json::parse(result.output);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 6);
  // encode(1,0) = g1.e0 in, encode(0,1) = e0.g1 out
  CHECK(parsed.front().contains("g1.e0"));
  REQUIRE(parsed.back().contains("e0.g1"));
  CHECK(parsed.back()["e0.g1"][0].get<double>() == doctest::Approx(1.0));
  CHECK(parsed.back().size() == 1);
}

TEST_CASE("reflectivity emits the CSV header and plausible peak") {
  const auto result =
      run_cli("reflectivity --periods 50 --lambda-min 1.23um --lambda-max 1.25um "
              "--step 0.5nm");
  CHECK(result.exit_code == 0);
  const auto lines = lines_of(result.output);
  REQUIRE(lines.size() > 2);
  CHECK(lines[0] == "lambda_m,R,T");
  double peak = 0.0;
  for (std::size_t i = 1; i < lines.size(); ++i)
    peak = std::max(peak, std::stod(split_csv(lines[i])[1]));
  CHECK(peak > 0.5);
  CHECK(peak <= 1.0);
}

TEST_CASE("config file supplies flags and the command line overrides") {
  const char* path = "cli_test_config.json";
  {
    std::ofstream config(path);
    config << R"({"s0": "3", "ratio": 1, "norm": "raw"})";
  }
  const auto from_config = run_cli(std::string("spectrum --config ") + path);
  CHECK(from_config.exit_code == 0);
  double sum = 0.0;
  const auto lines = lines_of(from_config.output);
  for (std::size_t i = 1; i < lines.size(); ++i)
    sum += std::stod(split_csv(lines[i])[1]);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-8));

  const auto overridden =
      run_cli(std::string("spectrum --config ") + path + " --s0 2");
  CHECK(overridden.exit_code == 0);
  const auto rows = lines_of(overridden.output);
  // s0 = 2 with ratio 1 puts the single unit row at s = 2
  bool found = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto fields = split_csv(rows[i]);
    if (fields[0] == "2" && std::stod(fields[1]) == doctest::Approx(1.0)) found = true;
  }
  CHECK(found);
  std::remove(path);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli("spectrum --no-such-flag").exit_code == 1);
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("gate --protocol walk").exit_code == 1);
}

TEST_CASE("physics-domain errors exit with code 2") {
  CHECK(run_cli("propagate --s0 1 --nz 31").exit_code == 2);
  CHECK(run_cli("gate --protocol cnot --input 11 --photon-cap 1").exit_code == 2);
}

TEST_CASE("output flag writes a file identical to stdout") {
  const char* path = "cli_test_output.csv";
  const auto to_stdout = run_cli("fidelity --s0 1 --D 0,5");
  const auto to_file =
      run_cli(std::string("fidelity --s0 1 --D 0,5 --output ") + path);
  CHECK(to_file.exit_code == 0);
  CHECK(to_file.output.empty());
  std::ifstream file(path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  CHECK(buffer.str() == to_stdout.output);
  std::remove(path);
}

}
