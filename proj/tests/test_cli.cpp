#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "cli.hpp"
#include "curvlab/json_io.hpp"
#include "curvlab/rng.hpp"
#include "doctest.h"

using namespace curvlab;
using nlohmann::json;

namespace {

std::string write_temp(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << contents;
  return path.string();
}

const char* kTwoPoint = R"({
  "vertices": ["0", "1"],
  "m": {"0": 0.5, "1": 0.5},
  "edges": [["0", "1", 0.25]]
})";

}  // namespace

TEST_CASE("graph JSON parsing") {
  const json good = json::parse(kTwoPoint);
  const WeightedGraph g = parse_graph(good);
  CHECK(g.size() == 2);
  CHECK(g.weight()(0, 1) == 0.25);

  json bad = good;
  bad["edges"].push_back({"1", "0", 0.25});
  CHECK_THROWS_AS(parse_graph(bad), std::invalid_argument);

  json missing = good;
  missing.erase("m");
  CHECK_THROWS_AS(parse_graph(missing), std::invalid_argument);

  json negative = good;
  negative["edges"][0][2] = -1.0;
  CHECK_THROWS_AS(parse_graph(negative), std::invalid_argument);
}

TEST_CASE("complex matrices round-trip through JSON") {
  Rng rng(81);
  for (int trial = 0; trial < 5; ++trial) {
    const Matx m = rng.complex_matrix(3);
    const Matx back = parse_complex_matrix(complex_matrix_to_json(m));
    CHECK((m - back).cwiseAbs().maxCoeff() == 0.0);
  }
  CHECK_THROWS_AS(parse_complex_matrix(json::parse("[[1,2],[3]]")),
                  std::invalid_argument);
}

TEST_CASE("cli: graph bakry-emery") {
  const std::string path = write_temp("curvlab_two_point.json", kTwoPoint);
  const auto result = cli::run({"graph", "be", path});
  REQUIRE(result.exit_code == 0);
  const json report = json::parse(result.output);
  CHECK(report["schema"] == "curvlab/1");
  CHECK(report["kind"] == "bakry_emery");
  CHECK(std::abs(report["bound"].get<double>() - 1.0) < 1e-10);
}

TEST_CASE("cli: malformed input and usage errors exit with 1") {
  const std::string path = write_temp("curvlab_broken.json", "{\"vertices\": [");
  CHECK(cli::run({"graph", "be", path}).exit_code == 1);
  CHECK(cli::run({"frobnicate"}).exit_code == 1);
  CHECK(cli::run({"graph", "be", "/nonexistent/file.json"}).exit_code == 1);
  CHECK(cli::run({"reproduce", "no-such-case"}).exit_code == 1);
  CHECK(cli::run({"graph", "ge", "--mode", "decorate", path}).exit_code == 1);
}

TEST_CASE("cli: falsification exits with 2") {
  const std::string path = write_temp("curvlab_two_point.json", kTwoPoint);
  const auto result = cli::run({"graph", "ge", "--mode", "falsify", "--K", "3.0",
                                "--samples", "400", path});
  CHECK(result.exit_code == 2);
  const json report = json::parse(result.output);
  CHECK_FALSE(report["violation"].is_null());
  CHECK(report["violation"]["lhs"].get<double>() >
        report["violation"]["rhs"].get<double>());

  const auto held = cli::run({"graph", "ge", "--mode", "falsify", "--K", "-100",
                              "--samples", "100", path});
  CHECK(held.exit_code == 0);
  CHECK(json::parse(held.output)["violation"].is_null());
}

TEST_CASE("cli: identical argv produces identical report bytes") {
  const std::string path = write_temp("curvlab_two_point.json", kTwoPoint);
  const std::vector<std::string> argv = {"graph",     "ge",   "--mean", "logarithmic",
                                         "--mode",    "estimate", "--samples", "64",
                                         "--seed",    "9",    path};
  const auto a = cli::run(argv);
  const auto b = cli::run(argv);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("cli: reports round-trip through parse/serialize unchanged") {
  const std::string path = write_temp("curvlab_two_point.json", kTwoPoint);
  for (const auto& argv : {std::vector<std::string>{"graph", "be", path},
                           std::vector<std::string>{"graph", "intertwine", "--hodge",
                                                    "splitting:1.0", path}}) {
    const auto result = cli::run(argv);
    REQUIRE(result.exit_code == 0);
    const json parsed = json::parse(result.output);
    CHECK(parsed.dump(2) + "\n" == result.output);
  }
}

TEST_CASE("cli: reproduce catalog") {
  const auto listing = cli::run({"reproduce", "--list"});
  REQUIRE(listing.exit_code == 0);
  const json report = json::parse(listing.output);
  CHECK(report["cases"].size() >= 12);

  const auto result = cli::run({"reproduce", "universal-bound-p3"});
  CHECK(result.exit_code == 0);
  CHECK(json::parse(result.output)["pass"] == true);
}

TEST_CASE("cli: help exits cleanly") {
  const auto result = cli::run({"--help"});
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("graph") != std::string::npos);
}

TEST_CASE("cli: qms surface") {
  // Hermitian Pauli family scaled for the depolarizing generator.
  json qms;
  qms["n"] = 2;
  const double c = 1.0 / (2.0 * std::sqrt(2.0));
  qms["jumps"] = json::array();
  qms["jumps"].push_back({{"v", {{{0.0, 0.0}, {c, 0.0}}, {{c, 0.0}, {0.0, 0.0}}}},
                          {"omega", 0.0}});
  qms["jumps"].push_back({{"v", {{{0.0, 0.0}, {0.0, -c}}, {{0.0, c}, {0.0, 0.0}}}},
                          {"omega", 0.0}});
  qms["jumps"].push_back({{"v", {{{c, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {-c, 0.0}}}},
                          {"omega", 0.0}});
  const std::string path = write_temp("curvlab_qubit.json", qms.dump());

  const auto validated = cli::run({"qms", "validate", path});
  REQUIRE(validated.exit_code == 0);
  CHECK(json::parse(validated.output)["tracially_symmetric"] == true);

  const auto be = cli::run({"qms", "be", "--samples", "24", path});
  REQUIRE(be.exit_code == 0);
  const json be_report = json::parse(be.output);
  CHECK(std::abs(be_report["bound"].get<double>() - (0.5 + 1.0 / 3.0)) < 1e-5);
  CHECK(std::abs(be_report["restricted_bound"].get<double>() - 1.0) < 1e-5);

  const auto ge = cli::run({"qms", "ge", "--mean", "logarithmic", "--K", "1.0",
                            "--samples", "50", path});
  CHECK(ge.exit_code == 0);

  const auto mlsi = cli::run({"qms", "mlsi", "--rate", "2.5", "--samples", "400", path});
  CHECK(mlsi.exit_code == 2);
}
