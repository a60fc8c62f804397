#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sixcircles/chain.hpp"
#include "sixcircles/cli.hpp"
#include "sixcircles/error.hpp"
#include "sixcircles/report.hpp"
#include "sixcircles/scenario.hpp"
#include "sixcircles/svg.hpp"

using namespace sixcircles;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sixcircles");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "sixcircles_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("number formatting round-trips") {
  CHECK(format_double(0.3) == "0.3");
  CHECK(format_double(6.0) == "6");
  CHECK(std::stod(format_double(0.1 + 0.2)) == 0.1 + 0.2);
}

TEST_CASE("triangle JSON") {
  const auto doc = triangle_json(Triangle(3, 4, 5));
  CHECK(doc.at("p").get<double>() == 6.0);
  CHECK(doc.at("T")[2].get<double>() == 1.0);
  for (const char* key : {"alpha", "beta", "e", "sides", "vertices"}) CHECK(doc.contains(key));
  const auto degrees = triangle_json(Triangle(3, 4, 5), true);
  CHECK(degrees.at("alpha")[2].get<double>() == doctest::Approx(45.0));
}

TEST_CASE("chain CSV") {
  const Triangle tri(3, 4, 5);
  const ChainRecord record = run_chain(tri, circle_from_u(tri, 0, 0.723874), AlwaysSmaller{}, 100);
  const std::string csv = chain_csv(record.steps, tri.semiperimeter());
  CHECK(csv.rfind(std::string(kChainCsvHeader) + "\n", 0) == 0);
  CHECK(count(csv, "\n") == record.steps.size() + 1);
  CHECK(chain_summary(record.termination, record.periodicity) ==
        "termination=CycleDetected\npre_period=2\nperiod=6\n");
  CHECK(chain_summary(Termination::MaxSteps, std::nullopt).find("pre_period=undetected") != std::string::npos);
}

TEST_CASE("scenario round trip") {
  Scenario scenario;
  scenario.shape = TriangleShape{{3, 4, 5}};
  scenario.initial = {2, InitialForm::Radius, 0.25};
  scenario.policy = PolicyKind::Scripted;
  scenario.script = {Choice::Larger, Choice::Smaller};
  scenario.max_steps = 77;
  scenario.seed = 1234567890123ULL;
  scenario.outputs = {{"a.csv", "csv"}};
  CHECK(scenario_from_json(scenario_to_json(scenario)) == scenario);

  Scenario poly;
  poly.shape = PolygonShape{{{0, 0}, {2, 0}, {2, 1}, {0, 1}}};
  poly.initial = {1, InitialForm::U, 0.5};
  const fs::path path = scratch("poly.json");
  save_scenario(poly, path.string());
  CHECK(load_scenario(path.string()) == poly);
}

TEST_CASE("bad scenarios") {
  const auto code = [](const nlohmann::json& doc) {
    try {
      scenario_from_json(doc);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::NoRoot;
  };
  nlohmann::json good = scenario_to_json(Scenario{});
  CHECK(code(good) == ErrorCode::NoRoot);
  nlohmann::json doc = good;
  doc["version"] = 7;
  CHECK(code(doc) == ErrorCode::BadScenario);
  doc = good;
  doc["initial"]["u0"] = 1.0;
  CHECK(code(doc) == ErrorCode::BadScenario);
  doc = good;
  doc["shape"]["triangle"] = "3,4,5";
  CHECK(code(doc) == ErrorCode::BadScenario);
  doc = good;
  doc["policy"] = "sometimes";
  CHECK(code(doc) == ErrorCode::BadScenario);
  CHECK_THROWS_AS(load_scenario(scratch("missing.json").string()), Error);
}

TEST_CASE("SVG rendering") {
  const Triangle tri(3, 4, 5);
  const ChainRecord record = run_chain(tri, circle_from_u(tri, 0, 0.723874), AlwaysSmaller{}, 100);
  const std::string svg = render_svg(tri.vertices(), record.steps);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(count(svg, "<circle") >= 9);
  CHECK(svg.find(">9</text>") != std::string::npos);
  CHECK(svg == render_svg(tri.vertices(), record.steps));

  const std::string empty = render_svg(tri.vertices(), {});
  CHECK(empty.find("<polygon") != std::string::npos);
  CHECK(count(empty, "<circle") == 0);
  CHECK(empty.find("</svg>") != std::string::npos);
}

TEST_CASE("cli triangle") {
  const CliResult r = cli({"triangle", "--sides", "3,4,5", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("p").get<double>() == 6.0);
  CHECK(cli({"triangle", "--sides", "1,1,3"}).code == 1);
  CHECK(cli({"triangle", "--sides", "1,1"}).code == 2);
  CHECK(cli({"triangle"}).code == 2);
  CHECK(cli({"nonsense"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("cli chain") {
  const CliResult r = cli({"chain", "--sides", "3,4,5", "--phi0", "0.3", "--start-vertex", "1",
                           "--policy", "smaller", "--max-steps", "100", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(count(r.out, "\n") >= 10);
  CHECK(r.out.find("pre_period=2\n") != std::string::npos);
  CHECK(r.out.find("period=6\n") != std::string::npos);

  CHECK(cli({"chain", "--sides", "3,4,5"}).code == 2);
  CHECK(cli({"chain", "--sides", "3,4,5", "--phi0", "0.3", "--start-vertex", "4"}).code == 2);
  CHECK(cli({"chain", "--sides", "3,4,5", "--phi0", "0.3", "--policy", "maybe"}).code == 2);
  CHECK(cli({"chain", "--sides", "3,4,5", "--phi0", "0.3", "--r0", "1"}).code == 2);
  CHECK(cli({"chain", "--sides", "3,4,5", "--phi0", "3"}).code == 1);
}

TEST_CASE("cli chain through a saved scenario is byte-identical") {
  const fs::path saved = scratch("saved.json");
  const CliResult direct = cli({"chain", "--sides", "3,4,5", "--phi0", "0.3", "--policy", "random",
                                "--seed", "5", "--save-scenario", saved.string()});
  REQUIRE(direct.code == 0);
  const CliResult replay = cli({"chain", "--scenario", saved.string()});
  CHECK(replay.code == 0);
  CHECK(replay.out == direct.out);

  const fs::path svg = scratch("render.svg");
  CHECK(cli({"render", "--scenario", saved.string(), "--out", svg.string()}).code == 0);
  CHECK(slurp(svg).find("</svg>") != std::string::npos);
}

TEST_CASE("cli plmap") {
  const CliResult r = cli({"plmap", "--a", "3.6", "--b", "4.2", "--x0", "0", "--steps", "50"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,x,interval\n", 0) == 0);
  // 0 -> 1.6 -> 1.2 -> 0.8, which is the fixed point inside I2.
  CHECK(r.out.find("3,0.8000000000000003,I2\n") != std::string::npos);
  CHECK(r.out.find("pre_period=3\nperiod=1\n") != std::string::npos);
  const CliResult exact = cli({"plmap", "--a", "1", "--b", "1.99", "--x0", "0.01", "--mode", "exact"});
  CHECK(exact.out.find("pre_period=99\n") != std::string::npos);
  CHECK(exact.out.find("cycle=1;99/100\n") != std::string::npos);
  CHECK(cli({"plmap", "--a", "0.5", "--b", "1", "--x0", "0"}).code == 1);
  CHECK(cli({"plmap", "--a", "x", "--b", "1", "--x0", "0"}).code == 2);
}

TEST_CASE("cli mc, ngon and malfatti") {
  const CliResult one = cli({"mc", "--runs", "200", "--seed", "3"});
  const CliResult four = cli({"mc", "--runs", "200", "--seed", "3", "--threads", "4"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);

  const CliResult ngon = cli({"ngon", "--parallelogram", "2,1,60", "--degrees", "--r0", "0.05"});
  CHECK(ngon.code == 0);
  CHECK(ngon.out.find("period=4\n") != std::string::npos);
  CHECK(cli({"ngon", "--vertices", "0,0;1,0;0.2,0.1;0,1", "--u0", "0.1"}).code == 1);
  CHECK(cli({"ngon", "--u0", "0.1"}).code == 2);

  const CliResult malfatti = cli({"malfatti", "--sides", "1,1,1"});
  CHECK(malfatti.code == 0);
  const auto doc = nlohmann::json::parse(malfatti.out);
  CHECK(doc.at("radii")[0].get<double>() == doctest::Approx(0.1830127).epsilon(1e-7));
}
