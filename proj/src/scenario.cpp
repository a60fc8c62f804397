#include "sixcircles/scenario.hpp"

#include <fstream>

#include "sixcircles/error.hpp"

namespace sixcircles {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadScenario, what); }

Choice parse_choice(const nlohmann::json& value) {
  if (value == "smaller") return Choice::Smaller;
  if (value == "larger") return Choice::Larger;
  bad("script entries must be \"smaller\" or \"larger\"");
}

std::string_view choice_name(Choice choice) {
  return choice == Choice::Smaller ? "smaller" : "larger";
}

}  // namespace

ChoicePolicy Scenario::choice_policy() const {
  switch (policy) {
    case PolicyKind::Smaller: return AlwaysSmaller{};
    case PolicyKind::Larger: return AlwaysLarger{};
    case PolicyKind::Random: return RandomChoice{seed};
    case PolicyKind::Scripted: return Scripted{script};
  }
  return AlwaysSmaller{};
}

Scenario scenario_from_json(const nlohmann::json& doc) try {
  if (!doc.is_object()) bad("scenario must be a JSON object");
  if (doc.value("version", 0) != Scenario::kVersion) bad("unsupported or missing version");

  Scenario scenario;
  const auto& shape = doc.at("shape");
  if (shape.contains("triangle") == shape.contains("polygon")) {
    bad("shape needs exactly one of \"triangle\" or \"polygon\"");
  }
  if (shape.contains("triangle")) {
    const auto& sides = shape.at("triangle");
    if (!sides.is_array() || sides.size() != 3) bad("triangle needs three side lengths");
    scenario.shape = TriangleShape{{sides[0].get<double>(), sides[1].get<double>(),
                                    sides[2].get<double>()}};
  } else {
    PolygonShape polygon;
    for (const auto& v : shape.at("polygon")) {
      if (!v.is_array() || v.size() != 2) bad("polygon vertices must be [x, y] pairs");
      polygon.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    scenario.shape = std::move(polygon);
  }

  const auto& initial = doc.at("initial");
  scenario.initial.vertex = initial.value("vertex", std::size_t{1});
  const int forms = initial.contains("phi0") + initial.contains("r0") + initial.contains("u0");
  if (forms != 1) bad("initial needs exactly one of phi0, r0, u0");
  if (initial.contains("phi0")) {
    scenario.initial.form = InitialForm::Phi;
    scenario.initial.value = initial.at("phi0").get<double>();
  } else if (initial.contains("r0")) {
    scenario.initial.form = InitialForm::Radius;
    scenario.initial.value = initial.at("r0").get<double>();
  } else {
    scenario.initial.form = InitialForm::U;
    scenario.initial.value = initial.at("u0").get<double>();
  }

  const auto policy = doc.value("policy", nlohmann::json("smaller"));
  if (policy.is_array()) {
    scenario.policy = PolicyKind::Scripted;
    for (const auto& entry : policy) scenario.script.push_back(parse_choice(entry));
  } else if (policy == "smaller") {
    scenario.policy = PolicyKind::Smaller;
  } else if (policy == "larger") {
    scenario.policy = PolicyKind::Larger;
  } else if (policy == "random") {
    scenario.policy = PolicyKind::Random;
  } else {
    bad("unknown policy " + policy.dump());
  }

  scenario.max_steps = doc.value("max_steps", kDefaultMaxSteps);
  scenario.seed = doc.value("seed", std::uint64_t{1});
  for (const auto& out : doc.value("outputs", nlohmann::json::array())) {
    scenario.outputs.push_back({out.at("path").get<std::string>(),
                                out.at("format").get<std::string>()});
  }
  return scenario;
} catch (const nlohmann::json::exception& e) {
  bad(e.what());
}

nlohmann::json scenario_to_json(const Scenario& scenario) {
  nlohmann::json doc;
  doc["version"] = Scenario::kVersion;
  if (const auto* tri = std::get_if<TriangleShape>(&scenario.shape)) {
    doc["shape"]["triangle"] = tri->sides;
  } else {
    nlohmann::json vertices = nlohmann::json::array();
    for (const Point& v : std::get<PolygonShape>(scenario.shape).vertices) {
      vertices.push_back({v.x, v.y});
    }
    doc["shape"]["polygon"] = vertices;
  }

  static constexpr std::string_view kFormKeys[] = {"phi0", "r0", "u0"};
  doc["initial"] = {{"vertex", scenario.initial.vertex},
                    {kFormKeys[static_cast<int>(scenario.initial.form)], scenario.initial.value}};

  switch (scenario.policy) {
    case PolicyKind::Smaller: doc["policy"] = "smaller"; break;
    case PolicyKind::Larger: doc["policy"] = "larger"; break;
    case PolicyKind::Random: doc["policy"] = "random"; break;
    case PolicyKind::Scripted:
      doc["policy"] = nlohmann::json::array();
      for (Choice c : scenario.script) doc["policy"].push_back(choice_name(c));
      break;
  }
  doc["max_steps"] = scenario.max_steps;
  doc["seed"] = scenario.seed;
  doc["outputs"] = nlohmann::json::array();
  for (const auto& out : scenario.outputs) {
    doc["outputs"].push_back({{"path", out.path}, {"format", out.format}});
  }
  return doc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    bad(path + ": " + e.what());
  }
  return scenario_from_json(doc);
}

void save_scenario(const Scenario& scenario, const std::string& path) {
  std::ofstream out(path);
  if (!out) bad("cannot write " + path);
  out << scenario_to_json(scenario).dump(2) << '\n';
}

}  // namespace sixcircles
