#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "sixcircles/chain.hpp"
#include "sixcircles/geometry.hpp"

namespace sixcircles {

struct TriangleShape {
  std::array<double, 3> sides{};
  friend bool operator==(const TriangleShape&, const TriangleShape&) = default;
};

struct PolygonShape {
  std::vector<Point> vertices;
  friend bool operator==(const PolygonShape&, const PolygonShape&) = default;
};

enum class InitialForm { Phi, Radius, U };

struct InitialCondition {
  std::size_t vertex = 1;  // 1-based, as written in files and on the command line
  InitialForm form = InitialForm::Phi;
  double value = 0.0;
  friend bool operator==(const InitialCondition&, const InitialCondition&) = default;
};

enum class PolicyKind { Smaller, Larger, Random, Scripted };

struct OutputSpec {
  std::string path;
  std::string format;  // csv, json or svg
  friend bool operator==(const OutputSpec&, const OutputSpec&) = default;
};

/// A reproducible run description, stored as versioned JSON:
///
///   {"version": 1,
///    "shape": {"triangle": [3, 4, 5]} | {"polygon": [[x, y], ...]},
///    "initial": {"vertex": 1, "phi0": 0.3} | {"vertex": 1, "r0": ...} | {"u0": ...},
///    "policy": "smaller" | "larger" | "random" | ["smaller", "larger", ...],
///    "max_steps": 10000, "seed": 1,
///    "outputs": [{"path": "chain.svg", "format": "svg"}]}
struct Scenario {
  static constexpr int kVersion = 1;

  std::variant<TriangleShape, PolygonShape> shape;
  InitialCondition initial;
  PolicyKind policy = PolicyKind::Smaller;
  std::vector<Choice> script;  // only for PolicyKind::Scripted
  std::size_t max_steps = kDefaultMaxSteps;
  std::uint64_t seed = 1;
  std::vector<OutputSpec> outputs;

  ChoicePolicy choice_policy() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Throws Error(BadScenario) on schema violations.
Scenario scenario_from_json(const nlohmann::json& doc);
nlohmann::json scenario_to_json(const Scenario& scenario);

Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& scenario, const std::string& path);

}  // namespace sixcircles
