#include "sixcircles/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "sixcircles/chain.hpp"
#include "sixcircles/error.hpp"
#include "sixcircles/experiments.hpp"
#include "sixcircles/oracles.hpp"
#include "sixcircles/pl_map.hpp"
#include "sixcircles/polygon.hpp"
#include "sixcircles/report.hpp"
#include "sixcircles/scenario.hpp"
#include "sixcircles/svg.hpp"

namespace sixcircles {
namespace {

/// Bad flag values that CLI11 cannot catch on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double to_radians(double angle, bool degrees) {
  return degrees ? angle * std::numbers::pi / 180.0 : angle;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::BadScenario, "cannot write " + path);
  file << text;
}

/// Writes to `path`, or to `out` when the path is empty.
void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
  } else {
    write_text(path, text);
  }
}

std::vector<Point> parse_vertices(const std::string& text) {
  std::vector<Point> vertices;
  std::istringstream in(text);
  std::string pair;
  while (std::getline(in, pair, ';')) {
    const auto comma = pair.find(',');
    if (comma == std::string::npos) throw UsageError("--vertices: expected x,y;x,y;...");
    try {
      vertices.push_back({std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1))});
    } catch (const std::logic_error&) {
      throw UsageError("--vertices: '" + pair + "' is not a point");
    }
  }
  return vertices;
}

// --- shared chain plumbing --------------------------------------------------

struct ChainFlags {
  std::vector<double> sides;
  std::string scenario_path;
  std::optional<double> phi0;
  std::optional<double> r0;
  std::optional<double> u0;
  std::size_t start_vertex = 1;
  std::string policy = "smaller";
  std::string script;
  std::uint64_t seed = 1;
  std::size_t max_steps = kDefaultMaxSteps;
  std::string format = "csv";
  std::string out_path;
  std::string svg_path;
  std::string save_scenario;
  bool degrees = false;
};

void add_initial_flags(CLI::App* cmd, ChainFlags& flags) {
  auto* phi = cmd->add_option("--phi0", flags.phi0, "initial angle coordinate (triangles)");
  auto* r = cmd->add_option("--r0", flags.r0, "initial radius");
  auto* u = cmd->add_option("--u0", flags.u0, "initial sqrt tangent length");
  phi->excludes(r)->excludes(u);
  r->excludes(u);
  cmd->add_option("--start-vertex", flags.start_vertex, "vertex of the first circle (1-based)");
  cmd->add_option("--policy", flags.policy, "smaller | larger | random | script")
      ->check(CLI::IsMember({"smaller", "larger", "random", "script"}));
  cmd->add_option("--script", flags.script, "choices for --policy script, e.g. SLLS");
  cmd->add_option("--seed", flags.seed, "seed for --policy random");
  cmd->add_option("--max-steps", flags.max_steps, "step budget");
  cmd->add_option("--out", flags.out_path, "write the report here instead of stdout");
  cmd->add_option("--svg", flags.svg_path, "also render the chain as SVG");
}

InitialCondition initial_from_flags(const ChainFlags& flags) {
  InitialCondition initial;
  initial.vertex = flags.start_vertex;
  if (flags.phi0) {
    initial.form = InitialForm::Phi;
    initial.value = to_radians(*flags.phi0, flags.degrees);
  } else if (flags.r0) {
    initial.form = InitialForm::Radius;
    initial.value = *flags.r0;
  } else if (flags.u0) {
    initial.form = InitialForm::U;
    initial.value = *flags.u0;
  } else {
    throw UsageError("one of --phi0, --r0, --u0 is required");
  }
  return initial;
}

void policy_from_flags(const ChainFlags& flags, Scenario& scenario) {
  scenario.seed = flags.seed;
  if (flags.policy == "smaller") {
    scenario.policy = PolicyKind::Smaller;
  } else if (flags.policy == "larger") {
    scenario.policy = PolicyKind::Larger;
  } else if (flags.policy == "random") {
    scenario.policy = PolicyKind::Random;
  } else {
    scenario.policy = PolicyKind::Scripted;
    for (char c : flags.script) {
      if (c == 'S' || c == 's') {
        scenario.script.push_back(Choice::Smaller);
      } else if (c == 'L' || c == 'l') {
        scenario.script.push_back(Choice::Larger);
      } else {
        throw UsageError("--script: only S and L are allowed");
      }
    }
  }
}

std::size_t checked_vertex(std::size_t one_based, std::size_t count) {
  if (one_based < 1 || one_based > count) {
    throw UsageError("--start-vertex: must be between 1 and " + std::to_string(count));
  }
  return one_based - 1;
}

AngleCircle initial_circle(const Triangle& tri, const InitialCondition& initial) {
  const std::size_t vertex = checked_vertex(initial.vertex, 3);
  switch (initial.form) {
    case InitialForm::Phi:
      if (initial.value < 0.0 || initial.value > std::numbers::pi / 2.0) {
        throw Error(ErrorCode::DomainExceeded, "phi0 must lie in [0, pi/2]");
      }
      return circle_from_u(tri, vertex, u_from_phi(initial.value, tri.semiperimeter()));
    case InitialForm::Radius:
      if (initial.value < 0.0) throw Error(ErrorCode::DomainExceeded, "r0 must be >= 0");
      return circle_from_radius(tri, vertex, initial.value);
    case InitialForm::U:
      if (initial.value < 0.0) throw Error(ErrorCode::DomainExceeded, "u0 must be >= 0");
      return circle_from_u(tri, vertex, initial.value);
  }
  throw Error(ErrorCode::BadScenario, "unknown initial condition");
}

AngleCircle initial_circle(const ConvexPolygon& poly, const InitialCondition& initial) {
  const std::size_t vertex = checked_vertex(initial.vertex, poly.size());
  switch (initial.form) {
    case InitialForm::Phi:
      throw Error(ErrorCode::BadScenario, "polygons take r0 or u0, not phi0");
    case InitialForm::Radius: {
      if (initial.value < 0.0) throw Error(ErrorCode::DomainExceeded, "r0 must be >= 0");
      const double t = initial.value / poly.tan_half_angles()[vertex];
      AngleCircle circle = inscribe(poly.vertex_angle(vertex), t, std::sqrt(t));
      circle.radius = initial.value;
      return circle;
    }
    case InitialForm::U:
      if (initial.value < 0.0) throw Error(ErrorCode::DomainExceeded, "u0 must be >= 0");
      return circle_from_u(poly, vertex, initial.value);
  }
  throw Error(ErrorCode::BadScenario, "unknown initial condition");
}

struct ScenarioResult {
  std::vector<Point> outline;
  std::vector<ChainStep> steps;
  Termination termination = Termination::MaxSteps;
  std::optional<Periodicity> periodicity;
  std::optional<double> semiperimeter;
  nlohmann::json json;
};

ScenarioResult run_scenario(const Scenario& scenario, bool degrees) {
  ScenarioResult result;
  if (const auto* shape = std::get_if<TriangleShape>(&scenario.shape)) {
    const Triangle tri(shape->sides[0], shape->sides[1], shape->sides[2]);
    const ChainRecord record = run_chain(tri, initial_circle(tri, scenario.initial),
                                         scenario.choice_policy(), scenario.max_steps);
    result.outline.assign(tri.vertices().begin(), tri.vertices().end());
    result.steps = record.steps;
    result.termination = record.termination;
    result.periodicity = record.periodicity;
    result.semiperimeter = tri.semiperimeter();
    result.json = chain_json(record, degrees);
  } else {
    const ConvexPolygon poly(std::get<PolygonShape>(scenario.shape).vertices);
    const PolygonChainRecord record = polygon_chain(
        poly, initial_circle(poly, scenario.initial), scenario.choice_policy(),
        scenario.max_steps);
    result.outline = poly.vertices();
    result.steps = record.steps;
    result.termination = record.termination;
    result.periodicity = record.periodicity;
    result.json = chain_json(record);
  }
  return result;
}

std::string render_result(const ScenarioResult& result, const std::string& format,
                          bool degrees) {
  if (format == "json") return result.json.dump(2) + "\n";
  if (format == "svg") return render_svg(result.outline, result.steps);
  return chain_csv(result.steps, result.semiperimeter, degrees);
}

void write_outputs(const Scenario& scenario, const ScenarioResult& result, bool degrees) {
  for (const OutputSpec& spec : scenario.outputs) {
    if (spec.format != "csv" && spec.format != "json" && spec.format != "svg") {
      throw Error(ErrorCode::BadScenario, "unknown output format " + spec.format);
    }
    write_text(spec.path, render_result(result, spec.format, degrees));
  }
}

int chain_like(const Scenario& scenario, const ChainFlags& flags, std::ostream& out) {
  if (!flags.save_scenario.empty()) save_scenario(scenario, flags.save_scenario);
  const ScenarioResult result = run_scenario(scenario, flags.degrees);
  emit(out, flags.out_path, render_result(result, flags.format, flags.degrees));
  if (!flags.svg_path.empty()) write_text(flags.svg_path, render_svg(result.outline, result.steps));
  write_outputs(scenario, result, flags.degrees);
  out << chain_summary(result.termination, result.periodicity);
  return 0;
}

// --- subcommands --------------------------------------------------------------

int cmd_triangle(const std::vector<double>& sides, const std::string& format, bool degrees,
                 std::ostream& out) {
  const Triangle tri(sides[0], sides[1], sides[2]);
  const nlohmann::json doc = triangle_json(tri, degrees);
  if (format == "json") {
    out << doc.dump(2) << '\n';
    return 0;
  }
  for (const auto& [key, value] : doc.items()) out << key << '=' << value.dump() << '\n';
  out << "beta_margin=" << format_double(beta_inequality_margin(tri)) << '\n';
  for (std::size_t k = 0; k < 3; ++k) {
    out << "lemma_residual_" << k + 1 << '=' << format_double(lemma_tri_residual(tri, k))
        << '\n';
  }
  return 0;
}

template <class Scalar>
int print_orbit(const BasicPlMapParams<Scalar>& params, const Scalar& x0, std::size_t steps,
                const Scalar& tol, const std::string& format, std::ostream& out) {
  const auto report = orbit(params, x0, steps, tol);
  if (format == "json") {
    out << orbit_json(report).dump(2) << '\n';
    return 0;
  }
  out << orbit_csv(report);
  out << "pre_period=" << report.pre_period << '\n' << "period=" << report.period << '\n';
  out << "cycle=";
  for (std::size_t i = 0; i < report.cycle.size(); ++i) {
    if (i) out << ';';
    if constexpr (std::is_same_v<Scalar, Rational>) {
      out << format_rational(report.cycle[i]);
    } else {
      out << format_double(report.cycle[i]);
    }
  }
  out << '\n';
  return 0;
}

int cmd_plmap(const std::string& a, const std::string& b, const std::string& x0,
              std::size_t steps, const std::string& mode, const std::string& tol,
              const std::string& format, std::ostream& out) {
  Rational qa, qb, qx, qtol;
  try {
    qa = parse_rational(a);
    qb = parse_rational(b);
    qx = parse_rational(x0);
    qtol = parse_rational(tol);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--a/--b/--x0/--tol: ") + e.what());
  }
  if (mode == "exact") {
    return print_orbit(ExactPlMapParams::make(qa, qb), qx, steps, Rational(0), format, out);
  }
  const auto params =
      PlMapParams::make(qa.convert_to<double>(), qb.convert_to<double>());
  return print_orbit(params, qx.convert_to<double>(), steps, qtol.convert_to<double>(), format,
                     out);
}

int cmd_malfatti(const std::vector<double>& sides, const std::string& format,
                 const std::string& svg_path, std::ostream& out) {
  const Triangle tri(sides[0], sides[1], sides[2]);
  const std::array<double, 3> radii = oracles::brute_force_malfatti(tri);

  // Cross-check: the fixed point of the composite map, unscaled, at the
  // vertex where the betas are met in ascending order when that exists.
  const ChainRecord record =
      run_chain(tri, circle_from_radius(tri, 0, radii[0]), AlwaysSmaller{}, 30);
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < record.steps.size() && i < 3; ++i) {
    const AngleCircle& c = record.steps[i].circle;
    const AngleCircle& d = record.steps[i + 1].circle;
    worst = std::max(worst, std::abs(distance(c.center, d.center) - c.radius - d.radius));
  }
  const auto& beta = tri.betas();
  const double phi_star =
      fixed_point(composite_params(tri)) * *std::min_element(beta.begin(), beta.end());

  nlohmann::json doc{{"triangle", triangle_json(tri)},
                     {"radii", radii},
                     {"composite_fixed_point_phi", phi_star},
                     {"chain_period", record.periodicity
                                          ? nlohmann::json(record.periodicity->period)
                                          : nlohmann::json()},
                     {"max_tangency_residual", worst}};
  if (format == "json") {
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& [key, value] : doc.items()) {
      if (key != "triangle") out << key << '=' << value.dump() << '\n';
    }
  }
  if (!svg_path.empty()) {
    const std::vector<ChainStep> three(record.steps.begin(),
                                       record.steps.begin() +
                                           std::min<std::size_t>(3, record.steps.size()));
    write_text(svg_path, render_svg(tri.vertices(), three));
  }
  return 0;
}

int cmd_mc(const std::vector<double>& sides, MonteCarloConfig config, const std::string& policy,
           const std::string& format, const std::string& out_path, std::ostream& out) {
  const Triangle tri(sides[0], sides[1], sides[2]);
  config.policy = policy == "smaller" ? McPolicy::AlwaysSmaller : McPolicy::Random;
  const Histogram histogram = monte_carlo(tri, config);
  emit(out, out_path,
       format == "json" ? histogram_json(histogram).dump(2) + "\n" : histogram_csv(histogram));
  if (!out_path.empty()) {
    out << "runs=" << histogram.runs << "\nfailures=" << histogram.failures << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chains of circles inscribed in the angles of triangles and polygons"};
  app.name("sixcircles");
  app.require_subcommand(1);

  // triangle
  std::vector<double> tri_sides;
  std::string tri_format = "json";
  bool tri_degrees = false;
  auto* triangle = app.add_subcommand("triangle", "derived quantities of a triangle");
  triangle->add_option("--sides", tri_sides, "a1,a2,a3")->required()->delimiter(',')->expected(3);
  triangle->add_option("--format", tri_format)->check(CLI::IsMember({"json", "text"}));
  triangle->add_flag("--degrees", tri_degrees, "report angles in degrees");

  // chain
  ChainFlags chain_flags;
  auto* chain = app.add_subcommand("chain", "circle chain in a triangle");
  auto* chain_sides = chain->add_option("--sides", chain_flags.sides, "a1,a2,a3")
                          ->delimiter(',')
                          ->expected(3);
  auto* chain_scenario = chain->add_option("--scenario", chain_flags.scenario_path,
                                           "scenario file (JSON)");
  chain_sides->excludes(chain_scenario);
  add_initial_flags(chain, chain_flags);
  chain->add_option("--format", chain_flags.format)->check(CLI::IsMember({"csv", "json"}));
  chain->add_option("--save-scenario", chain_flags.save_scenario, "write the run as a scenario");
  chain->add_flag("--degrees", chain_flags.degrees, "phi0 and phi output in degrees");

  // plmap
  std::string pl_a, pl_b, pl_x0, pl_mode = "float", pl_tol = "1e-9", pl_format = "csv";
  std::size_t pl_steps = 10000;
  auto* plmap = app.add_subcommand("plmap", "orbit of f(x) = |||x-1|-a|-b|");
  plmap->add_option("--a", pl_a)->required();
  plmap->add_option("--b", pl_b)->required();
  plmap->add_option("--x0", pl_x0)->required();
  plmap->add_option("--steps", pl_steps, "iteration budget");
  plmap->add_option("--mode", pl_mode)->check(CLI::IsMember({"exact", "float"}));
  plmap->add_option("--tol", pl_tol, "float-mode tolerance");
  plmap->add_option("--format", pl_format)->check(CLI::IsMember({"csv", "json"}));

  // mc
  std::vector<double> mc_sides{3.0, 4.0, 5.0};
  MonteCarloConfig mc_config;
  std::string mc_policy = "random", mc_format = "csv", mc_out;
  std::size_t mc_vertex = 1;
  auto* mc = app.add_subcommand("mc", "random-choice Monte Carlo histogram of pre-periods");
  mc->add_option("--sides", mc_sides, "a1,a2,a3")->delimiter(',')->expected(3);
  mc->add_option("--runs", mc_config.runs);
  mc->add_option("--seed", mc_config.seed);
  mc->add_option("--policy", mc_policy)->check(CLI::IsMember({"random", "smaller"}));
  mc->add_option("--max-steps", mc_config.max_steps);
  mc->add_option("--threads", mc_config.threads);
  mc->add_option("--start-vertex", mc_vertex);
  mc->add_option("--format", mc_format)->check(CLI::IsMember({"csv", "json"}));
  mc->add_option("--out", mc_out);

  // ngon
  ChainFlags ngon_flags;
  std::string ngon_vertices;
  std::size_t ngon_regular = 0;
  double ngon_side = 1.0;
  std::vector<double> ngon_parallelogram;
  std::size_t divergence_steps = 0;
  double divergence_delta = 1e-9;
  auto* ngon = app.add_subcommand("ngon", "circle chain in a convex polygon");
  auto* v_opt = ngon->add_option("--vertices", ngon_vertices, "x,y;x,y;... counterclockwise");
  auto* reg_opt = ngon->add_option("--regular", ngon_regular, "regular polygon vertex count");
  ngon->add_option("--side", ngon_side, "side of the regular polygon");
  auto* par_opt = ngon->add_option("--parallelogram", ngon_parallelogram, "base,side,angle")
                      ->delimiter(',')
                      ->expected(3);
  v_opt->excludes(reg_opt)->excludes(par_opt);
  reg_opt->excludes(par_opt);
  add_initial_flags(ngon, ngon_flags);
  ngon->add_option("--format", ngon_flags.format)->check(CLI::IsMember({"csv", "json"}));
  ngon->add_option("--divergence-steps", divergence_steps, "also estimate the divergence rate");
  ngon->add_option("--delta", divergence_delta, "initial separation for the divergence rate");
  ngon->add_flag("--degrees", ngon_flags.degrees, "parallelogram angle in degrees");

  // malfatti
  std::vector<double> mal_sides;
  std::string mal_format = "json", mal_svg;
  auto* malfatti = app.add_subcommand("malfatti", "three pairwise tangent angle circles");
  malfatti->add_option("--sides", mal_sides, "a1,a2,a3")->required()->delimiter(',')->expected(3);
  malfatti->add_option("--format", mal_format)->check(CLI::IsMember({"json", "text"}));
  malfatti->add_option("--svg", mal_svg);

  // render
  std::string render_scenario, render_out;
  auto* render = app.add_subcommand("render", "SVG drawing of a scenario's chain");
  render->add_option("--scenario", render_scenario)->required();
  render->add_option("--out", render_out, "SVG path (stdout if omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (triangle->parsed()) return cmd_triangle(tri_sides, tri_format, tri_degrees, out);

    if (chain->parsed()) {
      Scenario scenario;
      if (!chain_flags.scenario_path.empty()) {
        scenario = load_scenario(chain_flags.scenario_path);
      } else {
        if (chain_flags.sides.size() != 3) throw UsageError("--sides or --scenario is required");
        scenario.shape = TriangleShape{{chain_flags.sides[0], chain_flags.sides[1],
                                        chain_flags.sides[2]}};
        scenario.initial = initial_from_flags(chain_flags);
        policy_from_flags(chain_flags, scenario);
        scenario.max_steps = chain_flags.max_steps;
      }
      return chain_like(scenario, chain_flags, out);
    }

    if (plmap->parsed()) {
      return cmd_plmap(pl_a, pl_b, pl_x0, pl_steps, pl_mode, pl_tol, pl_format, out);
    }

    if (mc->parsed()) {
      mc_config.start_vertex = checked_vertex(mc_vertex, 3);
      return cmd_mc(mc_sides, mc_config, mc_policy, mc_format, mc_out, out);
    }

    if (ngon->parsed()) {
      std::optional<ConvexPolygon> poly;
      if (!ngon_vertices.empty()) {
        poly.emplace(parse_vertices(ngon_vertices));
      } else if (ngon_regular != 0) {
        poly = ConvexPolygon::regular(ngon_regular, ngon_side);
      } else if (ngon_parallelogram.size() == 3) {
        poly = ConvexPolygon::parallelogram(
            ngon_parallelogram[0], ngon_parallelogram[1],
            to_radians(ngon_parallelogram[2], ngon_flags.degrees));
      } else {
        throw UsageError("one of --vertices, --regular, --parallelogram is required");
      }
      Scenario scenario;
      scenario.shape = PolygonShape{poly->vertices()};
      scenario.initial = initial_from_flags(ngon_flags);
      policy_from_flags(ngon_flags, scenario);
      scenario.max_steps = ngon_flags.max_steps;
      const int code = chain_like(scenario, ngon_flags, out);
      if (divergence_steps > 0) {
        const AngleCircle start = initial_circle(*poly, scenario.initial);
        out << "divergence_rate="
            << format_double(divergence_rate(*poly, start.vertex, start.u, divergence_delta,
                                             divergence_steps))
            << '\n';
      }
      return code;
    }

    if (malfatti->parsed()) return cmd_malfatti(mal_sides, mal_format, mal_svg, out);

    if (render->parsed()) {
      const Scenario scenario = load_scenario(render_scenario);
      const ScenarioResult result = run_scenario(scenario, false);
      emit(out, render_out, render_svg(result.outline, result.steps));
      return 0;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace sixcircles
