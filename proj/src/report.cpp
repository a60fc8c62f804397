#include "sixcircles/report.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace sixcircles {
namespace {

double angle_out(double radians, bool degrees) {
  return degrees ? radians * 180.0 / std::numbers::pi : radians;
}

template <class T, std::size_t N>
nlohmann::json array_json(const std::array<T, N>& values, bool degrees = false) {
  nlohmann::json out = nlohmann::json::array();
  for (const T& v : values) out.push_back(angle_out(v, degrees));
  return out;
}

nlohmann::json step_json(const ChainStep& step, std::optional<double> semiperimeter,
                         bool degrees) {
  nlohmann::json row{{"step", step.index},
                     {"vertex", step.circle.vertex + 1},
                     {"radius", step.circle.radius},
                     {"u", step.circle.u},
                     {"center", {step.circle.center.x, step.circle.center.y}},
                     {"tangency",
                      {step.circle.tangency[0] == Tangency::OnSide ? "OnSide" : "OnExtension",
                       step.circle.tangency[1] == Tangency::OnSide ? "OnSide" : "OnExtension"}}};
  if (semiperimeter && step.circle.u * step.circle.u <= *semiperimeter) {
    row["phi"] = angle_out(phi_from_u(step.circle.u, *semiperimeter), degrees);
  } else {
    row["phi"] = nullptr;
  }
  row["choice"] = step.choice ? nlohmann::json(to_string(*step.choice)) : nlohmann::json();
  row["sign_case"] =
      step.sign_case ? nlohmann::json(to_string(*step.sign_case)) : nlohmann::json();
  return row;
}

void add_periodicity(nlohmann::json& out, Termination termination,
                     const std::optional<Periodicity>& found) {
  out["termination"] = to_string(termination);
  out["pre_period"] = found ? nlohmann::json(found->pre_period) : nlohmann::json();
  out["period"] = found ? nlohmann::json(found->period) : nlohmann::json();
}

std::string scalar_text(double x) { return format_double(x); }
std::string scalar_text(const Rational& x) { return format_rational(x); }

template <class Scalar>
std::string orbit_csv_impl(const BasicOrbitReport<Scalar>& report) {
  std::ostringstream out;
  out << "n,x,interval\n";
  for (std::size_t n = 0; n < report.trajectory.size(); ++n) {
    out << n << ',' << scalar_text(report.trajectory[n]) << ','
        << to_string(report.interval_trace[n]) << '\n';
  }
  return out.str();
}

template <class Scalar>
nlohmann::json orbit_json_impl(const BasicOrbitReport<Scalar>& report) {
  nlohmann::json out;
  const auto value = [](const Scalar& x) {
    if constexpr (std::is_same_v<Scalar, Rational>) {
      return nlohmann::json(format_rational(x));
    } else {
      return nlohmann::json(x);
    }
  };
  out["x0"] = value(report.x0);
  out["pre_period"] = report.pre_period;
  out["period"] = report.period;
  out["cycle"] = nlohmann::json::array();
  for (const auto& c : report.cycle) out["cycle"].push_back(value(c));
  out["trajectory"] = nlohmann::json::array();
  for (std::size_t n = 0; n < report.trajectory.size(); ++n) {
    out["trajectory"].push_back(
        {{"x", value(report.trajectory[n])}, {"interval", to_string(report.interval_trace[n])}});
  }
  return out;
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

std::string_view to_string(Choice choice) {
  return choice == Choice::Smaller ? "Smaller" : "Larger";
}

std::string_view to_string(SignCase sign_case) {
  return sign_case == SignCase::PlusOnSide ? "PlusOnSide" : "MinusOnExtension";
}

std::string_view to_string(Termination termination) {
  switch (termination) {
    case Termination::MaxSteps: return "MaxSteps";
    case Termination::CycleDetected: return "CycleDetected";
    case Termination::NotConstructible: return "NotConstructible";
    case Termination::DegenerateCircle: return "DegenerateCircle";
  }
  return "?";
}

nlohmann::json triangle_json(const Triangle& tri, bool degrees) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const Point& v : tri.vertices()) vertices.push_back({v.x, v.y});
  return {{"sides", array_json(tri.sides())},
          {"p", tri.semiperimeter()},
          {"alpha", array_json(tri.half_angles(), degrees)},
          {"beta", array_json(tri.betas(), degrees)},
          {"e", array_json(tri.couplings())},
          {"T", array_json(tri.tangent_lengths())},
          {"vertices", vertices},
          {"angle_unit", degrees ? "degrees" : "radians"}};
}

std::string chain_csv(std::span<const ChainStep> steps, std::optional<double> semiperimeter,
                      bool degrees) {
  std::ostringstream out;
  out << kChainCsvHeader << '\n';
  for (const ChainStep& step : steps) {
    const AngleCircle& c = step.circle;
    out << step.index << ',' << c.vertex + 1 << ',' << format_double(c.radius) << ','
        << format_double(c.u) << ',';
    if (semiperimeter && c.u * c.u <= *semiperimeter) {
      out << format_double(angle_out(phi_from_u(c.u, *semiperimeter), degrees));
    }
    out << ',' << (step.sign_case ? to_string(*step.sign_case) : "") << ','
        << (step.choice ? to_string(*step.choice) : "") << ',' << format_double(c.center.x)
        << ',' << format_double(c.center.y) << '\n';
  }
  return out.str();
}

nlohmann::json chain_json(const ChainRecord& record, bool degrees) {
  nlohmann::json out;
  out["triangle"] = triangle_json(record.triangle, degrees);
  out["steps"] = nlohmann::json::array();
  for (const ChainStep& step : record.steps) {
    out["steps"].push_back(step_json(step, record.triangle.semiperimeter(), degrees));
  }
  add_periodicity(out, record.termination, record.periodicity);
  return out;
}

nlohmann::json chain_json(const PolygonChainRecord& record) {
  nlohmann::json out;
  nlohmann::json vertices = nlohmann::json::array();
  for (const Point& v : record.polygon.vertices()) vertices.push_back({v.x, v.y});
  out["polygon"] = {{"vertices", vertices},
                    {"edge_lengths", record.polygon.edge_lengths()},
                    {"edge_couplings", record.polygon.edge_couplings()}};
  out["steps"] = nlohmann::json::array();
  for (const ChainStep& step : record.steps) {
    out["steps"].push_back(step_json(step, std::nullopt, false));
  }
  add_periodicity(out, record.termination, record.periodicity);
  return out;
}

std::string chain_summary(Termination termination, const std::optional<Periodicity>& found) {
  std::ostringstream out;
  out << "termination=" << to_string(termination) << '\n';
  out << "pre_period=" << (found ? std::to_string(found->pre_period) : "undetected") << '\n';
  out << "period=" << (found ? std::to_string(found->period) : "undetected") << '\n';
  return out.str();
}

std::string orbit_csv(const OrbitReport& report) { return orbit_csv_impl(report); }
std::string orbit_csv(const ExactOrbitReport& report) { return orbit_csv_impl(report); }
nlohmann::json orbit_json(const OrbitReport& report) { return orbit_json_impl(report); }
nlohmann::json orbit_json(const ExactOrbitReport& report) { return orbit_json_impl(report); }

std::string histogram_csv(const Histogram& histogram) {
  std::ostringstream out;
  out << "pre_period,count\n";
  for (const auto& [pre_period, count] : histogram.bins) out << pre_period << ',' << count << '\n';
  if (histogram.failures > 0) out << "failed," << histogram.failures << '\n';
  return out.str();
}

nlohmann::json histogram_json(const Histogram& histogram) {
  nlohmann::json bins = nlohmann::json::object();
  for (const auto& [pre_period, count] : histogram.bins) bins[std::to_string(pre_period)] = count;
  return {{"bins", bins},
          {"runs", histogram.runs},
          {"failures", histogram.failures},
          {"seed", histogram.seed}};
}

}  // namespace sixcircles
