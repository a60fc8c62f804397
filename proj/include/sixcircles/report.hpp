#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "sixcircles/chain.hpp"
#include "sixcircles/experiments.hpp"
#include "sixcircles/pl_map.hpp"
#include "sixcircles/polygon.hpp"
#include "sixcircles/triangle.hpp"

namespace sixcircles {

/// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

std::string_view to_string(Choice choice);
std::string_view to_string(SignCase sign_case);
std::string_view to_string(Termination termination);

nlohmann::json triangle_json(const Triangle& tri, bool degrees = false);

/// Columns: step,vertex,radius,u,phi,sign_case,choice,center_x,center_y.
/// Vertices are 1-based; phi is empty when u^2 > p (and always for
/// polygons, which have no angle coordinate).
inline constexpr std::string_view kChainCsvHeader =
    "step,vertex,radius,u,phi,sign_case,choice,center_x,center_y";

std::string chain_csv(std::span<const ChainStep> steps, std::optional<double> semiperimeter,
                      bool degrees = false);
nlohmann::json chain_json(const ChainRecord& record, bool degrees = false);
nlohmann::json chain_json(const PolygonChainRecord& record);

/// `termination=...`, `pre_period=...`, `period=...` lines.
std::string chain_summary(Termination termination, const std::optional<Periodicity>& found);

std::string orbit_csv(const OrbitReport& report);
std::string orbit_csv(const ExactOrbitReport& report);
nlohmann::json orbit_json(const OrbitReport& report);
nlohmann::json orbit_json(const ExactOrbitReport& report);

/// Columns: pre_period,count.
std::string histogram_csv(const Histogram& histogram);
nlohmann::json histogram_json(const Histogram& histogram);

}  // namespace sixcircles
