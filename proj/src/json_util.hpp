#pragma once

#include "trisq/error.hpp"
#include "trisq/polytope.hpp"
#include "trisq/rational.hpp"

#include <json.hpp>

namespace trisq::detail {

// Exact fractions travel as {"num": "<int>", "den": "<int>"}.
inline nlohmann::json to_json(const Rat& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

inline nlohmann::json to_json(const QPoint& p) { return {{"x", to_json(p.x)}, {"y", to_json(p.y)}}; }

inline nlohmann::json to_json(const Polygon& poly) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : poly.vertices) out.push_back(to_json(v));
  return out;
}

inline Rat rat_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() || !j["den"].is_string())
    throw Error(ErrorCode::parse_error, "fraction must be {\"num\": string, \"den\": string}");
  return make_rat(parse_rat(j["num"].get<std::string>()).get_num(), parse_rat(j["den"].get<std::string>()).get_num());
}

inline QPoint point_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("y")) throw Error(ErrorCode::parse_error, "point must be {\"x\": ..., \"y\": ...}");
  return {rat_from_json(j["x"]), rat_from_json(j["y"])};
}

inline Polygon polygon_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::parse_error, "polygon must be an array of points");
  Polygon p;
  for (const auto& v : j) p.vertices.push_back(point_from_json(v));
  return p;
}

}  // namespace trisq::detail
