#pragma once

#include <string>

#include "json.hpp"

#include "gentile/sfc.hpp"
#include "gentile/tiling.hpp"

namespace gt {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "gentile 1.0.0";

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
// {"a": ..., "b": ...} relative to the file radicand d.
Json quad_to_json(const QuadScalar& q, const Rational& d);
QuadScalar quad_from_json(const Json& j, const Rational& d);
Json point_to_json(const Point& p, const Rational& d);
Point point_from_json(const Json& j, const Rational& d);
Json tri_to_json(const Tri& t, const Rational& d);
Tri tri_from_json(const Json& j, const Rational& d);

// Tiles are written in canonical order.
Json tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const Json& j);
Json curve_to_json(const CurveRule& r);
CurveRule curve_from_json(const Json& j);

std::string dump(const Json& j);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

void save_tiling(const std::string& path, const Tiling& t);
Tiling load_tiling(const std::string& path);
void save_curve(const std::string& path, const CurveRule& r);
CurveRule load_curve(const std::string& path);

// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& bytes);

}  // namespace gt
