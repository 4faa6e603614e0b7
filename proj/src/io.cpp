#include "gentile/io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace gt {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

Rational file_radicand(const Json& j) {
  Rational d = j.contains("radicand") ? rational_from_json(j.at("radicand")) : Rational(1);
  if (d.sign() < 0) throw Error(Errc::NegativeRadicand, "radicand must be nonnegative");
  if (d.is_zero()) d = Rational(1);
  // Stored in squarefree form so that files round-trip.
  mpz_class k;
  squarefree_split(d, nullptr, &k);
  return Rational(k);
}

}  // namespace

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) parse_error("rational must be a string \"num/den\"");
  return Rational::parse(j.get<std::string>());
}

Json quad_to_json(const QuadScalar& q, const Rational& d) {
  Rational a, b;
  q.coefficients_for(d, &a, &b);
  Json j;
  j["a"] = rational_to_json(a);
  j["b"] = rational_to_json(b);
  return j;
}

QuadScalar quad_from_json(const Json& j, const Rational& d) {
  if (j.is_string() || j.is_number_integer()) return QuadScalar(rational_from_json(j));
  Rational a = rational_from_json(field(j, "a"));
  Rational b = j.contains("b") ? rational_from_json(j.at("b")) : Rational();
  if (!b.is_zero() && d == Rational(1)) throw Error(Errc::RadicandMismatch, "nonzero b with radicand 1");
  return QuadScalar(a, b, d);
}

Json point_to_json(const Point& p, const Rational& d) { return Json::array({quad_to_json(p.x, d), quad_to_json(p.y, d)}); }

Point point_from_json(const Json& j, const Rational& d) {
  if (!j.is_array() || j.size() != 2) parse_error("point must be a pair");
  return Point{quad_from_json(j[0], d), quad_from_json(j[1], d)};
}

Json tri_to_json(const Tri& t, const Rational& d) {
  return Json::array({point_to_json(t[0], d), point_to_json(t[1], d), point_to_json(t[2], d)});
}

Tri tri_from_json(const Json& j, const Rational& d) {
  if (!j.is_array() || j.size() != 3) parse_error("triangle must have three points");
  return {point_from_json(j[0], d), point_from_json(j[1], d), point_from_json(j[2], d)};
}

Json tiling_to_json(const Tiling& t) {
  Tiling c = t;
  c.canonicalize();
  Json j;
  j["radicand"] = rational_to_json(c.radicand);
  j["master"] = tri_to_json(c.master, c.radicand);
  Json tiles = Json::array();
  for (const auto& tile : c.tiles) tiles.push_back(tri_to_json(tile, c.radicand));
  j["tiles"] = std::move(tiles);
  return j;
}

Tiling tiling_from_json(const Json& j) {
  Tiling t;
  t.radicand = file_radicand(j);
  t.master = tri_from_json(field(j, "master"), t.radicand);
  if (j.contains("tiles")) {
    if (!j.at("tiles").is_array()) parse_error("tiles must be an array");
    for (const auto& tile : j.at("tiles")) t.tiles.push_back(tri_from_json(tile, t.radicand));
  }
  return t;
}

Json curve_to_json(const CurveRule& r) {
  Json j;
  if (!r.name.empty()) j["name"] = r.name;
  j["radicand"] = rational_to_json(r.radicand);
  j["master"] = tri_to_json(r.master, r.radicand);
  Json children = Json::array();
  for (const auto& c : r.children) {
    Json m;
    m["m00"] = quad_to_json(c.map.m00, r.radicand);
    m["m01"] = quad_to_json(c.map.m01, r.radicand);
    m["m10"] = quad_to_json(c.map.m10, r.radicand);
    m["m11"] = quad_to_json(c.map.m11, r.radicand);
    m["tx"] = quad_to_json(c.map.tx, r.radicand);
    m["ty"] = quad_to_json(c.map.ty, r.radicand);
    Json cj;
    cj["map"] = std::move(m);
    cj["reversed"] = c.reversed;
    if (c.weight) cj["weight"] = rational_to_json(*c.weight);
    children.push_back(std::move(cj));
  }
  j["children"] = std::move(children);
  return j;
}

CurveRule curve_from_json(const Json& j) {
  CurveRule r;
  if (j.contains("name")) r.name = j.at("name").get<std::string>();
  r.radicand = file_radicand(j);
  r.master = tri_from_json(field(j, "master"), r.radicand);
  const Json& children = field(j, "children");
  if (!children.is_array()) parse_error("children must be an array");
  for (const auto& cj : children) {
    const Json& m = field(cj, "map");
    CurveChild c;
    c.map.m00 = quad_from_json(field(m, "m00"), r.radicand);
    c.map.m01 = quad_from_json(field(m, "m01"), r.radicand);
    c.map.m10 = quad_from_json(field(m, "m10"), r.radicand);
    c.map.m11 = quad_from_json(field(m, "m11"), r.radicand);
    c.map.tx = quad_from_json(field(m, "tx"), r.radicand);
    c.map.ty = quad_from_json(field(m, "ty"), r.radicand);
    if (!c.map.is_similarity()) throw Error(Errc::NotASimilarity, "child map is not a similarity");
    if (cj.contains("reversed")) {
      if (!cj.at("reversed").is_boolean()) parse_error("reversed must be a boolean");
      c.reversed = cj.at("reversed").get<bool>();
    }
    if (cj.contains("weight")) c.weight = rational_from_json(cj.at("weight"));
    r.children.push_back(std::move(c));
  }
  return r;
}

std::string dump(const Json& j) { return j.dump(1) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
  out << bytes;
}

namespace {

Json parse_json(const std::string& bytes, const std::string& path) {
  try {
    return Json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

}  // namespace

void save_tiling(const std::string& path, const Tiling& t) { write_file(path, dump(tiling_to_json(t))); }
Tiling load_tiling(const std::string& path) { return tiling_from_json(parse_json(read_file(path), path)); }
void save_curve(const std::string& path, const CurveRule& r) { write_file(path, dump(curve_to_json(r))); }
CurveRule load_curve(const std::string& path) { return curve_from_json(parse_json(read_file(path), path)); }

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

}  // namespace gt
