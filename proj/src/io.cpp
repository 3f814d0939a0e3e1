#include "p1p1/io.hpp"

#include <json.hpp>

namespace p1p1 {

using nlohmann::json;

namespace {

json field_to_json(const Field& f) {
  if (f.is_rationals()) return json("QQ");
  return json{{"Fp", f.modulus()}};
}

Field field_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "QQ") return Field::rationals();
    throw std::invalid_argument("bad \"field\": expected \"QQ\" or {\"Fp\": p}");
  }
  if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_unsigned())
    return Field::prime(j["Fp"].get<std::uint32_t>());
  throw std::invalid_argument("bad \"field\": expected \"QQ\" or {\"Fp\": p}");
}

json parse_or_throw(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON document");
  return j;
}

}  // namespace

std::string points_to_json(const PointSet& xs) {
  json pts = json::array();
  for (const auto& p : xs.points)
    pts.push_back(json::array({json::array({p.a0.str(), p.a1.str()}),
                               json::array({p.b0.str(), p.b1.str()})}));
  json j{{"field", field_to_json(xs.field)}, {"points", pts}};
  return j.dump(2) + "\n";
}

PointSet points_from_json(const std::string& text, std::optional<Field> override_field) {
  json j = parse_or_throw(text);
  if (!j.contains("field")) throw std::invalid_argument("missing \"field\"");
  if (!j.contains("points") || !j["points"].is_array())
    throw std::invalid_argument("missing or non-array \"points\"");
  Field f = override_field.value_or(field_from_json(j["field"]));
  std::vector<Point> pts;
  for (const auto& entry : j["points"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array() ||
        entry[0].size() != 2 || !entry[1].is_array() || entry[1].size() != 2)
      throw std::invalid_argument("bad \"points\" entry: expected [[a0,a1],[b0,b1]]");
    auto coord = [&](const json& c) {
      if (!c.is_string()) throw std::invalid_argument("bad coordinate: expected a string");
      return Scalar::parse(c.get<std::string>(), f);
    };
    pts.push_back(Point::of(coord(entry[0][0]), coord(entry[0][1]), coord(entry[1][0]),
                            coord(entry[1][1])));
  }
  return PointSet::of(f, std::move(pts));
}

std::string cert_to_json(const VirtualCert& cert) {
  json torsion = json::array();
  for (bool b : cert.torsion) torsion.push_back(b);
  json j{{"torsion", torsion}, {"h0_saturation", cert.h0_saturation}, {"virtual", cert.overall}};
  return j.dump(2) + "\n";
}

std::string complex_to_json(const FreeComplex& c, const VirtualCert* cert) {
  json modules = json::array();
  for (const auto& m : c.modules) {
    json shifts = json::array();
    for (const auto& s : m.shifts) shifts.push_back(json::array({s.i, s.j}));
    modules.push_back(shifts);
  }
  json maps = json::array();
  for (const auto& mat : c.maps) {
    json rows = json::array();
    for (const auto& row : mat) {
      json r = json::array();
      for (const auto& e : row) r.push_back(e.str());
      rows.push_back(r);
    }
    maps.push_back(rows);
  }
  json j{{"field", field_to_json(c.field)}, {"modules", modules}, {"maps", maps}};
  if (cert) {
    json torsion = json::array();
    for (bool b : cert->torsion) torsion.push_back(b);
    j["certificate"] = json{{"torsion", torsion},
                            {"h0_saturation", cert->h0_saturation},
                            {"virtual", cert->overall}};
  }
  return j.dump(2) + "\n";
}

FreeComplex complex_from_json(const std::string& text) {
  json j = parse_or_throw(text);
  if (!j.contains("modules") || !j["modules"].is_array())
    throw std::invalid_argument("missing or non-array \"modules\"");
  if (!j.contains("maps") || !j["maps"].is_array())
    throw std::invalid_argument("missing or non-array \"maps\"");
  FreeComplex c;
  c.field = j.contains("field") ? field_from_json(j["field"]) : Field::rationals();
  for (const auto& m : j["modules"]) {
    if (!m.is_array()) throw std::invalid_argument("bad \"modules\" entry");
    FreeBiModule mod;
    for (const auto& s : m) {
      if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() ||
          !s[1].is_number_integer())
        throw std::invalid_argument("bad shift: expected [a,b]");
      mod.shifts.push_back({s[0].get<int>(), s[1].get<int>()});
    }
    c.modules.push_back(mod);
  }
  for (const auto& mat : j["maps"]) {
    if (!mat.is_array()) throw std::invalid_argument("bad \"maps\" entry");
    std::vector<std::vector<BiPoly>> rows;
    for (const auto& row : mat) {
      if (!row.is_array()) throw std::invalid_argument("bad matrix row");
      std::vector<BiPoly> r;
      for (const auto& e : row) {
        if (!e.is_string()) throw std::invalid_argument("bad matrix entry: expected a string");
        r.push_back(BiPoly::parse(e.get<std::string>(), c.field));
      }
      rows.push_back(r);
    }
    c.maps.push_back(rows);
  }
  if ((int)c.maps.size() != c.length())
    throw std::invalid_argument("\"maps\" length does not match \"modules\"");
  for (int k = 1; k <= c.length(); ++k) {
    const auto& m = c.map_of(k);
    if ((int)m.size() != c.modules[k - 1].rank())
      throw std::invalid_argument("matrix row count does not match the target rank");
    for (const auto& row : m)
      if ((int)row.size() != c.modules[k].rank())
        throw std::invalid_argument("matrix column count does not match the source rank");
  }
  return c;
}

}  // namespace p1p1
