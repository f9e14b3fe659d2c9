#include "jsonio.hpp"

#include <stdexcept>

namespace sl2real {

namespace {

const Json& need(const Json& j, const char* field) {
  if (!j.is_object() || !j.contains(field))
    throw std::invalid_argument(std::string("missing field '") + field + "'");
  return j.at(field);
}

}  // namespace

Json cyc_to_json(const CycNum& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(rational_str(c));
  return Json{{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

CycNum cyc_from_json(const Json& j) {
  if (j.is_string()) return CycNum(rational_parse(j.get<std::string>()));
  if (j.is_number_integer()) return CycNum(Rational(j.get<long>()));
  const Json& cond = need(j, "conductor");
  const Json& coeffs = need(j, "coeffs");
  if (!cond.is_number_unsigned() || cond.get<unsigned>() == 0)
    throw std::invalid_argument("field 'conductor' must be a positive integer");
  if (!coeffs.is_array())
    throw std::invalid_argument("field 'coeffs' must be an array");
  std::vector<Rational> c;
  for (const auto& e : coeffs) {
    if (e.is_string())
      c.push_back(rational_parse(e.get<std::string>()));
    else if (e.is_number_integer())
      c.push_back(Rational(e.get<long>()));
    else
      throw std::invalid_argument("field 'coeffs' entries must be rationals");
  }
  return CycNum::make(cond.get<unsigned>(), std::move(c));
}

Json mat_to_json(const Mat2& m) {
  return Json::array({Json::array({cyc_to_json(m.a), cyc_to_json(m.b)}),
                      Json::array({cyc_to_json(m.c), cyc_to_json(m.d)})});
}

Mat2 mat_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() ||
      !j[1].is_array() || j[0].size() != 2 || j[1].size() != 2)
    throw std::invalid_argument("matrix must be a 2x2 array");
  return Mat2(cyc_from_json(j[0][0]), cyc_from_json(j[0][1]),
              cyc_from_json(j[1][0]), cyc_from_json(j[1][1]));
}

Json point_to_json(const ProjPoint& p) {
  return Json::array({cyc_to_json(p.x), cyc_to_json(p.y)});
}

ProjPoint point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("projective point must be a pair");
  return ProjPoint::make(cyc_from_json(j[0]), cyc_from_json(j[1]));
}

Json embedding_to_json(const Embedding& e) {
  Json orbits = Json::array();
  for (const auto& rec : e.records) {
    Json spokes = Json::array();
    for (const auto& p : rec.spokes) spokes.push_back(point_to_json(p));
    Json rs = Json::array();
    for (const auto& r : rec.rs) rs.push_back(rational_str(r));
    orbits.push_back(Json{{"type", orbit_type_name(rec.type)},
                          {"spokes", spokes},
                          {"r", rs}});
  }
  return Json{
      {"group", e.group.str()}, {"nu0", e.has_nu0}, {"orbits", orbits}};
}

Embedding embedding_from_json(const Json& j) {
  Embedding e;
  const Json& group = need(j, "group");
  if (!group.is_string())
    throw std::invalid_argument("field 'group' must be a label string");
  e.group = GroupLabel::parse(group.get<std::string>());
  const Json& nu0 = need(j, "nu0");
  if (!nu0.is_boolean())
    throw std::invalid_argument("field 'nu0' must be a boolean");
  e.has_nu0 = nu0.get<bool>();
  const Json& orbits = need(j, "orbits");
  if (!orbits.is_array())
    throw std::invalid_argument("field 'orbits' must be an array");
  for (const auto& o : orbits) {
    OrbitRecord rec;
    const Json& type = need(o, "type");
    if (!type.is_string())
      throw std::invalid_argument("field 'type' must be a string");
    rec.type = orbit_type_parse(type.get<std::string>());
    const Json& spokes = need(o, "spokes");
    if (!spokes.is_array() || spokes.empty())
      throw std::invalid_argument("field 'spokes' must be a nonempty array");
    for (const auto& s : spokes) rec.spokes.push_back(point_from_json(s));
    const Json& rs = need(o, "r");
    if (!rs.is_array() || rs.empty())
      throw std::invalid_argument("field 'r' must be a nonempty array");
    for (const auto& r : rs) {
      if (r.is_string())
        rec.rs.push_back(rational_parse(r.get<std::string>()));
      else if (r.is_number_integer())
        rec.rs.push_back(Rational(r.get<long>()));
      else
        throw std::invalid_argument("field 'r' entries must be rationals");
    }
    e.records.push_back(std::move(rec));
  }
  return e;
}

Mat2 matrix_from_arg(const std::string& arg) {
  std::string trimmed = arg;
  size_t b = trimmed.find_first_not_of(" \t");
  if (b != std::string::npos && trimmed[b] == '[') {
    Json j = Json::parse(trimmed);  // may throw nlohmann parse_error
    return mat_from_json(j);
  }
  return parse_matrix_token(arg);
}

std::string dump_json(const Json& j, bool pretty) {
  return pretty ? j.dump(2) : j.dump();
}

}  // namespace sl2real
