#pragma once

/**
 * @file json_io.hpp
 * @brief JSON forms of rationals and classes, named class references and
 *        variety config files.
 *
 * Rationals are always strings "p/q" (or "n") so nothing passes through a
 * double. A class is {"rk", "c1", "ch2", "ch3"} with "ch3" omitted when
 * unset.
 */

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "serreku/chern.hpp"
#include "serreku/error.hpp"
#include "serreku/kulattice.hpp"
#include "serreku/numchern.hpp"
#include "serreku/rational.hpp"
#include "serreku/variety.hpp"

namespace serreku {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error(ErrorCode::ParseError, "expected a rational string, got " + j.dump());
}

inline json to_json(const NumChern& v) {
  json j;
  j["rk"] = v.rk.str();
  j["c1"] = v.c1.str();
  j["ch2"] = v.ch2.str();
  if (v.ch3) j["ch3"] = v.ch3->str();
  return j;
}

inline NumChern class_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "class must be a JSON object");
  for (const char* k : {"rk", "c1", "ch2"})
    if (!j.contains(k)) throw Error(ErrorCode::ParseError, std::string("class is missing '") + k + "'");
  NumChern v(rational_from_json(j["rk"]), rational_from_json(j["c1"]), rational_from_json(j["ch2"]));
  if (j.contains("ch3") && !j["ch3"].is_null()) v.ch3 = rational_from_json(j["ch3"]);
  return v;
}

inline json to_json(const Mat2& m) {
  return json::array({json::array({m.at(0, 0).str(), m.at(0, 1).str()}),
                      json::array({m.at(1, 0).str(), m.at(1, 1).str()})});
}

inline json to_json(const QuadraticSurd& x) { return x.str(); }

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace detail

/// @b1 @b2 @d1 @d2 @c1 @c2 or any catalog name after '@'.
inline NumChern resolve_named(std::string_view name, const VarietyParams& var) {
  static const std::pair<const char*, std::pair<RegionId, int>> lattice_names[] = {
      {"b1", {RegionId::Ku1, 0}}, {"b2", {RegionId::Ku1, 1}}, {"c1", {RegionId::Ku2, 0}},
      {"c2", {RegionId::Ku2, 1}}, {"d1", {RegionId::Ku3, 0}}, {"d2", {RegionId::Ku3, 1}}};
  for (const auto& [n, which] : lattice_names) {
    if (name == n) {
      auto basis = lattice_basis(which.first, var);
      return which.second == 0 ? basis.first : basis.second;
    }
  }
  return catalog(var, name);
}

/// A class argument: "@name", a JSON object, or "rk,c1,ch2[,ch3]".
inline NumChern parse_class(std::string_view text, const VarietyParams& var) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty class");
  if (text[0] == '@') return resolve_named(text.substr(1), var);
  if (text[0] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("bad class JSON: ") + e.what());
    }
    return class_from_json(j);
  }
  auto parts = detail::split(text, ',');
  if (parts.size() != 3 && parts.size() != 4)
    throw Error(ErrorCode::ParseError, "class needs 3 or 4 comma-separated entries");
  NumChern v(Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2]));
  if (parts.size() == 4) v.ch3 = Rational::parse(parts[3]);
  return v;
}

/// "a,b" as two rationals.
inline std::pair<Rational, Rational> parse_pair(std::string_view text) {
  auto parts = detail::split(text, ',');
  if (parts.size() != 2) throw Error(ErrorCode::ParseError, "expected 'a,b', got '" + std::string(text) + "'");
  return {Rational::parse(parts[0]), Rational::parse(parts[1])};
}

/// {"genus": g, "todd": [td0, td1, td2, td3], "e2_ch3", "b1_ch3", "b2_ch3"};
/// every key but "genus" is optional, and todd entries may be null.
inline VarietyParams variety_from_json(const json& j) {
  if (!j.is_object() || !j.contains("genus") || !j["genus"].is_number_integer())
    throw Error(ErrorCode::ParseError, "config needs an integer 'genus'");
  std::optional<Rational> td2, td3;
  if (j.contains("todd")) {
    const json& t = j["todd"];
    if (!t.is_array() || t.size() != 4) throw Error(ErrorCode::ParseError, "'todd' must have 4 entries");
    if (!t[2].is_null()) td2 = rational_from_json(t[2]);
    if (!t[3].is_null()) td3 = rational_from_json(t[3]);
  }
  VarietyParams var = make_variety(j["genus"].get<int>(), td2, td3);
  if (j.contains("todd")) {
    const json& t = j["todd"];
    if ((!t[0].is_null() && rational_from_json(t[0]) != Rational(1)) ||
        (!t[1].is_null() && rational_from_json(t[1]) != Rational(1, 2)))
      throw Error(ErrorCode::ParseError, "td0 must be 1 and td1 must be 1/2");
  }
  auto opt = [&](const char* key) -> std::optional<Rational> {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    return rational_from_json(j[key]);
  };
  var.e2_ch3 = opt("e2_ch3");
  var.b1_ch3 = opt("b1_ch3");
  var.b2_ch3 = opt("b2_ch3");
  return var;
}

inline VarietyParams load_variety_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open config '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad config JSON: ") + e.what());
  }
  return variety_from_json(j);
}

}  // namespace serreku
