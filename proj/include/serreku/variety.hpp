#pragma once

/**
 * @file variety.hpp
 * @brief Ambient index-one Fano threefold of even genus: degree, Todd
 *        class and the numerical classes of the exceptional objects.
 */

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "serreku/error.hpp"
#include "serreku/numchern.hpp"
#include "serreku/rational.hpp"

namespace serreku {

struct VarietyParams {
  int genus = 6;
  int degree = 10;
  /// Coefficients of 1, H, H^2, H^3 in td(X). Entries 2 and 3 may be unset
  /// for genus != 6.
  std::array<std::optional<Rational>, 4> todd;
  /// Optional ch3 tails for the genus-g exceptional bundle and Ku basis.
  std::optional<Rational> e2_ch3;
  std::optional<Rational> b1_ch3;
  std::optional<Rational> b2_ch3;

  bool is_gm() const { return genus == 6; }
  bool has_full_todd() const { return todd[2].has_value() && todd[3].has_value(); }

  const Rational& td(int i) const {
    if (!todd.at(static_cast<std::size_t>(i)))
      throw Error(ErrorCode::MissingTodd, "td" + std::to_string(i) + " is unset for genus " +
                                              std::to_string(genus));
    return *todd[static_cast<std::size_t>(i)];
  }

  Rational d() const { return Rational(degree); }
};

/// Even genus 6 <= g <= 12. td2/td3 are only known for g = 6; pass them in
/// for other genera.
inline VarietyParams make_variety(int genus,
                                  std::optional<Rational> td2 = std::nullopt,
                                  std::optional<Rational> td3 = std::nullopt) {
  if (genus < 6 || genus > 12 || genus % 2 != 0)
    throw Error(ErrorCode::UnsupportedGenus,
                "genus " + std::to_string(genus) + " (need even 6 <= g <= 12)");
  VarietyParams v;
  v.genus = genus;
  v.degree = 2 * genus - 2;
  v.todd[0] = Rational(1);
  v.todd[1] = Rational(1, 2);  // c1(T_X)/2 with K_X = -H
  if (genus == 6) {
    v.todd[2] = Rational(17, 60);
    v.todd[3] = Rational(1, 10);
  }
  if (td2) v.todd[2] = td2;
  if (td3) v.todd[3] = td3;
  return v;
}

namespace detail {

/// chi(O, v) for a class with ch3 set; ch3 of the unknown is solved from it.
inline Rational integrate_with_todd(const NumChern& v, const VarietyParams& var) {
  return var.d() * (v.require_ch3("chi(O,-)") + v.ch2 * var.td(1) + v.c1 * var.td(2) + v.rk * var.td(3));
}

/// ch3 making chi(O, (rk, c1, ch2, ch3)) equal to chi.
inline Rational ch3_from_chi(const NumChern& trunc, const Rational& chi, const VarietyParams& var) {
  return chi / var.d() - (trunc.ch2 * var.td(1) + trunc.c1 * var.td(2) + trunc.rk * var.td(3));
}

inline std::optional<long> parse_twist_name(std::string_view name) {
  if (name.size() < 4 || name.substr(0, 2) != "O(" || name.back() != ')') return std::nullopt;
  std::string inner(name.substr(2, name.size() - 3));
  if (!inner.empty() && inner.back() == 'H') inner.pop_back();
  if (inner.empty() || inner == "+") return 1;
  if (inner == "-") return -1;
  std::size_t i = (inner[0] == '-' || inner[0] == '+') ? 1 : 0;
  if (i == inner.size()) return std::nullopt;
  for (std::size_t j = i; j < inner.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(inner[j]))) return std::nullopt;
  return std::stol(inner);
}

}  // namespace detail

/// ch(U^vee) for the GM threefold: ch<=2 = (2, H, 1/10 H^2), and ch3 pinned
/// by chi(U^vee) = h^0(U^vee) = 5.
inline NumChern gm_udual(const VarietyParams& var) {
  NumChern t(2, 1, Rational(1, 10));
  t.ch3 = detail::ch3_from_chi(t, Rational(5), var);
  return t;
}

/// Numerical class of a named exceptional object.
/// Names: O(k) / O(kH), U, Udual (genus 6 only), E2, E2dual.
inline NumChern catalog(const VarietyParams& var, std::string_view name) {
  if (auto k = detail::parse_twist_name(name)) return line_bundle(*k);
  if (name == "O") return line_bundle(0);
  if (name == "U" || name == "Udual") {
    if (!var.is_gm())
      throw Error(ErrorCode::UnknownObject, std::string(name) + " only exists for genus 6; use E2");
    NumChern ud = gm_udual(var);
    return name == "Udual" ? ud : twist(ud, -1);
  }
  if (name == "E2" || name == "E2dual") {
    NumChern e2;
    if (var.is_gm()) {
      e2 = twist(gm_udual(var), -1);
    } else {
      e2 = NumChern(2, -1, Rational(var.genus - 4) / (Rational(2) * var.d()), var.e2_ch3);
    }
    return name == "E2dual" ? dual(e2) : e2;
  }
  throw Error(ErrorCode::UnknownObject, "no catalog object named '" + std::string(name) + "'");
}

}  // namespace serreku
