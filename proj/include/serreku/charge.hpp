#pragma once

/**
 * @file charge.hpp
 * @brief Central charges as exact linear maps on numerical classes.
 *
 * Two parametrizations are supported:
 *   sq:  Z_{s,q}(E)      = -(H ch2 - q rk H^3) + i (H^2 ch1 - s rk H^3)
 *   ab:  Z_{alpha,beta}(E) = alpha^2/2 H^3 ch0^b - H ch2^b + i H^2 ch1^b
 * Both carry the factor H^3 = d. An optional rotation by 1/u, with
 * u = -mu + i, implements the second tilt; u is kept unnormalized, so the
 * rotated charge is conj(u) Z = |u|^2 (1/u) Z. The positive factor |u|^2
 * never changes orientations or zero sets.
 */

#include <optional>
#include <utility>
#include <variant>

#include "serreku/chern.hpp"
#include "serreku/error.hpp"
#include "serreku/exactalg.hpp"
#include "serreku/numchern.hpp"
#include "serreku/tiltplane.hpp"
#include "serreku/variety.hpp"

namespace serreku {

struct SqCharge {
  PlanePoint point;
};

struct AbCharge {
  Rational beta;
  Rational alpha_sq;
};

struct ChargeSpec {
  std::variant<SqCharge, AbCharge> kind;
  std::optional<Rational> rotation_mu;

  static ChargeSpec sq(PlanePoint p, std::optional<Rational> mu = std::nullopt) {
    return {SqCharge{std::move(p)}, std::move(mu)};
  }
  static ChargeSpec ab(Rational beta, Rational alpha_sq, std::optional<Rational> mu = std::nullopt) {
    if (alpha_sq.sign() <= 0) throw Error(ErrorCode::NonPositiveAlphaSq, "alpha^2 must be positive");
    return {AbCharge{std::move(beta), std::move(alpha_sq)}, std::move(mu)};
  }
};

/// u = -mu + i, unnormalized.
inline GaussRational rotation_unit(const Rational& mu) { return {-mu, Rational(1)}; }

inline GaussRational central_charge(const ChargeSpec& spec, const NumChern& v, const VarietyParams& var) {
  Rational d = var.d();
  GaussRational z;
  if (const auto* sq = std::get_if<SqCharge>(&spec.kind)) {
    z = {-(d * v.ch2 - sq->point.q * v.rk * d), d * v.c1 - sq->point.s * v.rk * d};
  } else {
    const auto& ab = std::get<AbCharge>(spec.kind);
    NumChern tw = twisted_char(v, ab.beta);
    z = {ab.alpha_sq / 2 * d * tw.rk - d * tw.ch2, d * tw.c1};
  }
  if (spec.rotation_mu) z = rotation_unit(*spec.rotation_mu).conj() * z;
  return z;
}

enum class BasisTag { B, D, C, Custom };

struct ChargeMatrix {
  Mat2 m;  // column j = (Re, Im) of the charge on basis vector j
  BasisTag basis_tag = BasisTag::Custom;
};

inline ChargeMatrix charge_matrix(const ChargeSpec& spec, const std::pair<NumChern, NumChern>& basis,
                                  const VarietyParams& var, BasisTag tag = BasisTag::Custom) {
  GaussRational z1 = central_charge(spec, basis.first, var);
  GaussRational z2 = central_charge(spec, basis.second, var);
  return {Mat2::from_columns({z1.re, z1.im}, {z2.re, z2.im}), tag};
}

/// +1 when the two charge vectors are positively oriented in C, -1 when
/// negatively, 0 when collinear.
inline int orientation(const ChargeMatrix& cm) { return det2(cm.m).sign(); }

}  // namespace serreku
