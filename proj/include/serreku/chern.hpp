#pragma once

/**
 * @file chern.hpp
 * @brief Euler pairing via Hirzebruch-Riemann-Roch, curve ideal classes and
 *        reduced characters.
 */

#include <array>
#include <variant>

#include "serreku/error.hpp"
#include "serreku/numchern.hpp"
#include "serreku/rational.hpp"
#include "serreku/variety.hpp"

namespace serreku {

namespace detail {

using Poly4 = std::array<Rational, 4>;

inline Poly4 as_poly(const NumChern& v, const char* ctx) {
  return {v.rk, v.c1, v.ch2, v.require_ch3(ctx)};
}

/// Product in Q[H]/(H^4).
inline Poly4 mul_trunc(const Poly4& a, const Poly4& b) {
  Poly4 r{Rational(0), Rational(0), Rational(0), Rational(0)};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; i + j < 4; ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace detail

/// chi(v, w) = integral of ch(v)^vee ch(w) td(X).
inline Rational euler(const NumChern& v, const NumChern& w, const VarietyParams& var) {
  detail::Poly4 td{var.td(0), var.td(1), var.td(2), var.td(3)};
  auto prod = detail::mul_trunc(detail::mul_trunc(detail::as_poly(dual(v), "euler"),
                                                  detail::as_poly(w, "euler")),
                                td);
  return prod[3] * var.d();
}

/// Class of the ideal sheaf of a curve of degree e and arithmetic genus gc,
/// i.e. [O_X] - [O_C]. ch3(O_C) is fixed by chi(O_X, O_C) = 1 - gc.
inline NumChern curve_ideal_class(long e, long gc, const VarietyParams& var) {
  if (e <= 0) throw Error(ErrorCode::ParseError, "curve degree must be positive");
  if (!var.has_full_todd()) throw Error(ErrorCode::MissingTodd, "curve_ideal_class needs td2, td3");
  NumChern oc(0, 0, Rational(e) / var.d());
  oc.ch3 = detail::ch3_from_chi(oc, Rational(1 - gc), var);
  return line_bundle(0) - oc;
}

struct PlanePoint {
  Rational s;
  Rational q;
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

/// Point at infinity [0 : c1 : ch2] of a rank-zero class.
struct PlaneDirection {
  Rational c1;
  Rational ch2;
  friend bool operator==(const PlaneDirection&, const PlaneDirection&) = default;
};

using ReducedPoint = std::variant<PlanePoint, PlaneDirection>;

/// Affine point (c1/rk, ch2/rk) of the reduced character, or its direction
/// when rk = 0. The factors of H^3 cancel in the affine chart.
inline ReducedPoint reduced_point(const NumChern& v) {
  if (v.rk.is_zero()) {
    if (v.c1.is_zero() && v.ch2.is_zero()) throw Error(ErrorCode::ZeroClass, "reduced character is zero");
    return PlaneDirection{v.c1, v.ch2};
  }
  return PlanePoint{v.c1 / v.rk, v.ch2 / v.rk};
}

/// Bogomolov-Gieseker discriminant (H^2 ch1)^2 - 2 (H^3 rk)(H ch2) >= 0.
inline bool satisfies_bogomolov(const NumChern& v, const VarietyParams& var) {
  Rational d = var.d();
  Rational x = d * v.c1;
  return x * x - Rational(2) * d * v.rk * d * v.ch2 >= Rational(0);
}

}  // namespace serreku
