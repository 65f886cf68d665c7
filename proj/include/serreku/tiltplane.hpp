#pragma once

/**
 * @file tiltplane.hpp
 * @brief Geometry of the (s, q) tilt plane.
 *
 * Tilt stability sigma_{alpha,beta} is reparametrized by s = beta and
 * q = (alpha^2 + beta^2)/2. In this chart the slope of an object is the
 * gradient of the line joining (s, q) to the object's reduced point, Li's
 * region is cut out by a lowered parabola and integer tangent lines, and the
 * three Kuznetsov regions lie below segments between exceptional objects.
 */

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "serreku/chern.hpp"
#include "serreku/error.hpp"
#include "serreku/exactalg.hpp"
#include "serreku/numchern.hpp"
#include "serreku/rational.hpp"
#include "serreku/variety.hpp"

namespace serreku {

/// Tilt parameter, optionally with the slope mu of the second tilt.
struct StabilityParam {
  PlanePoint point;
  std::optional<Rational> mu = std::nullopt;
};

/// Index of the Kuznetsov component Ku(X)_i the region induces conditions on.
enum class RegionId { Ku1 = 1, Ku2 = 2, Ku3 = 3 };

inline RegionId region_from_int(int i) {
  if (i < 1 || i > 3) throw Error(ErrorCode::ParseError, "region must be 1, 2 or 3");
  return static_cast<RegionId>(i);
}

inline PlanePoint ab_to_sq(const Rational& beta, const Rational& alpha_sq) {
  if (alpha_sq.sign() <= 0) throw Error(ErrorCode::NonPositiveAlphaSq, "alpha^2 must be positive");
  return {beta, (alpha_sq + beta * beta) / 2};
}

// ---------------------------------------------------------------------------
// Li's region

/// 3/(4d): depth of Li's parabola below q = s^2/2.
inline Rational li_offset(const VarietyParams& var) { return Rational(3) / (Rational(4) * var.d()); }

/// max over integers k of the tangent k s - k^2/2; attained at floor(s) or floor(s)+1.
inline Rational max_integer_tangent(const Rational& s) {
  Rational k0(s.floor());
  Rational k1 = k0 + 1;
  Rational t0 = k0 * s - k0 * k0 / 2, t1 = k1 * s - k1 * k1 / 2;
  return std::max(t0, t1);
}

/// Infimum of q over Li's region at abscissa s.
inline Rational li_lower_bound(const Rational& s, const VarietyParams& var) {
  return std::max(s * s / 2 - li_offset(var), max_integer_tangent(s));
}

inline bool in_li_region(const PlanePoint& p, const VarietyParams& var) {
  return p.q > li_lower_bound(p.s, var);
}

/// One piece of the boundary of Li's region, with exact abscissa endpoints.
struct LiBoundaryPiece {
  bool tangent;  // tangent line at O(kH), else an arc of the lowered parabola
  long k;        // tangent index; for arcs the tangent to the left
  QuadraticSurd s_from;
  QuadraticSurd s_to;
};

inline QuadraticSurd li_boundary_q(const LiBoundaryPiece& piece, const QuadraticSurd& s,
                                   const VarietyParams& var) {
  if (piece.tangent) {
    Rational k(piece.k);
    return QuadraticSurd(k) * s - QuadraticSurd(k * k / 2);
  }
  return QuadraticSurd(Rational(1, 2)) * s * s - QuadraticSurd(li_offset(var));
}

/// Boundary of Li's region over [s_lo, s_hi], left to right. The tangent at
/// k meets the lowered parabola at k +- sqrt(3/(2d)).
inline std::vector<LiBoundaryPiece> li_boundary_pieces(const Rational& s_lo, const Rational& s_hi,
                                                       const VarietyParams& var) {
  if (!(s_lo < s_hi)) throw Error(ErrorCode::EmptyWindow, "li boundary window is empty");
  QuadraticSurd r = QuadraticSurd::sqrt_of(Rational(3) / (Rational(2) * var.d()));
  QuadraticSurd lo(s_lo), hi(s_hi);
  std::vector<LiBoundaryPiece> out;
  auto clip_push = [&](bool tangent, long k, QuadraticSurd a, QuadraticSurd b) {
    if (surd_cmp(a, lo) < 0) a = lo;
    if (surd_cmp(b, hi) > 0) b = hi;
    if (surd_cmp(a, b) < 0) out.push_back({tangent, k, a, b});
  };
  long kmin = Rational(s_lo.floor()).num().get_si() - 1;
  long kmax = Rational(s_hi.floor()).num().get_si() + 1;
  for (long k = kmin; k <= kmax; ++k) {
    QuadraticSurd kk{Rational(k)};
    clip_push(true, k, kk - r, kk + r);
    clip_push(false, k, kk + r, QuadraticSurd(Rational(k + 1)) - r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Slopes

/// A tilt slope: a rational or +infinity.
struct Slope {
  bool infinite = false;
  Rational value;

  static Slope inf() { return {true, Rational(0)}; }

  std::string str() const { return infinite ? "+inf" : value.str(); }

  friend bool operator==(const Slope& a, const Slope& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
    if (a.infinite || b.infinite) {
      if (a.infinite && b.infinite) return std::strong_ordering::equal;
      return a.infinite ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return a.value <=> b.value;
  }
};

namespace detail {

/// (numerator, denominator) of mu_{s,q}, both including the factor H^3.
inline std::pair<Rational, Rational> slope_parts(const PlanePoint& p, const NumChern& v,
                                                 const VarietyParams& var) {
  Rational d = var.d();
  return {d * (v.ch2 - p.q * v.rk), d * (v.c1 - p.s * v.rk)};
}

}  // namespace detail

/// mu_{s,q}(v). The class must be in heart orientation (denominator >= 0).
inline Slope slope(const PlanePoint& p, const NumChern& v, const VarietyParams& var) {
  auto [n, d] = detail::slope_parts(p, v, var);
  if (d.sign() < 0)
    throw Error(ErrorCode::NegativeDenominator, "class is not in Coh^s orientation; shift it");
  if (d.is_zero()) {
    if (n.is_zero()) throw Error(ErrorCode::ZeroOverZero, "slope numerator and denominator vanish");
    return Slope::inf();
  }
  return {false, n / d};
}

struct SlopeOrder {
  std::vector<std::size_t> permutation;               // indices, ascending slope
  std::vector<std::pair<std::size_t, std::size_t>> ties;  // pairs of input indices
};

inline SlopeOrder slope_order(const PlanePoint& p, const std::vector<NumChern>& vs,
                              const VarietyParams& var) {
  std::vector<Slope> mus;
  mus.reserve(vs.size());
  for (const auto& v : vs) mus.push_back(slope(p, v, var));
  SlopeOrder out;
  out.permutation.resize(vs.size());
  std::iota(out.permutation.begin(), out.permutation.end(), std::size_t{0});
  std::stable_sort(out.permutation.begin(), out.permutation.end(),
                   [&](std::size_t a, std::size_t b) { return mus[a] < mus[b]; });
  for (std::size_t i = 0; i + 1 < out.permutation.size(); ++i) {
    std::size_t a = out.permutation[i], b = out.permutation[i + 1];
    if (mus[a] == mus[b]) out.ties.emplace_back(std::min(a, b), std::max(a, b));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kuznetsov regions

namespace detail {

inline PlanePoint affine_point(const NumChern& v) {
  auto rp = reduced_point(v);
  return std::get<PlanePoint>(rp);
}

}  // namespace detail

/// Objects bounding region r: (left endpoint, right endpoint) of the segment.
/// Ku1: O(-H), E2; Ku2: E2, O; Ku3: O, E2dual (E2 = U for genus 6).
inline std::pair<NumChern, NumChern> region_segment_objects(RegionId r, const VarietyParams& var) {
  switch (r) {
    case RegionId::Ku1: return {catalog(var, "O(-1)"), catalog(var, "E2")};
    case RegionId::Ku2: return {catalog(var, "E2"), catalog(var, "O")};
    case RegionId::Ku3: return {catalog(var, "O"), catalog(var, "E2dual")};
  }
  throw Error(ErrorCode::ParseError, "bad region");
}

inline std::pair<PlanePoint, PlanePoint> region_endpoints(RegionId r, const VarietyParams& var) {
  auto [a, b] = region_segment_objects(r, var);
  return {detail::affine_point(a), detail::affine_point(b)};
}

/// Line q = slope * s + intercept through the two segment endpoints.
struct Line {
  Rational slope;
  Rational intercept;
  Rational at(const Rational& s) const { return slope * s + intercept; }
};

inline Line region_line(RegionId r, const VarietyParams& var) {
  auto [a, b] = region_endpoints(r, var);
  Rational m = (b.q - a.q) / (b.s - a.s);
  return {m, a.q - m * a.s};
}

enum class RegionStatus { Inside, BelowLiBoundary, OutsideSegmentSpan, NotBelowSegment };

inline std::string describe(RegionStatus st) {
  switch (st) {
    case RegionStatus::Inside: return "in region";
    case RegionStatus::BelowLiBoundary: return "not in region: below Li boundary";
    case RegionStatus::OutsideSegmentSpan: return "not in region: s outside the segment span";
    case RegionStatus::NotBelowSegment: return "not in region: not below the segment";
  }
  return "";
}

/// Open region: inside Li's region, s strictly within the segment's span,
/// and q strictly below the segment's line.
inline RegionStatus region_check(const PlanePoint& p, RegionId r, const VarietyParams& var) {
  if (!in_li_region(p, var)) return RegionStatus::BelowLiBoundary;
  auto [a, b] = region_endpoints(r, var);
  if (!(a.s < p.s && p.s < b.s)) return RegionStatus::OutsideSegmentSpan;
  if (!(p.q < region_line(r, var).at(p.s))) return RegionStatus::NotBelowSegment;
  return RegionStatus::Inside;
}

inline bool region_test(const PlanePoint& p, RegionId r, const VarietyParams& var) {
  return region_check(p, r, var) == RegionStatus::Inside;
}

/// Open q-interval of region r over the vertical line at s, if nonempty.
inline std::optional<std::pair<Rational, Rational>> region_slice(const Rational& s, RegionId r,
                                                                 const VarietyParams& var) {
  auto [a, b] = region_endpoints(r, var);
  if (!(a.s < s && s < b.s)) return std::nullopt;
  Rational lo = li_lower_bound(s, var), hi = region_line(r, var).at(s);
  if (!(lo < hi)) return std::nullopt;
  return std::make_pair(lo, hi);
}

/// The (shifted) objects whose slopes bound the second-tilt window in region r.
inline std::pair<NumChern, NumChern> window_objects(RegionId r, const VarietyParams& var) {
  switch (r) {
    case RegionId::Ku1: return {shift(catalog(var, "O(-1)"), 1), catalog(var, "E2")};
    case RegionId::Ku2: return {shift(catalog(var, "E2"), 1), catalog(var, "O")};
    case RegionId::Ku3: return {shift(catalog(var, "O"), 1), catalog(var, "E2dual")};
  }
  throw Error(ErrorCode::ParseError, "bad region");
}

/// Admissible mu for the second tilt: lo <= mu < hi.
struct MuWindow {
  Slope lo;  // closed
  Slope hi;  // open
  bool contains(const Rational& mu) const {
    Slope m{false, mu};
    return lo <= m && m < hi;
  }
};

inline MuWindow mu_window(const PlanePoint& p, RegionId r, const VarietyParams& var) {
  RegionStatus st = region_check(p, r, var);
  if (st != RegionStatus::Inside) throw Error(ErrorCode::OutsideRegion, describe(st));
  auto [lo_obj, hi_obj] = window_objects(r, var);
  MuWindow w{slope(p, lo_obj, var), slope(p, hi_obj, var)};
  if (!(w.lo < w.hi)) throw Error(ErrorCode::OutsideRegion, "empty mu window");
  return w;
}

// ---------------------------------------------------------------------------
// Walls

struct WallEndpoints {
  Rational gradient;      // slope of the line through p and the class
  QuadraticSurd b_minus;  // smaller intersection abscissa with q = s^2/2
  QuadraticSurd b_plus;   // larger one
};

/// Value of s^2/2 - m s + m s0 - q0 at s: zero exactly on the intersections of
/// q = s^2/2 with the line of gradient m through (s0, q0).
inline QuadraticSurd wall_quadratic(const PlanePoint& p, const Rational& m, const QuadraticSurd& s) {
  return QuadraticSurd(Rational(1, 2)) * s * s - QuadraticSurd(m) * s + QuadraticSurd(m * p.s - p.q);
}

/// Intersections of q = s^2/2 with the line joining p to the reduced point
/// of v (or the line through p in v's direction when rk = 0).
inline WallEndpoints wall_endpoints(const PlanePoint& p, const NumChern& v, const VarietyParams& var) {
  if (v.rk.is_zero() && v.c1.is_zero() && v.ch2.is_zero())
    throw Error(ErrorCode::ZeroClass, "reduced character is zero");
  auto [n, d] = detail::slope_parts(p, v, var);
  if (d.is_zero()) throw Error(ErrorCode::VerticalLine, "line through p and the class is vertical");
  Rational m = n / d;
  Rational disc = m * m - Rational(2) * m * p.s + Rational(2) * p.q;
  if (disc.sign() < 0) throw Error(ErrorCode::NoRealIntersection, "line misses q = s^2/2");
  QuadraticSurd root = QuadraticSurd::sqrt_of(disc);
  return {m, QuadraticSurd(m) - root, QuadraticSurd(m) + root};
}

}  // namespace serreku
