#pragma once

/**
 * @file numchern.hpp
 * @brief Numerical Chern characters on a Picard-rank-one threefold.
 *
 * A class is stored in coefficient form: ch = rk + c1 H + ch2 H^2 + ch3 H^3.
 * The degree H^3 = d only enters when integrating, so the same NumChern can
 * be printed in the "integrated" convention where the last slot is d * ch3.
 */

#include <optional>
#include <ostream>
#include <string>

#include "serreku/error.hpp"
#include "serreku/rational.hpp"

namespace serreku {

struct NumChern {
  Rational rk;
  Rational c1;
  Rational ch2;
  std::optional<Rational> ch3;

  NumChern() = default;
  NumChern(Rational r, Rational c, Rational h2, std::optional<Rational> h3 = std::nullopt)
      : rk(std::move(r)), c1(std::move(c)), ch2(std::move(h2)), ch3(std::move(h3)) {}

  bool has_ch3() const { return ch3.has_value(); }

  const Rational& require_ch3(const char* context) const {
    if (!ch3) throw Error(ErrorCode::MissingCh3, std::string(context) + ": class has no ch3");
    return *ch3;
  }

  /// Last slot in the integrated convention (d * ch3).
  std::optional<Rational> integrated_ch3(int degree) const {
    if (!ch3) return std::nullopt;
    return *ch3 * Rational(degree);
  }

  NumChern truncated() const { return {rk, c1, ch2, std::nullopt}; }

  friend NumChern operator+(const NumChern& a, const NumChern& b) {
    std::optional<Rational> h3;
    if (a.ch3 && b.ch3) h3 = *a.ch3 + *b.ch3;
    return {a.rk + b.rk, a.c1 + b.c1, a.ch2 + b.ch2, h3};
  }
  friend NumChern operator*(const Rational& s, const NumChern& v) {
    std::optional<Rational> h3;
    if (v.ch3) h3 = s * *v.ch3;
    return {s * v.rk, s * v.c1, s * v.ch2, h3};
  }
  NumChern operator-() const { return Rational(-1) * *this; }
  friend NumChern operator-(const NumChern& a, const NumChern& b) { return a + (-b); }

  friend bool operator==(const NumChern&, const NumChern&) = default;

  friend std::ostream& operator<<(std::ostream& os, const NumChern& v) {
    os << "(" << v.rk << ", " << v.c1 << ", " << v.ch2 << ", ";
    if (v.ch3) os << *v.ch3; else os << "unset";
    return os << ")";
  }
};

/// v * exp(t H) for a rational t. ch3 stays unset if it was unset.
inline NumChern exp_twist(const NumChern& v, const Rational& t) {
  Rational t2 = t * t, t3 = t2 * t;
  NumChern r;
  r.rk = v.rk;
  r.c1 = v.c1 + t * v.rk;
  r.ch2 = v.ch2 + t * v.c1 + t2 * v.rk / 2;
  if (v.ch3) r.ch3 = *v.ch3 + t * v.ch2 + t2 * v.c1 / 2 + t3 * v.rk / 6;
  return r;
}

/// ch(E(kH)).
inline NumChern twist(const NumChern& v, long k) { return exp_twist(v, Rational(k)); }

/// ch(E^vee).
inline NumChern dual(const NumChern& v) {
  std::optional<Rational> h3;
  if (v.ch3) h3 = -*v.ch3;
  return {v.rk, -v.c1, v.ch2, h3};
}

/// ch(E[n]) = (-1)^n ch(E).
inline NumChern shift(const NumChern& v, long n) { return (n % 2 == 0) ? v : -v; }

/// ch^beta(E) = exp(-beta H) ch(E).
inline NumChern twisted_char(const NumChern& v, const Rational& beta) { return exp_twist(v, -beta); }

/// ch(O(kH)) = exp(kH).
inline NumChern line_bundle(long k) { return twist(NumChern(1, 0, 0, Rational(0)), k); }

}  // namespace serreku
