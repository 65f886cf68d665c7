#pragma once

/**
 * @file exactalg.hpp
 * @brief Exact arithmetic substrate: Gaussian rationals, 2x2 rational
 *        matrices and single-radicand quadratic surds.
 *
 * Nothing in here touches floating point except the explicit
 * to_double() helpers used for display and SVG output.
 */

#include <array>
#include <cmath>
#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "serreku/error.hpp"
#include "serreku/rational.hpp"

namespace serreku {

// ---------------------------------------------------------------------------
// GaussRational

struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  GaussRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussRational operator-() const { return {-re, -im}; }
  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    Rational n = b.norm();
    if (n.is_zero()) throw Error(ErrorCode::SingularMatrix, "complex division by zero");
    GaussRational p = a * b.conj();
    return {p.re / n, p.im / n};
  }
  friend bool operator==(const GaussRational&, const GaussRational&) = default;
};

// ---------------------------------------------------------------------------
// Mat2

/// Row-major 2x2 rational matrix; at(i, j) is row i, column j.
class Mat2 {
 public:
  Mat2() : e_{Rational(0), Rational(0), Rational(0), Rational(0)} {}
  Mat2(Rational a, Rational b, Rational c, Rational d)
      : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 from_columns(const std::pair<Rational, Rational>& c0,
                           const std::pair<Rational, Rational>& c1) {
    return {c0.first, c1.first, c0.second, c1.second};
  }
  /// Real 2x2 form of multiplication by a complex number.
  static Mat2 complex_mult(const GaussRational& z) { return {z.re, -z.im, z.im, z.re}; }

  const Rational& at(int i, int j) const { return e_[2 * i + j]; }
  Rational& at(int i, int j) { return e_[2 * i + j]; }

  std::pair<Rational, Rational> column(int j) const { return {at(0, j), at(1, j)}; }

  Rational det() const { return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0); }

  Mat2 inverse() const {
    Rational d = det();
    if (d.is_zero()) throw Error(ErrorCode::SingularMatrix, "matrix has zero determinant");
    return {at(1, 1) / d, -at(0, 1) / d, -at(1, 0) / d, at(0, 0) / d};
  }

  Mat2 transpose() const { return {at(0, 0), at(1, 0), at(0, 1), at(1, 1)}; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.at(i, j) = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
    return r;
  }
  friend Mat2 operator*(const Rational& s, const Mat2& m) {
    return {s * m.at(0, 0), s * m.at(0, 1), s * m.at(1, 0), s * m.at(1, 1)};
  }
  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.at(0, 0) + b.at(0, 0), a.at(0, 1) + b.at(0, 1), a.at(1, 0) + b.at(1, 0),
            a.at(1, 1) + b.at(1, 1)};
  }
  friend std::pair<Rational, Rational> operator*(const Mat2& m, const std::pair<Rational, Rational>& v) {
    return {m.at(0, 0) * v.first + m.at(0, 1) * v.second,
            m.at(1, 0) * v.first + m.at(1, 1) * v.second};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m.at(0, 0) << ", " << m.at(0, 1) << "], [" << m.at(1, 0) << ", "
              << m.at(1, 1) << "]]";
  }

 private:
  std::array<Rational, 4> e_;
};

inline Rational det2(const Mat2& m) { return m.det(); }

/// Cramer's rule. Throws SingularMatrix when det(m) == 0.
inline std::pair<Rational, Rational> solve2x2(const Mat2& m, const std::pair<Rational, Rational>& rhs) {
  Rational d = m.det();
  if (d.is_zero()) throw Error(ErrorCode::SingularMatrix, "solve2x2 on singular matrix");
  return {(rhs.first * m.at(1, 1) - m.at(0, 1) * rhs.second) / d,
          (m.at(0, 0) * rhs.second - rhs.first * m.at(1, 0)) / d};
}

// ---------------------------------------------------------------------------
// QuadraticSurd

namespace detail {

/// Splits n >= 0 into f^2 * core. Trial division runs until p^3 exceeds the
/// unfactored remainder (or 2^20), after which the remainder is either
/// square-free or a perfect square, which is checked directly. Complete
/// for every n < 2^60.
inline std::pair<mpz_class, mpz_class> square_free_split(const mpz_class& n) {
  if (n == 0) return {0, 0};
  mpz_class rest = n, f = 1, core = 1;
  for (unsigned long p = 2; p <= (1ul << 20); p += (p == 2 ? 1 : 2)) {
    mpz_class pc = p;
    if (pc * pc * pc > rest) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) f *= p;
    if (e % 2) core *= p;
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      f *= r;
    } else {
      core *= rest;
    }
  }
  return {f, core};
}

}  // namespace detail

/// a + b*sqrt(D) with D square-free. Rational values are stored with b = 0
/// and D = 0.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational a) : a_(std::move(a)) {}  // NOLINT(implicit)

  QuadraticSurd(Rational a, Rational b, const mpz_class& radicand) : a_(std::move(a)) {
    if (radicand < 0) throw Error(ErrorCode::NoRealIntersection, "negative radicand");
    auto [f, core] = detail::square_free_split(radicand);
    if (b.is_zero() || core == 0) return;
    if (core == 1) {
      a_ += b * Rational(f);
      return;
    }
    b_ = b * Rational(f);
    d_ = core;
  }

  /// sqrt(r) for a non-negative rational r.
  static QuadraticSurd sqrt_of(const Rational& r) {
    if (r.sign() < 0) throw Error(ErrorCode::NoRealIntersection, "square root of negative rational");
    // sqrt(p/q) = sqrt(p*q)/q
    mpz_class pq = r.num() * r.den();
    return QuadraticSurd(0, Rational(mpz_class(1), r.den()), pq);
  }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coeff() const { return b_; }
  const mpz_class& radicand() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }

  double to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(d_.get_d());
  }

  std::string str() const {
    if (is_rational()) return a_.str();
    std::string s = a_.is_zero() ? "" : a_.str();
    Rational b = b_;
    if (!s.empty()) {
      s += b.sign() < 0 ? "-" : "+";
      b = b.abs();
    }
    if (b == Rational(1)) {
    } else if (b == Rational(-1)) {
      s += "-";
    } else {
      s += b.str() + "*";
    }
    return s + "sqrt(" + d_.get_str() + ")";
  }

  QuadraticSurd operator-() const { return make(-a_, -b_, d_); }

  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
    return make(x.a_ + y.a_, x.b_ + y.b_, common(x, y));
  }
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) { return x + (-y); }
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
    mpz_class d = common(x, y);
    return make(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d);
  }

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

  /// Sign of the real value, decided exactly.
  int sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 against b^2 D
    Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }

 private:
  static QuadraticSurd make(Rational a, Rational b, mpz_class d) {
    QuadraticSurd s;
    s.a_ = std::move(a);
    if (!b.is_zero()) {
      s.b_ = std::move(b);
      s.d_ = std::move(d);
    }
    return s;
  }
  static mpz_class common(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.is_rational()) return y.d_;
    if (y.is_rational()) return x.d_;
    if (x.d_ != y.d_)
      throw Error(ErrorCode::IncompatibleRadicands,
                  "sqrt(" + x.d_.get_str() + ") vs sqrt(" + y.d_.get_str() + ")");
    return x.d_;
  }

  Rational a_{0};
  Rational b_{0};
  mpz_class d_{0};
};

/// Exact total order on surds sharing a radicand (or where one side is rational).
inline std::strong_ordering surd_cmp(const QuadraticSurd& x, const QuadraticSurd& y) {
  int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace serreku
