#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary precision rational numbers.
 *
 * Thin value type over GMP's mpq_class. Values are always canonical
 * (lowest terms, positive denominator). The wrapper exists so that the
 * rest of the library never sees GMP expression templates and so that
 * the textual form is fixed to "p/q" (or "n" when integral).
 */

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "serreku/error.hpp"

namespace serreku {

class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}                      // NOLINT(implicit)
  Rational(long v) : q_(v) {}                     // NOLINT(implicit)
  Rational(long long v) : q_(mpz_class(std::to_string(v))) {}  // NOLINT(implicit)
  Rational(const mpz_class& v) : q_(v) {}         // NOLINT(implicit)
  explicit Rational(const mpq_class& v) : q_(v) { q_.canonicalize(); }

  Rational(long long num, long long den) {
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
    q_ = mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    q_.canonicalize();
  }

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  /// Parses "p/q", "n", or a plain decimal such as "-0.125" (converted exactly).
  static Rational parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
    auto valid_int = [](std::string_view t) {
      std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
      if (i >= t.size()) return false;
      for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
      return true;
    };
    auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
    if (auto slash = s.find('/'); slash != std::string::npos) {
      std::string num = s.substr(0, slash), den = s.substr(slash + 1);
      if (!valid_int(num) || !valid_int(den))
        throw Error(ErrorCode::ParseError, "malformed rational '" + s + "'");
      return Rational(mpz_class(strip_plus(num), 10), mpz_class(strip_plus(den), 10));
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
      std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
      bool neg = !ip.empty() && ip[0] == '-';
      if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip = ip.substr(1);
      if (ip.empty()) ip = "0";
      if (!valid_int(ip) || (!fp.empty() && !valid_int(fp)) || fp.find_first_of("+-") != std::string::npos)
        throw Error(ErrorCode::ParseError, "malformed decimal '" + s + "'");
      mpz_class num(ip + fp, 10);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
      Rational r(num, den);
      return neg ? -r : r;
    }
    if (!valid_int(s)) throw Error(ErrorCode::ParseError, "malformed rational '" + s + "'");
    return Rational(mpz_class(strip_plus(s), 10));
  }

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }
  std::string str() const { return q_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational abs() const {
    mpq_class r;
    mpq_abs(r.get_mpq_t(), q_.get_mpq_t());
    return Rational(r);
  }
  Rational inverse() const {
    if (is_zero()) throw Error(ErrorCode::SingularMatrix, "inverse of zero");
    return Rational(mpq_class(1 / q_));
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::SingularMatrix, "division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  /// Largest integer <= this.
  mpz_class floor() const {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return f;
  }

  Rational pow(unsigned e) const {
    Rational r(1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

 private:
  mpq_class q_{0};
};

inline Rational operator""_q(const char* s, std::size_t n) { return Rational::parse({s, n}); }

}  // namespace serreku

template <>
struct std::hash<serreku::Rational> {
  std::size_t operator()(const serreku::Rational& r) const {
    return std::hash<std::string>{}(r.str());
  }
};
