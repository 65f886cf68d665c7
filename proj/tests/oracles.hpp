#pragma once

// Independent reference computations for the test suites. These use raw
// mpq_class and spelled-out formulas, never the library's own helpers, so a
// shared bug cannot hide on both sides.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "serreku/numchern.hpp"
#include "serreku/rational.hpp"

namespace oracle {

using Q = mpq_class;
using Ch = std::array<Q, 4>;  // coefficients of 1, H, H^2, H^3

inline Q q(long n, long d = 1) {
  Q r(n, d);
  r.canonicalize();
  return r;
}

inline Ch ch(const serreku::NumChern& v) {
  if (!v.ch3) throw std::logic_error("oracle needs ch3");
  return {v.rk.raw(), v.c1.raw(), v.ch2.raw(), v.ch3->raw()};
}

inline const Ch& gm_todd() {
  static const Ch td{q(1), q(1, 2), q(17, 60), q(1, 10)};
  return td;
}

// HRR written out term by term: chi(v, w) = d * [H^3] ( v^dual * w * td ).
// [H^3] of a product of three series is sum over i+j+k = 3; v^dual flips the
// sign of odd-degree parts.
inline Q hrr_chi(const Ch& v, const Ch& w, const Ch& td = gm_todd(), long d = 10) {
  Q total = 0;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j) {
      int k = 3 - i - j;
      Q term = v[i] * w[j] * td[k];
      total += (i % 2 == 0) ? term : Q(-term);
    }
  return total * d;
}

// ch(v) * e^{tH}, expanded by hand.
inline Ch exp_twist(const Ch& v, const Q& t) {
  return {v[0], v[1] + t * v[0], v[2] + t * v[1] + t * t * v[0] / 2,
          v[3] + t * v[2] + t * t * v[1] / 2 + t * t * t * v[0] / 6};
}

// Gaussian elimination with partial (first nonzero) pivoting on an n x n
// rational system. Throws on singular input.
inline std::vector<Q> gauss_solve(std::vector<std::vector<Q>> a, std::vector<Q> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("singular system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Q f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Q> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// The linear system for M^{-1} = [[x1, x2], [x3, x4]] relating the charges on
// d1, d2 at (eps, alpha^2) and on c1, c2 at (-eps', alpha'^2), with the
// coefficients exactly as printed (no factor H^3).
struct FourEquationSystem {
  Q eps, a2, epsp, a2p;

  std::vector<std::vector<Q>> matrix() const {
    Q c11 = 1 - 3 * epsp;
    Q c12 = q(1, 5) + epsp - q(3, 2) * epsp * epsp + q(3, 2) * a2p;
    Q c21 = 1 - 4 * epsp;
    Q c22 = q(2, 5) + epsp - 2 * epsp * epsp + 2 * a2p;
    return {{c11, c12, 0, 0}, {0, 0, c11, c12}, {c21, c22, 0, 0}, {0, 0, c21, c22}};
  }
  std::vector<Q> rhs() const {
    return {1 - eps, q(1, 5) - eps + eps * eps / 2 - a2 / 2, Q(1), q(2, 5) - eps};
  }
  std::vector<Q> solve() const { return gauss_solve(matrix(), rhs()); }
};

// Li's lower bound by scanning all integer tangents in a generous range.
inline Q li_bound_scan(const Q& s, long d = 10) {
  Q best = s * s / 2 - Q(3) / (4 * d);
  for (long k = -50; k <= 50; ++k) {
    Q t = Q(k) * s - Q(k * k) / 2;
    if (t > best) best = t;
  }
  return best;
}

// Region membership written straight from the segment data.
inline bool gm_region(int r, const Q& s, const Q& qq) {
  if (!(qq > li_bound_scan(s))) return false;
  switch (r) {
    case 1: return s > -1 && s < q(-1, 2) && qq < q(-9, 10) * s - q(2, 5);
    case 2: return s > q(-1, 2) && s < 0 && qq < -s / 10;
    case 3: return s > 0 && s < q(1, 2) && qq < s / 10;
  }
  return false;
}

// Deterministic rational sampler.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform-ish rational in [lo, hi] with denominator at most maxden.
  Q between(const Q& lo, const Q& hi, long maxden = 997) {
    std::uniform_int_distribution<long> dd(1, maxden);
    long den = dd(rng_);
    std::uniform_int_distribution<long> nn(0, den);
    Q t(nn(rng_), den);
    t.canonicalize();
    return lo + (hi - lo) * t;
  }
  // Strictly inside (lo, hi).
  Q open(const Q& lo, const Q& hi, long maxden = 997) {
    std::uniform_int_distribution<long> dd(2, maxden);
    long den = dd(rng_);
    std::uniform_int_distribution<long> nn(1, den - 1);
    Q t(nn(rng_), den);
    t.canonicalize();
    return lo + (hi - lo) * t;
  }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  // A point strictly inside the GM region r.
  std::pair<Q, Q> region_point(int r) {
    Q lo_s = r == 1 ? Q(-1) : r == 2 ? q(-1, 2) : Q(0);
    for (;;) {
      Q s = open(lo_s, lo_s + q(1, 2));
      Q lo = li_bound_scan(s);
      Q hi = r == 1 ? q(-9, 10) * s - q(2, 5) : r == 2 ? Q(-s / 10) : Q(s / 10);
      if (lo < hi) return {s, open(lo, hi)};
    }
  }

 private:
  std::mt19937_64 rng_;
};

inline serreku::Rational R(const Q& x) { return serreku::Rational(x); }

}  // namespace oracle
