#pragma once

/**
 * @file orbit.hpp
 * @brief GL+(2,R) orbit relations between central charges and the numerical
 *        certificate that the induced condition on Ku(X)_3 is Serre-invariant.
 *
 * A charge on a rank-two lattice is a 2x2 matrix Z (columns = charges of the
 * basis vectors as (Re, Im)). Given a lattice map phi, written in basis
 * coordinates from A's basis to B's basis, the charges are related when
 *   M Z_A = Z_B phi,
 * i.e. M = Z_B phi Z_A^{-1}. Only the matrix part of an element of the
 * universal cover is computed.
 */

#include <string>
#include <utility>
#include <vector>

#include "serreku/charge.hpp"
#include "serreku/error.hpp"
#include "serreku/exactalg.hpp"
#include "serreku/kulattice.hpp"
#include "serreku/tiltplane.hpp"
#include "serreku/variety.hpp"

namespace serreku {

class GLPlusTransform {
 public:
  explicit GLPlusTransform(Mat2 m) : m_(std::move(m)), det_(m_.det()) {
    if (det_.sign() <= 0)
      throw Error(ErrorCode::NotOrientationPreserving, "determinant " + det_.str() + " is not positive");
  }
  static GLPlusTransform identity() { return GLPlusTransform(Mat2::identity()); }

  const Mat2& m() const { return m_; }
  const Rational& det() const { return det_; }

  friend GLPlusTransform operator*(const GLPlusTransform& a, const GLPlusTransform& b) {
    return GLPlusTransform(a.m_ * b.m_);
  }
  friend bool operator==(const GLPlusTransform& a, const GLPlusTransform& b) { return a.m_ == b.m_; }

 private:
  Mat2 m_;
  Rational det_;
};

/// M = zB phi zA^{-1}.
inline GLPlusTransform solve_gl(const ChargeMatrix& zA, const ChargeMatrix& zB, const Mat2& phi) {
  if (det2(zA.m).is_zero()) throw Error(ErrorCode::SingularCharge, "source charge matrix is singular");
  Mat2 m = zB.m * phi * zA.m.inverse();
  Rational d = m.det();
  if (d.sign() <= 0)
    throw Error(ErrorCode::NotOrientationPreserving, "det(M) = " + d.str() + " <= 0");
  return GLPlusTransform(m);
}

namespace detail {

inline void require_region(const StabilityParam& p, RegionId r, const VarietyParams& var,
                           const std::string& who) {
  RegionStatus st = region_check(p.point, r, var);
  if (st != RegionStatus::Inside)
    throw Error(ErrorCode::OutsideRegion, who + " (" + p.point.s.str() + ", " + p.point.q.str() +
                                              ") region " + std::to_string(static_cast<int>(r)) +
                                              ": " + describe(st));
  if (p.mu && !mu_window(p.point, r, var).contains(*p.mu))
    throw Error(ErrorCode::OutsideRegion, who + ": mu = " + p.mu->str() + " outside the admissible window");
}

inline ChargeMatrix charge_on(const StabilityParam& p, RegionId r, const VarietyParams& var) {
  auto tag = r == RegionId::Ku1 ? BasisTag::B : r == RegionId::Ku2 ? BasisTag::C : BasisTag::D;
  return charge_matrix(ChargeSpec::sq(p.point, p.mu), lattice_basis(r, var), var, tag);
}

}  // namespace detail

/// Two parameters of the same region induce conditions in one GL+ orbit.
inline GLPlusTransform same_orbit_check(const StabilityParam& pA, const StabilityParam& pB, RegionId r,
                                        const VarietyParams& var) {
  detail::require_region(pA, r, var, "pA");
  detail::require_region(pB, r, var, "pB");
  return solve_gl(detail::charge_on(pA, r, var), detail::charge_on(pB, r, var), Mat2::identity());
}

struct CertificateStep {
  std::string description;
  GLPlusTransform transform;
};

struct SerreCertificate {
  std::vector<CertificateStep> steps;
  GLPlusTransform composite = GLPlusTransform::identity();
  bool lattice_fixed = false;
  std::string note =
      "matrix part only: the cover datum and the heart-level equality are not certified";

  bool passes() const { return lattice_fixed && composite == GLPlusTransform::identity(); }
};

/// The twist partner of p1 in region 3: (s1 + 1, 1/2 + s1 + q1).
inline StabilityParam twist_partner(const StabilityParam& p1) {
  return {{p1.point.s + 1, Rational(1, 2) + p1.point.s + p1.point.q}, std::nullopt};
}

/// Follows S^{-1} = (- (x) O(H)) o L_U o L_O [-3] on Ku(X)_3 through the
/// three regions and closes the loop at p3. Each step is solve_gl through
/// the lattice map in basis coordinates; a failing step is named in the error.
inline SerreCertificate serre_certificate(const StabilityParam& p3, const StabilityParam& p2,
                                          const StabilityParam& p1, const VarietyParams& var) {
  if (!var.is_gm()) throw Error(ErrorCode::UnsupportedGenus, "serre_certificate is for genus 6");
  detail::require_region(p3, RegionId::Ku3, var, "step 1 (L_O): p3");
  detail::require_region(p2, RegionId::Ku2, var, "step 1 (L_O): p2");
  detail::require_region(p1, RegionId::Ku1, var, "step 2 (L_U): p1");
  StabilityParam p1t = twist_partner(p1);
  detail::require_region(p1t, RegionId::Ku3, var, "step 3 (twist): (s1+1, q1')");

  auto bb = lattice_basis(RegionId::Ku1, var);
  auto cb = lattice_basis(RegionId::Ku2, var);
  auto db = lattice_basis(RegionId::Ku3, var);
  Mat2 phi_lo = lattice_map_matrix([&](const NumChern& v) { return mutate_O(v, var); }, db, cb);
  Mat2 phi_lu = lattice_map_matrix([&](const NumChern& v) { return mutate_U(v, var); }, cb, bb);
  Mat2 phi_tw = lattice_map_matrix([](const NumChern& v) { return twist(v, 1); }, bb, db);
  Mat2 phi_sh = lattice_map_matrix([](const NumChern& v) { return shift(v, -3); }, db, db);

  ChargeMatrix z3 = detail::charge_on(p3, RegionId::Ku3, var);
  ChargeMatrix z2 = detail::charge_on(p2, RegionId::Ku2, var);
  ChargeMatrix z1 = detail::charge_on(p1, RegionId::Ku1, var);
  ChargeMatrix z1t = detail::charge_on(p1t, RegionId::Ku3, var);

  SerreCertificate cert;
  auto add = [&](const std::string& what, const ChargeMatrix& a, const ChargeMatrix& b, const Mat2& phi) {
    try {
      cert.steps.push_back({what, solve_gl(a, b, phi)});
    } catch (const Error& e) {
      throw Error(e.code(), what + ": " + e.what());
    }
  };
  add("step 1: L_O, Z(p3) on d-basis -> Z(p2) on c-basis", z3, z2, phi_lo);
  add("step 2: L_U, Z(p2) on c-basis -> Z(p1) on b-basis", z2, z1, phi_lu);
  add("step 3: (x) O(H), Z(p1) on b-basis -> Z(s1+1, q1') on d-basis", z1, z1t, phi_tw);
  add("step 4: shift [-3] on d-basis", z1t, z1t, phi_sh);
  try {
    cert.steps.push_back({"step 5: closure, Z(s1+1, q1') -> Z(p3) in region 3",
                          same_orbit_check(p1t, p3, RegionId::Ku3, var)});
  } catch (const Error& e) {
    throw Error(e.code(), std::string("step 5 (closure): ") + e.what());
  }

  Mat2 comp = Mat2::identity();
  for (const auto& s : cert.steps) comp = s.transform.m() * comp;
  cert.composite = GLPlusTransform(comp);

  const auto& [d1, d2] = db;
  cert.lattice_fixed = serre_inverse_numeric(d1, var) == d1 && serre_inverse_numeric(d2, var) == d2;
  return cert;
}

}  // namespace serreku
