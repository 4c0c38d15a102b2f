#pragma once

// The one-sheeted hyperboloid x1^2 + x2^2 - x3^2 = 1, its complexification,
// isotropic vectors (horospheres) and the real group SO_e(2,1).

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace horo {

using cplx = std::complex<double>;

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
using RVec3 = Vec3<double>;
using CVec3 = Vec3<cplx>;

/// <z,w> = z1 w1 + z2 w2 - z3 w3, bilinear (no conjugation).
template <typename DerivedA, typename DerivedB>
auto bilinear(const Eigen::MatrixBase<DerivedA>& z, const Eigen::MatrixBase<DerivedB>& w) {
  return z(0) * w(0) + z(1) * w(1) - z(2) * w(2);
}

/// Delta(z) = <z,z>.
template <typename Derived>
auto quadratic(const Eigen::MatrixBase<Derived>& z) {
  return bilinear(z, z);
}

inline RVec3 x0() { return RVec3(1.0, 0.0, 0.0); }
inline CVec3 zeta0() { return CVec3(1.0, cplx(0.0, -1.0), 0.0); }
inline CVec3 zeta0_bar() { return CVec3(1.0, cplx(0.0, 1.0), 0.0); }

/// (cosh s, i sinh s, 0): a curve through x0 into the tube over X.
inline CVec3 tube_point(double s) { return CVec3(std::cosh(s), cplx(0.0, std::sinh(s)), 0.0); }

struct Tolerances {
  double constraint = 1e-10;  ///< relative, on Delta = 1 / Delta = 0 / pairings
  double domain = 1e-12;      ///< margin on strict inequalities
  double boundary = 1e-8;     ///< |Delta(Re zeta) - 1| window for the boundary class
};

/// A point with Delta(v) = 1 (real point of X or point of X_C).
template <typename Scalar>
struct HyperboloidPoint {
  Vec3<Scalar> v;
};

/// Validates Delta(v) = 1 within tol.constraint * max(1, |v|^2); DomainError otherwise.
template <typename Scalar>
HyperboloidPoint<Scalar> make_hyperboloid_point(const Vec3<Scalar>& v, const Tolerances& tol = {});

/// x = (cosh t cos theta, cosh t sin theta, sinh t).
HyperboloidPoint<double> param_X(double t, double theta);

/// cosh t: density of the invariant measure in (t, theta).
inline double invariant_density(double t) { return std::cosh(t); }

/// Sign of the third component of Re v x Im v, or 0 when it vanishes.
/// Constant on each of the two sheets of the domains below and preserved by SO_e(2,1).
int orientation(const CVec3& v);

/// Delta(Re z) > 1 on the sheet with positive orientation. Requires Delta(z) = 1.
bool in_D_plus(const CVec3& z, const Tolerances& tol = {});

enum class HoroClass { Interior, Boundary, Other };

struct HoroPoint {
  CVec3 v;
  HoroClass cls = HoroClass::Other;
  int orientation = 0;

  bool interior() const { return cls == HoroClass::Interior; }
};

/// Classifies an isotropic nonzero vector. Interior: Delta(Re) = Delta(Im) > 1 (either sheet).
/// DomainError when not isotropic, zero, or when <Re, Im> != 0.
HoroPoint classify_horopoint(const CVec3& zeta, const Tolerances& tol = {});

std::string to_string(HoroClass c);

/// |<z, zeta> - 1| <= tol.
bool on_horosphere(const CVec3& z, const HoroPoint& zeta, double tol = 1e-10);

/// <z, zeta>^(-lambda), lambda >= 1. DomainError on zero pairing.
cplx a_H_power(const CVec3& z, const HoroPoint& zeta, int lambda);

/// z^n for integer n >= 0 by repeated squaring.
inline cplx ipow(cplx z, int n) {
  cplx r(1.0, 0.0);
  while (n > 0) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

/// Real 3x3 matrix with g^T J g = J, J = diag(1,1,-1).
struct GroupElement {
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  std::string word;  ///< human-readable composition, e.g. "R(0.3) B1(-1.2)"

  GroupElement inverse() const;
  GroupElement operator*(const GroupElement& o) const;
  /// max |g^T J g - J|.
  double form_defect() const;
};

GroupElement rotation(double theta);
/// axis in {1, 2}; mixes coordinate `axis` with x3.
GroupElement boost(int axis, double s);

template <typename Scalar>
Vec3<Scalar> act(const GroupElement& g, const Vec3<Scalar>& v) {
  return g.m.cast<Scalar>() * v;
}

/// Word of length 1..max_len in {rotation, boost(1), boost(2)}, parameters uniform in [-range, range].
GroupElement random_word(std::mt19937_64& rng, int max_len = 4, double range = 2.0);

/// g * (s zeta0) with s uniform in [s_lo, s_hi]; orientation -1. sign > 0 uses zeta0_bar (orientation +1).
CVec3 random_horopoint(std::mt19937_64& rng, int sign, double s_lo = 1.5, double s_hi = 3.0);

}  // namespace horo
