#include "horo/geometry.hpp"

#include "horo/errors.hpp"

#include <cmath>
#include <sstream>

namespace horo {

namespace {

double scale2(const CVec3& v) { return std::max(1.0, v.squaredNorm()); }
double scale2(const RVec3& v) { return std::max(1.0, v.squaredNorm()); }

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(4);
  s << x;
  return s.str();
}

}  // namespace

template <typename Scalar>
HyperboloidPoint<Scalar> make_hyperboloid_point(const Vec3<Scalar>& v, const Tolerances& tol) {
  if (!v.allFinite()) throw DomainError("point has non-finite coordinates");
  const double defect = std::abs(quadratic(v) - Scalar(1));
  if (defect > tol.constraint * scale2(v))
    throw DomainError("point is off the hyperboloid: |Delta(z) - 1| = " + fmt(defect));
  return {v};
}

template HyperboloidPoint<double> make_hyperboloid_point(const RVec3&, const Tolerances&);
template HyperboloidPoint<cplx> make_hyperboloid_point(const CVec3&, const Tolerances&);

HyperboloidPoint<double> param_X(double t, double theta) {
  const double ch = std::cosh(t);
  return {RVec3(ch * std::cos(theta), ch * std::sin(theta), std::sinh(t))};
}

int orientation(const CVec3& v) {
  const RVec3 re = v.real(), im = v.imag();
  const double c = re(0) * im(1) - re(1) * im(0);
  return (c > 0) - (c < 0);
}

bool in_D_plus(const CVec3& z, const Tolerances& tol) {
  make_hyperboloid_point(z, tol);
  const RVec3 re = z.real();
  return quadratic(re) > 1.0 + tol.domain && orientation(z) > 0;
}

HoroPoint classify_horopoint(const CVec3& zeta, const Tolerances& tol) {
  if (!zeta.allFinite()) throw DomainError("horopoint has non-finite coordinates");
  if (zeta.norm() == 0.0) throw DomainError("horopoint must be nonzero");
  const double s2 = zeta.squaredNorm();
  const double iso = std::abs(quadratic(zeta));
  if (iso > tol.constraint * s2) throw DomainError("vector is not isotropic: |Delta(zeta)| = " + fmt(iso));
  const RVec3 re = zeta.real(), im = zeta.imag();
  if (std::abs(bilinear(re, im)) > tol.constraint * s2)
    throw DomainError("<Re zeta, Im zeta> != 0");

  HoroPoint h{zeta, HoroClass::Other, orientation(zeta)};
  const double dre = quadratic(re);
  if (std::abs(dre - 1.0) <= tol.boundary)
    h.cls = HoroClass::Boundary;
  else if (dre > 1.0 + tol.domain)
    h.cls = HoroClass::Interior;
  return h;
}

std::string to_string(HoroClass c) {
  switch (c) {
    case HoroClass::Interior: return "interior";
    case HoroClass::Boundary: return "boundary";
    case HoroClass::Other: return "other";
  }
  return "?";
}

bool on_horosphere(const CVec3& z, const HoroPoint& zeta, double tol) {
  return std::abs(bilinear(z, zeta.v) - 1.0) <= tol;
}

cplx a_H_power(const CVec3& z, const HoroPoint& zeta, int lambda) {
  if (lambda < 1) throw DomainError("lambda must be a positive integer");
  const cplx p = bilinear(z, zeta.v);
  if (p == 0.0) throw DomainError("zero pairing <z, zeta>");
  return 1.0 / ipow(p, lambda);
}

GroupElement GroupElement::inverse() const {
  const Eigen::Vector3d j(1, 1, -1);
  GroupElement g;
  g.m = j.asDiagonal() * m.transpose() * j.asDiagonal();
  g.word = "(" + word + ")^-1";
  return g;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  GroupElement g;
  g.m = m * o.m;
  g.word = word.empty() ? o.word : (o.word.empty() ? word : word + " " + o.word);
  return g;
}

double GroupElement::form_defect() const {
  const Eigen::Matrix3d j = Eigen::Vector3d(1, 1, -1).asDiagonal();
  return (m.transpose() * j * m - j).cwiseAbs().maxCoeff();
}

GroupElement rotation(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  GroupElement g;
  g.m << c, s, 0, -s, c, 0, 0, 0, 1;
  g.word = "R(" + fmt(theta) + ")";
  return g;
}

GroupElement boost(int axis, double s) {
  if (axis != 1 && axis != 2) throw DomainError("boost axis must be 1 or 2");
  const double ch = std::cosh(s), sh = std::sinh(s);
  const int a = axis - 1;
  GroupElement g;
  g.m(a, a) = ch;
  g.m(a, 2) = sh;
  g.m(2, a) = sh;
  g.m(2, 2) = ch;
  g.word = "B" + std::to_string(axis) + "(" + fmt(s) + ")";
  return g;
}

GroupElement random_word(std::mt19937_64& rng, int max_len, double range) {
  std::uniform_int_distribution<int> len(1, max_len), kind(0, 2);
  std::uniform_real_distribution<double> par(-range, range);
  GroupElement g;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    const int k = kind(rng);
    const double p = par(rng);
    g = g * (k == 0 ? rotation(p) : boost(k, p));
  }
  return g;
}

CVec3 random_horopoint(std::mt19937_64& rng, int sign, double s_lo, double s_hi) {
  std::uniform_real_distribution<double> sd(s_lo, s_hi);
  const double s = sd(rng);
  const GroupElement g = random_word(rng);
  return act(g, CVec3(s * (sign > 0 ? zeta0_bar() : zeta0())));
}

}  // namespace horo
