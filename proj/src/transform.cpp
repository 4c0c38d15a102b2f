#include "horo/transform.hpp"

#include "horo/errors.hpp"
#include "horo/quadrature.hpp"
#include "horo/rootlattice.hpp"

#include <cmath>
#include <limits>
#include <mutex>

namespace horo {

void QuadratureSpec::validate() const {
  auto bad = [](const std::string& what) { throw DomainError("quadrature: " + what); };
  if (!(t_max > 0) || !std::isfinite(t_max)) bad("t_max must be > 0");
  if (!(fiber_t_max > 1) || !std::isfinite(fiber_t_max)) bad("fiber_t_max must be > 1");
  if (n_t < 32 || n_t % 2) bad("n_t must be even and >= 32");
  if (n_theta < 32) bad("n_theta must be >= 32");
  if (fiber_n < 32 || fiber_n % 2) bad("fiber_n must be even and >= 32");
}

QuadratureSpec QuadratureSpec::doubled() const {
  QuadratureSpec q = *this;
  q.n_t *= 2;
  q.n_theta *= 2;
  q.fiber_n *= 2;
  return q;
}

TestFunction TestFunction::zero() { return TestFunction(); }

TestFunction TestFunction::matrix_coefficient(const CVec3& w, int lambda, cplx amplitude) {
  if (lambda < 1) throw DomainError("matrix coefficient needs lambda >= 1");
  if (!classify_horopoint(w).interior())
    throw DomainError("matrix coefficient needs w interior (Delta(Re w) > 1)");
  TestFunction f;
  f.kind_ = Kind::MatrixCoefficient;
  f.w_ = w;
  f.lambda_ = lambda;
  f.amp_ = amplitude;
  f.label_ = "matrix_coefficient";
  return f;
}

TestFunction TestFunction::custom(Fn fn, std::string label) {
  TestFunction f;
  f.kind_ = Kind::Custom;
  f.fn_ = std::move(fn);
  f.amp_ = 1.0;
  f.label_ = std::move(label);
  return f;
}

cplx TestFunction::operator()(const RVec3& x) const {
  switch (kind_) {
    case Kind::Zero: return 0.0;
    case Kind::MatrixCoefficient: return amp_ / ipow(bilinear(x, w_), lambda_);
    case Kind::Custom: return fn_(x);
  }
  return 0.0;
}

cplx TestFunction::extend(const CVec3& z) const {
  switch (kind_) {
    case Kind::Zero: return 0.0;
    case Kind::MatrixCoefficient: return amp_ / ipow(bilinear(z, w_), lambda_);
    case Kind::Custom: break;
  }
  throw UnsupportedError("custom test functions have no known holomorphic extension");
}

void grid_on_X(const QuadratureSpec& q, std::vector<RVec3>& x, std::vector<double>& w) {
  q.validate();
  const Rule rt = composite_gauss_legendre(-q.t_max, q.t_max, q.n_t);
  const Rule rth = periodic_trapezoid(q.n_theta);
  x.clear();
  w.clear();
  x.reserve(static_cast<std::size_t>(q.n_t) * q.n_theta);
  w.reserve(x.capacity());
  for (int i = 0; i < q.n_t; ++i) {
    const double wt = rt.w(i) * invariant_density(rt.x(i));
    for (int j = 0; j < q.n_theta; ++j) {
      x.push_back(param_X(rt.x(i), rth.x(j)).v);
      w.push_back(wt * rth.w(j));
    }
  }
}

PreparedFunction prepare(const TestFunction& f, const QuadratureSpec& q) {
  std::vector<RVec3> x;
  std::vector<double> w;
  grid_on_X(q, x, w);
  PreparedFunction p;
  const std::size_t n = x.size();
  p.x1.resize(n);
  p.x2.resize(n);
  p.x3.resize(n);
  p.fw_re.resize(n);
  p.fw_im.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx v = f(x[k]) * w[k];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw DomainError("non-finite integrand value f(x)");
    p.x1[k] = x[k](0);
    p.x2[k] = x[k](1);
    p.x3[k] = x[k](2);
    p.fw_re[k] = v.real();
    p.fw_im[k] = v.imag();
    if (v != 0.0) p.zero = false;
  }
  return p;
}

namespace {

constexpr double kPoleDistance = 1e-9;

void require_interior(const HoroPoint& zeta, const char* who) {
  if (!zeta.interior())
    throw DomainError(std::string(who) + ": zeta must be interior (Delta(Re zeta) > 1), got " +
                      to_string(zeta.cls));
}

// sum_k fw_k / (<zeta, x_k> - 1), no domain checks.
cplx kernel_sum(const PreparedFunction& f, const CVec3& zeta) {
  const double a1 = zeta(0).real(), b1 = zeta(0).imag();
  const double a2 = zeta(1).real(), b2 = zeta(1).imag();
  const double a3 = zeta(2).real(), b3 = zeta(2).imag();
  const std::size_t n = f.size();
  double sr = 0, si = 0, dmin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    const double pr = a1 * f.x1[k] + a2 * f.x2[k] - a3 * f.x3[k] - 1.0;
    const double pi = b1 * f.x1[k] + b2 * f.x2[k] - b3 * f.x3[k];
    const double den = pr * pr + pi * pi;
    dmin = std::min(dmin, den);
    const double fr = f.fw_re[k], fi = f.fw_im[k];
    sr += (fr * pr + fi * pi) / den;
    si += (fi * pr - fr * pi) / den;
  }
  if (dmin <= kPoleDistance * kPoleDistance)
    throw SingularityError("Cauchy kernel evaluated within 1e-9 of its pole <zeta, x> = 1");
  return {sr, si};
}

}  // namespace

cplx cauchy_kernel(const HoroPoint& zeta, const RVec3& x) {
  require_interior(zeta, "cauchy_kernel");
  const cplx d = bilinear(zeta.v, x) - 1.0;
  if (std::abs(d) <= kPoleDistance)
    throw SingularityError("Cauchy kernel evaluated within 1e-9 of its pole <zeta, x> = 1");
  return 1.0 / d;
}

cplx cauchy_transform(const PreparedFunction& f, const HoroPoint& zeta) {
  require_interior(zeta, "cauchy_transform");
  if (f.zero) return 0.0;
  const cplx v = kernel_sum(f, zeta.v);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw DomainError("cauchy_transform: non-finite result");
  return v;
}

cplx cauchy_transform(const TestFunction& f, const HoroPoint& zeta, const QuadratureSpec& q) {
  require_interior(zeta, "cauchy_transform");
  return cauchy_transform(prepare(f, q), zeta);
}

cplx fourier_component(const PreparedFunction& f, const HoroPoint& zeta, int lambda) {
  require_interior(zeta, "fourier_component");
  if (lambda < 1) throw DomainError("fourier_component: lambda must be >= 1");
  if (f.zero) return 0.0;
  cplx s = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const cplx p = zeta.v(0) * f.x1[k] + zeta.v(1) * f.x2[k] - zeta.v(2) * f.x3[k];
    s += cplx(f.fw_re[k], f.fw_im[k]) / ipow(p, lambda);
  }
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw DomainError("fourier_component: non-finite result");
  return s;
}

cplx fourier_component(const TestFunction& f, const HoroPoint& zeta, int lambda,
                       const QuadratureSpec& q) {
  require_interior(zeta, "fourier_component");
  return fourier_component(prepare(f, q), zeta, lambda);
}

cplx integrate_over_X(const TestFunction::Fn& f, const QuadratureSpec& q) {
  std::vector<RVec3> x;
  std::vector<double> w;
  grid_on_X(q, x, w);
  cplx s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) s += f(x[k]) * w[k];
  return s;
}

cplx euler_derivative(const HoloFn& phi, const CVec3& zeta, double h) {
  if (!(h > 0) || h >= 0.25) throw DomainError("stencil step h must be in (0, 0.25)");
  const cplx p1 = phi(CVec3((1.0 + h) * zeta)), m1 = phi(CVec3((1.0 - h) * zeta));
  const cplx p2 = phi(CVec3((1.0 + 2 * h) * zeta)), m2 = phi(CVec3((1.0 - 2 * h) * zeta));
  const cplx d = (-p2 + 8.0 * p1 - 8.0 * m1 + m2) / (12.0 * h);
  if (!std::isfinite(d.real()) || !std::isfinite(d.imag()))
    throw DomainError("apply_L: non-finite stencil value");
  return d;
}

const LCalibration& L_calibration() {
  static LCalibration cal;
  static std::once_flag once;
  std::call_once(once, [] {
    // lambda = 2 fixture: w = 2 zeta0, zeta a boosted 2 zeta0_bar, default quadrature.
    const QuadratureSpec q;
    const PreparedFunction f = prepare(TestFunction::matrix_coefficient(2.0 * zeta0(), 2), q);
    const CVec3 zeta = act((rotation(0.4) * boost(1, 0.3)), CVec3(2.0 * zeta0_bar()));
    const HoloFn phi = [&](const CVec3& v) { return kernel_sum(f, v); };
    const cplx value = phi(zeta);
    cal.euler_ratio = euler_derivative(phi, zeta, 1e-3) / value;
    const double target = 1.5;
    const double rp = std::abs(cal.euler_ratio - 0.5 - target);
    const double rm = std::abs(-cal.euler_ratio - 0.5 - target);
    cal.sign = rp <= rm ? 1 : -1;
    cal.residual = std::min(rp, rm);
  });
  return cal;
}

cplx apply_L(const HoloFn& phi, const HoroPoint& zeta, double h) {
  require_interior(zeta, "apply_L");
  const RVec3 re = zeta.v.real();
  if ((1.0 - 2 * h) * (1.0 - 2 * h) * quadratic(re) <= 1.0 + Tolerances{}.domain)
    throw DomainError("apply_L: zeta too close to the boundary for step h");
  const int eps = L_calibration().sign;
  const cplx v = phi(zeta.v);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw DomainError("apply_L: non-finite stencil value");
  return double(eps) * euler_derivative(phi, zeta.v, h) - 0.5 * v;
}

CVec3 fiber_curve(const CVec3& z, double t) {
  const cplx r = std::sqrt(z(0) * z(0) + z(1) * z(1));
  if (std::abs(r) <= 1e-6) throw DomainError("fiber_curve: degenerate point, |z1^2 + z2^2| ~ 0");
  const cplx i(0.0, 1.0);
  const double ch = std::cosh(t), sh = std::sinh(t);
  return CVec3(z(0) - i * (z(1) / r) * ch - i * (z(0) * z(2) / r) * sh,
               z(1) + i * (z(0) / r) * ch - i * (z(1) * z(2) / r) * sh,
               z(2) - i * r * sh);
}

InverseResult inverse_transform(const HoloFn& phi, const CVec3& z, const QuadratureSpec& q) {
  q.validate();
  if (!in_D_plus(z)) throw DomainError("inverse_transform: z must lie in D+");
  const int order = panel_order(q.fiber_n);
  const Rule r = composite_gauss_legendre(-q.fiber_t_max, q.fiber_t_max, q.fiber_n, order);
  std::vector<cplx> terms(static_cast<std::size_t>(q.fiber_n));
  cplx total = 0.0;
  bool all_zero = true;
  for (int k = 0; k < q.fiber_n; ++k) {
    const cplx v = phi(fiber_curve(z, r.x(k)));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw DomainError("inverse_transform: non-finite integrand");
    if (v != 0.0) all_zero = false;
    terms[static_cast<std::size_t>(k)] = v * r.w(k);
    total += terms[static_cast<std::size_t>(k)];
  }
  InverseResult out;
  out.value = total;
  if (all_zero) {
    out.decay_rate = std::numeric_limits<double>::infinity();
    return out;
  }

  double lo = 0, hi = 0;
  for (int k = 0; k < order; ++k) {
    lo += std::abs(terms[static_cast<std::size_t>(k)]);
    hi += std::abs(terms[static_cast<std::size_t>(q.fiber_n - 1 - k)]);
  }
  out.last_panel = std::max(lo, hi) / std::abs(total);

  const double T = q.fiber_t_max;
  out.decay_rate = std::numeric_limits<double>::infinity();
  for (double sgn : {-1.0, 1.0}) {
    const double inner = std::abs(phi(fiber_curve(z, sgn * (T - 1.0))));
    const double outer = std::abs(phi(fiber_curve(z, sgn * T)));
    const double kappa = outer > 0 ? std::log(inner / outer) : std::numeric_limits<double>::infinity();
    out.decay_rate = std::min(out.decay_rate, kappa);
    if (kappa > 0 && std::isfinite(kappa)) out.tail_bound += outer / kappa;
  }
  if (out.last_panel > 1e-3)
    throw DivergenceError("inverse_transform: last panel carries " + std::to_string(out.last_panel) +
                          " of the total; the fiber integral does not decay");
  if (!(out.decay_rate > 1.5))
    throw DivergenceError("inverse_transform: integrand decays like exp(-" +
                          std::to_string(out.decay_rate) +
                          " |t|), outside the absolutely convergent range (rate > 1.5 required)");
  return out;
}

InversionReport inversion_pipeline(const TestFunction& f, const std::vector<CVec3>& z_list,
                                   const QuadratureSpec& q, double h) {
  q.validate();
  InversionReport rep;
  if (f.kind() == TestFunction::Kind::Custom)
    throw UnsupportedError("inversion needs a matrix coefficient or the zero function");
  if (f.kind() == TestFunction::Kind::MatrixCoefficient) {
    rep.lambda = f.lambda();
    rep.w = f.w();
    QVector k(1);
    k << Rational(f.lambda());
    if (!classify(sl2_datum(), WeightVector(k)).lc)
      throw DivergenceError("lambda = " + std::to_string(f.lambda()) +
                            " is outside Lambda_c ((lambda - rho)(alpha^vee) > 2 - m_alpha fails);"
                            " the fiber integral of L f^ is not absolutely convergent");
    if (orientation(f.w()) >= 0)
      throw DomainError("w must lie on the sheet of 2 zeta0 (orientation -1): the transform of"
                        " <x,w>^-lambda vanishes on the sheet that carries the fibers S_R(z)");
  }
  for (const auto& z : z_list) {
    if (!in_D_plus(z)) throw DomainError("inversion: z is not in D+");
    if (orientation(fiber_curve(z, 0.0)) <= 0)
      throw DomainError("inversion: the fiber through z leaves the positive sheet (branch of r)");
  }

  const PreparedFunction pf = prepare(f, q);
  const HoloFn fhat = [&](const CVec3& v) { return pf.zero ? cplx(0.0) : kernel_sum(pf, v); };
  const HoloFn Lfhat = [&](const CVec3& v) { return apply_L(fhat, classify_horopoint(v), h); };

  cplx sum = 0.0;
  for (const auto& z : z_list) {
    const InverseResult inv = inverse_transform(Lfhat, z, q);
    InversionPoint p{z, inv.value, f.extend(z), 0.0, inv.tail_bound};
    p.ratio = p.f != 0.0 ? p.R / p.f : cplx(std::nan(""), std::nan(""));
    sum += p.ratio;
    rep.points.push_back(p);
  }
  const double n = static_cast<double>(rep.points.size());
  rep.mean = n > 0 ? sum / n : cplx(std::nan(""), 0.0);
  double ss = 0;
  for (const auto& p : rep.points) ss += std::norm(p.ratio - rep.mean);
  rep.cv = n > 1 ? std::sqrt(ss / (n - 1)) / std::abs(rep.mean) : 0.0;
  return rep;
}

Eigen::MatrixXcd schur_matrix(int lambda_max, const HoroPoint& zeta1, const HoroPoint& zeta2,
                              const QuadratureSpec& q) {
  require_interior(zeta1, "schur_matrix");
  require_interior(zeta2, "schur_matrix");
  if (lambda_max < 1) throw DomainError("schur_matrix: lambda_max must be >= 1");
  std::vector<RVec3> x;
  std::vector<double> w;
  grid_on_X(q, x, w);
  const auto L = static_cast<Eigen::Index>(lambda_max);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(L, L);
  Eigen::VectorXcd a(L), b(L);
  for (std::size_t k = 0; k < x.size(); ++k) {
    const cplx i1 = 1.0 / bilinear(x[k], zeta1.v), i2 = 1.0 / bilinear(x[k], zeta2.v);
    a(0) = i1 * w[k];
    b(0) = i2;
    for (Eigen::Index l = 1; l < L; ++l) {
      a(l) = a(l - 1) * i1;
      b(l) = b(l - 1) * i2;
    }
    m.noalias() += a * b.transpose();
  }
  return m;
}

}  // namespace horo
