#pragma once

// Horospherical Cauchy transform on the hyperboloid, its spectral components,
// the invariant operator L and inversion over the real fibers S_R(z).

#include "horo/geometry.hpp"

#include <Eigen/Core>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace horo {

struct QuadratureSpec {
  double t_max = 12.0;  ///< X is truncated to |t| <= t_max
  int n_t = 480;        ///< composite Gauss-Legendre nodes in t
  int n_theta = 256;    ///< periodic trapezoid nodes in theta
  double fiber_t_max = 14.0;
  int fiber_n = 600;

  /// DomainError on t_max <= 0, odd or < 32 node counts, etc.
  void validate() const;
  /// All node counts doubled, truncations unchanged.
  QuadratureSpec doubled() const;
};

/// f(x) = amplitude * <x, w>^(-lambda), a custom callable, or zero.
class TestFunction {
 public:
  enum class Kind { Zero, MatrixCoefficient, Custom };
  using Fn = std::function<cplx(const RVec3&)>;

  static TestFunction zero();
  /// w must be an interior horopoint, lambda >= 1.
  static TestFunction matrix_coefficient(const CVec3& w, int lambda, cplx amplitude = 1.0);
  static TestFunction custom(Fn f, std::string label);

  cplx operator()(const RVec3& x) const;
  /// Holomorphic extension to X_C; zero and matrix coefficients only.
  cplx extend(const CVec3& z) const;

  Kind kind() const { return kind_; }
  const CVec3& w() const { return w_; }
  int lambda() const { return lambda_; }
  cplx amplitude() const { return amp_; }
  const std::string& label() const { return label_; }

 private:
  Kind kind_ = Kind::Zero;
  CVec3 w_ = CVec3::Zero();
  int lambda_ = 0;
  cplx amp_ = 0.0;
  Fn fn_;
  std::string label_ = "zero";
};

/// (zeta, value) with the spectral tag when the value is a single component.
struct TransformSample {
  HoroPoint zeta;
  cplx value;
  std::optional<int> lambda;
};

/// Tensor grid on X: weights already include cosh t and the f values.
struct PreparedFunction {
  std::vector<double> x1, x2, x3;
  std::vector<double> fw_re, fw_im;
  bool zero = true;

  std::size_t size() const { return x1.size(); }
};

PreparedFunction prepare(const TestFunction& f, const QuadratureSpec& q);

/// Nodes and weights (cosh t included) of the 2-D rule on X.
void grid_on_X(const QuadratureSpec& q, std::vector<RVec3>& x, std::vector<double>& w);

/// 1 / (<zeta, x> - 1). zeta must be interior; SingularityError within 1e-9 of the pole.
cplx cauchy_kernel(const HoroPoint& zeta, const RVec3& x);

cplx cauchy_transform(const TestFunction& f, const HoroPoint& zeta, const QuadratureSpec& q);
cplx cauchy_transform(const PreparedFunction& f, const HoroPoint& zeta);

/// int_X f(x) <x, zeta>^(-lambda) dx.
cplx fourier_component(const TestFunction& f, const HoroPoint& zeta, int lambda,
                       const QuadratureSpec& q);
cplx fourier_component(const PreparedFunction& f, const HoroPoint& zeta, int lambda);

cplx integrate_over_X(const TestFunction::Fn& f, const QuadratureSpec& q);

using HoloFn = std::function<cplx(const CVec3&)>;

/// d/dtau phi((1 + tau) zeta) at 0, fourth-order central stencil with relative step h.
/// This is sum_j zeta_j d phi / d zeta_j along the cone (the radial direction is tangent to it).
cplx euler_derivative(const HoloFn& phi, const CVec3& zeta, double h);

struct LCalibration {
  int sign = 0;         ///< epsilon in L = epsilon * Euler - 1/2
  cplx euler_ratio;     ///< Euler(f^_2) / f^_2 at the calibration point
  double residual = 0;  ///< |L f^_2 / f^_2 - 3/2| after choosing the sign
};

/// Computed once (thread-safe) on the lambda = 2 fixture, frozen afterwards.
const LCalibration& L_calibration();

/// epsilon * Euler(phi)(zeta) - phi(zeta) / 2. zeta interior with (1 - 2h) zeta still interior.
cplx apply_L(const HoloFn& phi, const HoroPoint& zeta, double h = 1e-3);

/// zeta(t) on S_R(z), principal branch r = sqrt(z1^2 + z2^2). DomainError when |r| <= 1e-6.
CVec3 fiber_curve(const CVec3& z, double t);

struct InverseResult {
  cplx value;
  double tail_bound = 0;  ///< analytic tail estimate beyond +-fiber_t_max
  double decay_rate = 0;  ///< ln |phi(T-1) / phi(T)|, worst end
  double last_panel = 0;  ///< outermost-panel contribution / |value|
};

/// int phi(zeta_z(t)) dt over [-fiber_t_max, fiber_t_max].
/// DivergenceError when the integrand decays slower than e^(-1.5 |t|) or the
/// last panel carries more than 1e-3 of the total.
InverseResult inverse_transform(const HoloFn& phi, const CVec3& z, const QuadratureSpec& q);

struct InversionPoint {
  CVec3 z;
  cplx R;      ///< (L f^)^v (z)
  cplx f;      ///< <z, w>^(-lambda)
  cplx ratio;  ///< R / f
  double tail_bound = 0;
};

struct InversionReport {
  int lambda = 0;
  CVec3 w;
  std::vector<InversionPoint> points;
  cplx mean;
  double cv = 0;  ///< sample stdev |c - mean| / |mean|
};

/// f = <x, w>^(-lambda) with w interior on the negative sheet, lambda in the
/// convergence range (lambda >= 2), every z in D+. Measures c(z) = (L f^)^v (z) / f(z).
InversionReport inversion_pipeline(const TestFunction& f, const std::vector<CVec3>& z_list,
                                   const QuadratureSpec& q, double h = 1e-3);

/// M(l-1, m-1) = int_X <x,zeta1>^(-l) <x,zeta2>^(-m) dx, 1 <= l, m <= lambda_max.
Eigen::MatrixXcd schur_matrix(int lambda_max, const HoroPoint& zeta1, const HoroPoint& zeta2,
                              const QuadratureSpec& q);

}  // namespace horo
