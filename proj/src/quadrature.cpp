#include "horo/quadrature.hpp"

#include "horo/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

namespace horo {

Rule gauss_legendre(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre order must be >= 1");
  Rule r;
  if (n == 1) {
    r.x = Eigen::VectorXd::Zero(1);
    r.w = Eigen::VectorXd::Constant(1, 2.0);
    return r;
  }
  // Jacobi matrix of the Legendre recurrence.
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    j(k, k - 1) = b;
    j(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
  r.x = es.eigenvalues();
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = r.x(i);
    double dp = 1.0;
    // two Newton steps on P_n; weights from P_n' afterwards
    for (int it = 0; it < 3; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      if (it < 2) x -= p1 / dp;
    }
    r.x(i) = x;
    r.w(i) = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

int panel_order(int n) {
  for (int p : {16, 8, 4, 2})
    if (n % p == 0) return p;
  return 1;
}

Rule composite_gauss_legendre(double a, double b, int n, int order) {
  if (n < 1 || order < 1 || n % order != 0)
    throw DomainError("composite rule needs n divisible by the panel order");
  const Rule base = gauss_legendre(order);
  const int panels = n / order;
  const double h = (b - a) / panels;
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (int i = 0; i < order; ++i) {
      r.x(p * order + i) = mid + 0.5 * h * base.x(i);
      r.w(p * order + i) = 0.5 * h * base.w(i);
    }
  }
  return r;
}

Rule periodic_trapezoid(int n) {
  if (n < 1) throw DomainError("trapezoid needs n >= 1");
  Rule r;
  const double h = 2.0 * std::numbers::pi / n;
  r.x = Eigen::VectorXd::LinSpaced(n, 0.0, h * (n - 1));
  r.w = Eigen::VectorXd::Constant(n, h);
  return r;
}

}  // namespace horo
