#pragma once

#include <Eigen/Core>

namespace horo {

/// Nodes and weights of a 1-D rule.
struct Rule {
  Eigen::VectorXd x;
  Eigen::VectorXd w;
};

/// n-point Gauss-Legendre on [-1, 1]: Golub-Welsch, then Newton polish on P_n.
Rule gauss_legendre(int n);

/// Largest of {16, 8, 4, 2} dividing n (1 if n is odd).
int panel_order(int n);

/// [a, b] split into n / order equal panels of `order`-point Gauss-Legendre.
Rule composite_gauss_legendre(double a, double b, int n, int order);

/// Same, with order = panel_order(n).
inline Rule composite_gauss_legendre(double a, double b, int n) {
  return composite_gauss_legendre(a, b, n, panel_order(n));
}

/// n equispaced nodes on [0, 2 pi), weights 2 pi / n.
Rule periodic_trapezoid(int n);

}  // namespace horo
