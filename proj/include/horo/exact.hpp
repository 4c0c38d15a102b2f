#pragma once

// Exact rational linear algebra: dense Eigen containers over an arbitrary
// precision rational scalar, Gaussian elimination and a small simplex solver.

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace horo {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

}  // namespace horo

// Only what dense storage, comparisons and +,-,* need. Boost's own Eigen
// adapter is avoided: it hijacks mixed real/complex products elsewhere.
namespace Eigen {
template <>
struct NumTraits<horo::Rational> : GenericNumTraits<horo::Rational> {
  using Real = horo::Rational;
  using NonInteger = horo::Rational;
  using Literal = horo::Rational;
  using Nested = horo::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 32,
    MulCost = 64
  };
  static inline int digits10() { return 0; }
  static inline horo::Rational epsilon() { return 0; }
  static inline horo::Rational dummy_precision() { return 0; }
};
}  // namespace Eigen

namespace horo {

using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Parses "p", "-p" or "p/q". Returns nullopt on malformed text or q == 0.
std::optional<Rational> parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Bilinear form u^T G v.
Rational form(const QMatrix& gram, const QVector& u, const QVector& v);

/// Solves A x = b exactly for square nonsingular A. nullopt when A is singular.
std::optional<QVector> solve_exact(const QMatrix& a, const QVector& b);

/// Rank by exact row reduction.
Eigen::Index rank_exact(QMatrix a);

/// Sylvester's criterion on leading principal minors, exact.
bool is_positive_definite(const QMatrix& a);

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;  ///< optimal objective, valid when status == Optimal
  QVector x;       ///< optimal point, valid when status == Optimal
};

/// maximize c^T x  subject to  A x = b, x >= 0.
/// Two-phase tableau simplex with Bland's rule; exact, terminates.
LpResult lp_maximize(const QMatrix& a, const QVector& b, const QVector& c);

/// Membership of v in the convex cone spanned by the columns of `generators`.
///
/// With `open == false` the closed cone {sum c_j g_j : c_j >= 0} is tested.
/// With `open == true` the cone with strictly positive coefficients is tested:
/// the LP maximizes a common lower bound t on all coefficients (capped at 1)
/// and v is a member iff the optimum is positive. The optimum is returned in
/// `certificate` as an exact rational lower bound on the coefficients.
struct ConeMembership {
  bool member = false;
  Rational certificate;  ///< max common lower bound t* (open test) or 0
  QVector coefficients;  ///< a witness combination when member
};

ConeMembership cone_membership(const QMatrix& generators, const QVector& v, bool open);

}  // namespace horo
