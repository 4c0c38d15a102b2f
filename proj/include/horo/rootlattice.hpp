#pragma once

// Restricted root data of Hermitian type and the lattice conditions on
// lowest weights. Everything here is exact rational arithmetic.

#include "horo/exact.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace horo {

enum class RootKind { Compact, Noncompact };

struct Root {
  QVector coords;
  RootKind kind = RootKind::Compact;
  int multiplicity = 1;
  bool positive = false;  ///< member of Delta+ = Delta_k+ u Delta_n+
};

/// A weight in a*, in the same coordinates as the roots.
struct WeightVector {
  QVector coords;

  WeightVector() = default;
  explicit WeightVector(QVector c) : coords(std::move(c)) {}

  Eigen::Index size() const { return coords.size(); }
  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.coords == b.coords;
  }
  // hidden friends: free operators in horo would be tried (and trip Boost
  // traits) on every Eigen expression in this namespace
  friend WeightVector operator+(const WeightVector& a, const WeightVector& b) {
    return WeightVector(QVector(a.coords + b.coords));
  }
  friend WeightVector operator-(const WeightVector& a, const WeightVector& b) {
    return WeightVector(QVector(a.coords - b.coords));
  }
  friend WeightVector operator-(const WeightVector& a) { return WeightVector(QVector(-a.coords)); }
  friend WeightVector operator*(const Rational& s, const WeightVector& a) {
    return WeightVector(QVector(a.coords * s));
  }
};

std::string to_string(const WeightVector& w);

/// Rank-m restricted root system with compact/noncompact flags and multiplicities.
///
/// `simple` indexes a basis Pi of the positive system Delta_n+ u Delta_k-
/// (the one in which lowest weights are dominant). Exactly one simple root
/// is noncompact; `noncompact_simple()` returns its position in `simple`.
/// `sigma_plus` is present only in the equal-rank case, where Sigma = Delta.
struct RootDatum {
  std::string name;
  int rank = 0;
  QMatrix gram;
  std::vector<Root> roots;
  std::vector<std::size_t> simple;
  std::optional<std::vector<QVector>> sigma_plus;

  Rational inner(const QVector& u, const QVector& v) const { return form(gram, u, v); }
  Rational inner(const WeightVector& u, const WeightVector& v) const {
    return form(gram, u.coords, v.coords);
  }

  /// Position of alpha_m inside `simple`.
  std::size_t noncompact_simple() const;

  std::vector<std::size_t> positive_noncompact() const;  ///< Delta_n+
  std::vector<std::size_t> positive_compact() const;     ///< Delta_k+
  std::vector<std::size_t> negative_compact() const;     ///< Delta_k-
};

/// Throws ValidationError naming the first failed invariant.
void validate(const RootDatum& datum);

/// Reflection s_beta(v) = v - 2<v,beta>/<beta,beta> beta.
QVector reflect(const RootDatum& datum, const QVector& v, const QVector& beta);

/// alpha^vee = 2 alpha / <alpha, alpha>, so alpha(alpha^vee) = 2.
WeightVector coroot(const RootDatum& datum, std::size_t root_index);

/// Evaluation lambda(H) of a weight on an element of a, both in root coordinates.
Rational evaluate(const RootDatum& datum, const WeightVector& lambda, const WeightVector& h);

/// Membership in the minimal cone Omega = sum_{alpha in Delta_n+} R_{>0} alpha^vee
/// (closure when `closure` is true). Exact LP.
bool in_minimal_cone(const RootDatum& datum, const WeightVector& v, bool closure);

/// Columns are the coroots alpha^vee, alpha in Delta_n+.
QMatrix cone_generators(const RootDatum& datum);

/// omega_i with <omega_i, alpha_j>/<alpha_j, alpha_j> = delta_ij over the simple roots.
std::vector<WeightVector> fundamental_weights(const RootDatum& datum);

/// Coefficients k with lambda = sum_i k_i omega_i.
QVector omega_coordinates(const RootDatum& datum, const WeightVector& lambda);

/// rho = 1/2 sum m_alpha alpha over the positive system Delta_n+ u Delta_k-.
WeightVector rho(const RootDatum& datum);

/// rho(c) = 1/2 sum_{alpha in Sigma+} alpha. Throws UnsupportedError without Sigma+.
WeightVector rho_c(const RootDatum& datum);

/// Orbit of v under the group generated by compact-root reflections.
/// Throws Error if the orbit exceeds `max_size` (W_k not finite/computable).
std::vector<QVector> compact_weyl_orbit(const RootDatum& datum, const QVector& v,
                                        std::size_t max_size = 10000);

/// A long root of Delta_n+ (maximal <alpha, alpha>); ties broken by index.
std::size_t long_noncompact_root(const RootDatum& datum);

/// Tri-state flag: Lambda_sd is only decidable with Sigma+.
enum class Availability { No, Yes, Unavailable };

struct LatticeClass {
  bool integral = false;     ///< lambda in Lambda: <lambda,alpha>/<alpha,alpha> in Z
  bool lambda0 = false;      ///< Lambda_0
  bool nonneg = false;       ///< Lambda_{>=0}
  bool positive = false;     ///< Lambda_{>0}
  bool l1 = false;           ///< Lambda_1
  bool l2 = false;           ///< Lambda_2
  Availability sd = Availability::Unavailable;  ///< Lambda_sd
  bool lc = false;           ///< Lambda_c
};

/// <lambda, alpha> <= 0 for all alpha in Delta_k+ (cone condition, no integrality).
bool compact_antidominant(const RootDatum& datum, const WeightVector& lambda);

/// lambda(alpha^vee) >= 0 on every generator of Omega, i.e. lambda|_Omega >= 0.
bool nonnegative_on_cone(const RootDatum& datum, const WeightVector& lambda);

/// True iff <lambda, alpha>/<alpha, alpha> is an integer for every root.
bool in_weight_lattice(const RootDatum& datum, const WeightVector& lambda);

LatticeClass classify(const RootDatum& datum, const WeightVector& lambda);

/// d(lambda) = c * prod_{alpha in Sigma+} <lambda - rho(c), alpha>.
Rational formal_dimension(const RootDatum& datum, const WeightVector& lambda, const Rational& c);

/// All sum_i k_i omega_i with |k_i| <= bound, k in lexicographic order.
std::vector<WeightVector> enumerate_weights(const RootDatum& datum, int bound);

/// Integer coefficients of an enumerated weight (same order as `enumerate_weights`).
std::vector<std::vector<int>> enumerate_coefficients(int rank, int bound);

// Built-in data; the shipped fixture files describe the same systems.
RootDatum sl2_datum();
RootDatum rank_one_datum(int multiplicity);
RootDatum group_case_datum();
RootDatum su21_datum();

}  // namespace horo
