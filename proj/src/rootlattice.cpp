#include "horo/rootlattice.hpp"

#include "horo/errors.hpp"

#include <algorithm>
#include <set>

namespace horo {

std::string to_string(const WeightVector& w) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += to_string(w.coords(i));
  }
  return out + ")";
}

std::size_t RootDatum::noncompact_simple() const {
  for (std::size_t i = 0; i < simple.size(); ++i)
    if (roots[simple[i]].kind == RootKind::Noncompact) return i;
  throw ValidationError("one-noncompact-simple", "no noncompact simple root");
}

std::vector<std::size_t> RootDatum::positive_noncompact() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i].kind == RootKind::Noncompact && roots[i].positive) out.push_back(i);
  return out;
}

std::vector<std::size_t> RootDatum::positive_compact() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i].kind == RootKind::Compact && roots[i].positive) out.push_back(i);
  return out;
}

std::vector<std::size_t> RootDatum::negative_compact() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i].kind == RootKind::Compact && !roots[i].positive) out.push_back(i);
  return out;
}

namespace {

std::optional<std::size_t> find_root(const RootDatum& d, const QVector& v) {
  for (std::size_t i = 0; i < d.roots.size(); ++i)
    if (d.roots[i].coords == v) return i;
  return std::nullopt;
}

// Roots of the positive system whose basis is Pi.
std::vector<std::size_t> pi_positive_system(const RootDatum& d) {
  std::vector<std::size_t> out = d.positive_noncompact();
  const auto neg = d.negative_compact();
  out.insert(out.end(), neg.begin(), neg.end());
  std::sort(out.begin(), out.end());
  return out;
}

QMatrix simple_matrix(const RootDatum& d) {
  QMatrix s(d.rank, d.rank);
  for (std::size_t j = 0; j < d.simple.size(); ++j)
    s.col(static_cast<Eigen::Index>(j)) = d.roots[d.simple[j]].coords;
  return s;
}

std::string root_label(const RootDatum& d, std::size_t i) {
  return "root #" + std::to_string(i) + " " + to_string(WeightVector(d.roots[i].coords));
}

}  // namespace

void validate(const RootDatum& d) {
  const auto m = static_cast<Eigen::Index>(d.rank);
  if (d.rank < 1) throw ValidationError("rank", "rank must be a positive integer");
  if (d.gram.rows() != m || d.gram.cols() != m)
    throw ValidationError("rank", "gram matrix must be " + std::to_string(d.rank) + "x" +
                                      std::to_string(d.rank));
  for (std::size_t i = 0; i < d.roots.size(); ++i) {
    if (d.roots[i].coords.size() != m)
      throw ValidationError("rank", root_label(d, i) + " has the wrong number of coordinates");
    if (d.roots[i].multiplicity < 1)
      throw ValidationError("multiplicity", root_label(d, i) + " has multiplicity < 1");
    if (d.roots[i].coords.isZero())
      throw ValidationError("nonzero-roots", root_label(d, i) + " is zero");
  }
  if (d.gram != d.gram.transpose()) throw ValidationError("gram-symmetric", "gram is not symmetric");
  if (!is_positive_definite(d.gram))
    throw ValidationError("gram-positive-definite", "a leading principal minor is <= 0");

  for (std::size_t i = 0; i < d.roots.size(); ++i)
    for (std::size_t j = i + 1; j < d.roots.size(); ++j)
      if (d.roots[i].coords == d.roots[j].coords)
        throw ValidationError("distinct-roots", root_label(d, i) + " is listed twice");

  for (std::size_t i = 0; i < d.roots.size(); ++i) {
    const auto neg = find_root(d, QVector(-d.roots[i].coords));
    if (!neg) throw ValidationError("negation-closed", "-(" + root_label(d, i) + ") is missing");
    const Root& a = d.roots[i];
    const Root& b = d.roots[*neg];
    if (a.kind != b.kind || a.multiplicity != b.multiplicity)
      throw ValidationError("negation-closed",
                            root_label(d, i) + " and its negative differ in kind or multiplicity");
    if (a.positive == b.positive)
      throw ValidationError("positive-system",
                            root_label(d, i) + " and its negative are both flagged " +
                                (a.positive ? "+" : "-"));
  }

  if (d.simple.size() != static_cast<std::size_t>(d.rank))
    throw ValidationError("simple-count", "Pi must contain exactly rank = " +
                                              std::to_string(d.rank) + " roots");
  for (auto s : d.simple)
    if (s >= d.roots.size())
      throw ValidationError("simple-count", "simple index " + std::to_string(s) + " out of range");

  int noncompact = 0;
  for (auto s : d.simple)
    if (d.roots[s].kind == RootKind::Noncompact) ++noncompact;
  if (noncompact != 1)
    throw ValidationError("one-noncompact-simple",
                          "Pi has " + std::to_string(noncompact) +
                              " noncompact members; exactly one is required");

  // Pi must be a basis of Delta_n+ u Delta_k- with nonnegative integer coefficients.
  const QMatrix s = simple_matrix(d);
  if (rank_exact(s) != m) throw ValidationError("simple-basis", "simple roots are linearly dependent");
  const auto system = pi_positive_system(d);
  for (auto s_idx : d.simple)
    if (std::find(system.begin(), system.end(), s_idx) == system.end())
      throw ValidationError("simple-basis", root_label(d, s_idx) +
                                                " is simple but not in Delta_n+ u Delta_k-");
  for (auto i : system) {
    const auto coeff = solve_exact(s, d.roots[i].coords);
    for (Eigen::Index k = 0; k < m; ++k)
      if (!is_integer((*coeff)(k)) || (*coeff)(k) < 0)
        throw ValidationError("simple-basis", root_label(d, i) +
                                                  " is not a nonnegative integer combination of Pi");
  }

  // Delta_n+ is W_k-invariant.
  const auto pn = d.positive_noncompact();
  for (std::size_t c = 0; c < d.roots.size(); ++c) {
    if (d.roots[c].kind != RootKind::Compact) continue;
    for (auto a : pn) {
      const QVector r = reflect(d, d.roots[a].coords, d.roots[c].coords);
      const auto hit = find_root(d, r);
      if (!hit || !d.roots[*hit].positive || d.roots[*hit].kind != RootKind::Noncompact)
        throw ValidationError("Wk-invariance", "reflection of " + root_label(d, a) + " in " +
                                                   root_label(d, c) + " leaves Delta_n+");
    }
  }

  if (d.sigma_plus) {
    std::set<std::size_t> seen;
    for (const auto& v : *d.sigma_plus) {
      if (v.size() != m) throw ValidationError("sigma-plus", "entry has the wrong dimension");
      const auto hit = find_root(d, v);
      if (!hit)
        throw ValidationError("sigma-plus", to_string(WeightVector(v)) +
                                                " is not a root (equal-rank data only)");
      const auto neg = find_root(d, QVector(-v));
      if (seen.count(*hit) || seen.count(*neg))
        throw ValidationError("sigma-plus", "contains a root together with its negative or twice");
      seen.insert(*hit);
    }
    if (seen.size() * 2 != d.roots.size())
      throw ValidationError("sigma-plus", "must contain exactly one of each pair +-alpha");
  }
}

QVector reflect(const RootDatum& d, const QVector& v, const QVector& beta) {
  const Rational k = 2 * d.inner(v, beta) / d.inner(beta, beta);
  return v - beta * k;
}

WeightVector coroot(const RootDatum& d, std::size_t root_index) {
  if (root_index >= d.roots.size())
    throw DomainError("coroot: root index " + std::to_string(root_index) + " out of range");
  const QVector& a = d.roots[root_index].coords;
  const Rational scale = Rational(2) / d.inner(a, a);
  return WeightVector(QVector(a * scale));
}

Rational evaluate(const RootDatum& d, const WeightVector& lambda, const WeightVector& h) {
  return d.inner(lambda, h);
}

QMatrix cone_generators(const RootDatum& d) {
  const auto pn = d.positive_noncompact();
  QMatrix g(d.rank, static_cast<Eigen::Index>(pn.size()));
  for (std::size_t j = 0; j < pn.size(); ++j)
    g.col(static_cast<Eigen::Index>(j)) = coroot(d, pn[j]).coords;
  return g;
}

bool in_minimal_cone(const RootDatum& d, const WeightVector& v, bool closure) {
  if (v.size() != d.rank)
    throw DomainError("in_minimal_cone: expected " + std::to_string(d.rank) + " coordinates, got " +
                      std::to_string(v.size()));
  return cone_membership(cone_generators(d), v.coords, !closure).member;
}

std::vector<WeightVector> fundamental_weights(const RootDatum& d) {
  const auto m = static_cast<Eigen::Index>(d.rank);
  QMatrix system(m, m);  // row j: alpha_j^T G
  for (Eigen::Index j = 0; j < m; ++j) {
    const QVector& a = d.roots[d.simple[static_cast<std::size_t>(j)]].coords;
    for (Eigen::Index c = 0; c < m; ++c) {
      Rational s = 0;
      for (Eigen::Index r = 0; r < m; ++r) s += a(r) * d.gram(r, c);
      system(j, c) = s;
    }
  }
  std::vector<WeightVector> out;
  for (Eigen::Index i = 0; i < m; ++i) {
    QVector rhs = QVector::Zero(m);
    const QVector& ai = d.roots[d.simple[static_cast<std::size_t>(i)]].coords;
    rhs(i) = d.inner(ai, ai);
    auto sol = solve_exact(system, rhs);
    if (!sol) throw ValidationError("simple-basis", "fundamental weight system is singular");
    out.emplace_back(std::move(*sol));
  }
  return out;
}

QVector omega_coordinates(const RootDatum& d, const WeightVector& lambda) {
  QVector k(d.rank);
  for (std::size_t j = 0; j < d.simple.size(); ++j) {
    const QVector& a = d.roots[d.simple[j]].coords;
    k(static_cast<Eigen::Index>(j)) = d.inner(lambda.coords, a) / d.inner(a, a);
  }
  return k;
}

WeightVector rho(const RootDatum& d) {
  QVector sum = QVector::Zero(d.rank);
  for (auto i : pi_positive_system(d)) sum += d.roots[i].coords * Rational(d.roots[i].multiplicity);
  return WeightVector(QVector(sum * Rational(1, 2)));
}

WeightVector rho_c(const RootDatum& d) {
  if (!d.sigma_plus)
    throw UnsupportedError("rho(c) needs Sigma+; datum '" + d.name + "' is not equal-rank");
  QVector sum = QVector::Zero(d.rank);
  for (const auto& v : *d.sigma_plus) sum += v;
  return WeightVector(QVector(sum * Rational(1, 2)));
}

std::vector<QVector> compact_weyl_orbit(const RootDatum& d, const QVector& v, std::size_t max_size) {
  std::vector<QVector> orbit{v};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& r : d.roots) {
      if (r.kind != RootKind::Compact || !r.positive) continue;
      QVector w = reflect(d, orbit[head], r.coords);
      if (std::find(orbit.begin(), orbit.end(), w) == orbit.end()) {
        orbit.push_back(std::move(w));
        if (orbit.size() > max_size) throw Error("compact Weyl orbit exceeds size limit");
      }
    }
  }
  return orbit;
}

std::size_t long_noncompact_root(const RootDatum& d) {
  const auto pn = d.positive_noncompact();
  std::size_t best = pn.at(0);
  for (auto i : pn)
    if (d.inner(d.roots[i].coords, d.roots[i].coords) > d.inner(d.roots[best].coords, d.roots[best].coords))
      best = i;
  return best;
}

bool compact_antidominant(const RootDatum& d, const WeightVector& lambda) {
  for (auto i : d.positive_compact())
    if (d.inner(lambda.coords, d.roots[i].coords) > 0) return false;
  return true;
}

bool nonnegative_on_cone(const RootDatum& d, const WeightVector& lambda) {
  for (auto i : d.positive_noncompact())
    if (evaluate(d, lambda, coroot(d, i)) < 0) return false;
  return true;
}

bool in_weight_lattice(const RootDatum& d, const WeightVector& lambda) {
  for (const auto& r : d.roots)
    if (!is_integer(d.inner(lambda.coords, r.coords) / d.inner(r.coords, r.coords))) return false;
  return true;
}

LatticeClass classify(const RootDatum& d, const WeightVector& lambda) {
  if (lambda.size() != d.rank)
    throw DomainError("classify: expected " + std::to_string(d.rank) + " coordinates, got " +
                      std::to_string(lambda.size()));
  LatticeClass c;
  c.integral = in_weight_lattice(d, lambda);
  c.lambda0 = c.integral && compact_antidominant(d, lambda);
  c.nonneg = c.lambda0 && nonnegative_on_cone(d, lambda);

  const QVector k = omega_coordinates(d, lambda);
  const auto m = static_cast<Eigen::Index>(d.noncompact_simple());
  c.positive = k(m) > 0;
  for (Eigen::Index i = 0; i < k.size(); ++i)
    if (!is_integer(k(i)) || k(i) < 0) c.positive = false;

  const auto pn = d.positive_noncompact();
  const WeightVector r = rho(d);
  const WeightVector shifted = lambda - r;
  const WeightVector shifted2 = lambda - Rational(2) * r;
  bool par2 = true, par1 = true, large = true;
  for (auto i : pn) {
    const QVector& a = d.roots[i].coords;
    if (d.inner(shifted.coords, a) <= 0) par2 = false;
    if (d.inner(shifted2.coords, a) <= 0) par1 = false;
    if (evaluate(d, shifted, coroot(d, i)) <= Rational(2 - d.roots[i].multiplicity)) large = false;
  }
  c.l2 = c.positive && par2;
  c.l1 = c.positive && par1;
  c.lc = c.l2 && large;

  if (d.sigma_plus) {
    const WeightVector rc = rho_c(d);
    bool hc = c.lambda0;
    for (const auto& v : *d.sigma_plus) {
      const auto hit = find_root(d, v);
      if (hit && d.roots[*hit].kind == RootKind::Noncompact && d.inner((lambda - rc).coords, v) <= 0)
        hc = false;
    }
    c.sd = hc ? Availability::Yes : Availability::No;
  }
  return c;
}

Rational formal_dimension(const RootDatum& d, const WeightVector& lambda, const Rational& c) {
  const WeightVector shifted = lambda - rho_c(d);
  Rational prod = c;
  for (const auto& v : *d.sigma_plus) prod *= d.inner(shifted.coords, v);
  return prod;
}

std::vector<std::vector<int>> enumerate_coefficients(int rank, int bound) {
  if (bound < 0) throw DomainError("enumerate_weights: box bound must be >= 0");
  std::vector<std::vector<int>> out;
  std::vector<int> k(static_cast<std::size_t>(rank), -bound);
  for (;;) {
    out.push_back(k);
    int pos = rank - 1;
    while (pos >= 0 && k[static_cast<std::size_t>(pos)] == bound) {
      k[static_cast<std::size_t>(pos)] = -bound;
      --pos;
    }
    if (pos < 0) break;
    ++k[static_cast<std::size_t>(pos)];
  }
  return out;
}

std::vector<WeightVector> enumerate_weights(const RootDatum& d, int bound) {
  const auto omegas = fundamental_weights(d);
  std::vector<WeightVector> out;
  for (const auto& k : enumerate_coefficients(d.rank, bound)) {
    QVector v = QVector::Zero(d.rank);
    for (std::size_t i = 0; i < k.size(); ++i) v += omegas[i].coords * Rational(k[i]);
    out.emplace_back(std::move(v));
  }
  return out;
}

namespace {

QVector q1(long a) {
  QVector v(1);
  v << Rational(a);
  return v;
}
QVector q2(long a, long b) {
  QVector v(2);
  v << Rational(a), Rational(b);
  return v;
}

}  // namespace

RootDatum rank_one_datum(int multiplicity) {
  RootDatum d;
  d.name = "rank1-m" + std::to_string(multiplicity);
  d.rank = 1;
  d.gram = QMatrix::Identity(1, 1);
  d.roots = {{q1(1), RootKind::Noncompact, multiplicity, true},
             {q1(-1), RootKind::Noncompact, multiplicity, false}};
  d.simple = {0};
  if (multiplicity == 1) d.sigma_plus = std::vector<QVector>{q1(1)};
  return d;
}

RootDatum sl2_datum() {
  RootDatum d = rank_one_datum(1);
  d.name = "sl2";
  return d;
}

RootDatum group_case_datum() {
  RootDatum d = rank_one_datum(2);
  d.name = "group-rank1";
  return d;
}

RootDatum su21_datum() {
  RootDatum d;
  d.name = "su21";
  d.rank = 2;
  d.gram.resize(2, 2);
  d.gram << Rational(2), Rational(-1), Rational(-1), Rational(2);
  // alpha1 compact (in Delta_k-), alpha2 noncompact simple.
  d.roots = {{q2(1, 0), RootKind::Compact, 1, false},    {q2(-1, 0), RootKind::Compact, 1, true},
             {q2(0, 1), RootKind::Noncompact, 1, true},  {q2(0, -1), RootKind::Noncompact, 1, false},
             {q2(1, 1), RootKind::Noncompact, 1, true},  {q2(-1, -1), RootKind::Noncompact, 1, false}};
  d.simple = {0, 2};
  d.sigma_plus = std::vector<QVector>{q2(1, 0), q2(0, 1), q2(1, 1)};
  return d;
}

}  // namespace horo
