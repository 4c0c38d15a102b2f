#include "horo/exact.hpp"

#include <charconv>
#include <utility>

namespace horo {

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') return false;
  out = Integer(std::string(s.substr(i)));
  if (negative) out = -out;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  Integer num, den{1};
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) return std::nullopt;
  } else {
    if (!parse_integer(text.substr(0, slash), num)) return std::nullopt;
    const auto d = text.substr(slash + 1);
    if (d.empty() || d[0] == '+' || d[0] == '-') return std::nullopt;
    if (!parse_integer(d, den) || den == 0) return std::nullopt;
  }
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

Rational form(const QMatrix& gram, const QVector& u, const QVector& v) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    if (u(i) == 0) continue;
    Rational row = 0;
    for (Eigen::Index j = 0; j < gram.cols(); ++j) row += gram(i, j) * v(j);
    s += u(i) * row;
  }
  return s;
}

std::optional<QVector> solve_exact(const QMatrix& a, const QVector& b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.size() != n) return std::nullopt;
  QMatrix m(n, n + 1);
  m.leftCols(n) = a;
  m.col(n) = b;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c) m.row(p).swap(m.row(c));
    const Rational inv = 1 / m(c, c);
    for (Eigen::Index j = c; j <= n; ++j) m(c, j) *= inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (Eigen::Index j = c; j <= n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return QVector(m.col(n));
}

Eigen::Index rank_exact(QMatrix a) {
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < a.cols() && rank < a.rows(); ++c) {
    Eigen::Index p = rank;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != rank) a.row(p).swap(a.row(rank));
    for (Eigen::Index r = rank + 1; r < a.rows(); ++r) {
      if (a(r, c) == 0) continue;
      const Rational f = a(r, c) / a(rank, c);
      for (Eigen::Index j = c; j < a.cols(); ++j) a(r, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

bool is_positive_definite(const QMatrix& a) {
  if (a.rows() != a.cols()) return false;
  // Pivots of elimination without row exchanges are ratios of consecutive
  // leading principal minors, so all pivots > 0 iff all minors > 0.
  QMatrix m = a;
  const Eigen::Index n = m.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    if (m(k, k) <= 0) return false;
    for (Eigen::Index r = k + 1; r < n; ++r) {
      if (m(r, k) == 0) continue;
      const Rational f = m(r, k) / m(k, k);
      for (Eigen::Index j = k; j < n; ++j) m(r, j) -= f * m(k, j);
    }
  }
  return true;
}

namespace {

// Tableau layout: rows 0..m-1 constraints, row m objective (reduced costs
// z_j - c_j), last column right-hand side. Maximization; optimal when every
// reduced cost on an allowed column is >= 0.
struct Tableau {
  QMatrix t;
  std::vector<Eigen::Index> basis;

  Eigen::Index rows() const { return t.rows() - 1; }
  Eigen::Index rhs() const { return t.cols() - 1; }

  void pivot(Eigen::Index r, Eigen::Index c) {
    const Rational inv = 1 / t(r, c);
    for (Eigen::Index j = 0; j < t.cols(); ++j) t(r, j) *= inv;
    for (Eigen::Index i = 0; i < t.rows(); ++i) {
      if (i == r || t(i, c) == 0) continue;
      const Rational f = t(i, c);
      for (Eigen::Index j = 0; j < t.cols(); ++j) t(i, j) -= f * t(r, j);
    }
    basis[static_cast<std::size_t>(r)] = c;
  }

  // Returns false when unbounded.
  bool run(Eigen::Index allowed_cols) {
    for (;;) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < allowed_cols; ++j)
        if (t(rows(), j) < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Rational best;
      for (Eigen::Index i = 0; i < rows(); ++i) {
        if (t(i, enter) <= 0) continue;
        const Rational ratio = t(i, rhs()) / t(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[static_cast<std::size_t>(i)] <
                                  basis[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult lp_maximize(const QMatrix& a, const QVector& b, const QVector& c) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  LpResult result;

  // Phase 1: artificials n..n+m-1, maximize -sum(artificials).
  Tableau p1;
  p1.t = QMatrix::Zero(m + 1, n + m + 1);
  p1.basis.resize(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    const bool flip = b(i) < 0;
    for (Eigen::Index j = 0; j < n; ++j) p1.t(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
    p1.t(i, n + i) = 1;
    p1.t(i, n + m) = flip ? Rational(-b(i)) : b(i);
    p1.basis[static_cast<std::size_t>(i)] = n + i;
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    Rational s = 0;
    for (Eigen::Index i = 0; i < m; ++i) s -= p1.t(i, j);
    p1.t(m, j) = s;
  }
  {
    Rational s = 0;
    for (Eigen::Index i = 0; i < m; ++i) s -= p1.t(i, n + m);
    p1.t(m, n + m) = s;
  }
  p1.run(n + m);
  if (p1.t(m, n + m) != 0) return result;  // infeasible

  // Drive remaining artificials out of the basis; drop redundant rows.
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (p1.basis[static_cast<std::size_t>(i)] >= n) {
      Eigen::Index col = -1;
      for (Eigen::Index j = 0; j < n; ++j)
        if (p1.t(i, j) != 0) {
          col = j;
          break;
        }
      if (col < 0) continue;
      p1.pivot(i, col);
    }
    keep.push_back(i);
  }

  // Phase 2.
  const auto mk = static_cast<Eigen::Index>(keep.size());
  Tableau p2;
  p2.t = QMatrix::Zero(mk + 1, n + 1);
  p2.basis.resize(keep.size());
  for (Eigen::Index r = 0; r < mk; ++r) {
    const Eigen::Index i = keep[static_cast<std::size_t>(r)];
    for (Eigen::Index j = 0; j < n; ++j) p2.t(r, j) = p1.t(i, j);
    p2.t(r, n) = p1.t(i, n + m);
    p2.basis[static_cast<std::size_t>(r)] = p1.basis[static_cast<std::size_t>(i)];
  }
  for (Eigen::Index j = 0; j <= n; ++j) {
    Rational z = 0;
    for (Eigen::Index r = 0; r < mk; ++r) z += c(p2.basis[static_cast<std::size_t>(r)]) * p2.t(r, j);
    p2.t(mk, j) = j < n ? Rational(z - c(j)) : z;
  }
  if (!p2.run(n)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.value = p2.t(mk, n);
  result.x = QVector::Zero(n);
  for (Eigen::Index r = 0; r < mk; ++r) result.x(p2.basis[static_cast<std::size_t>(r)]) = p2.t(r, n);
  return result;
}

ConeMembership cone_membership(const QMatrix& generators, const QVector& v, bool open) {
  const Eigen::Index dim = generators.rows();
  const Eigen::Index k = generators.cols();
  ConeMembership out;
  if (!open) {
    const LpResult r = lp_maximize(generators, v, QVector::Zero(k));
    if (r.status != LpStatus::Optimal) return out;
    out.member = true;
    out.coefficients = r.x;
    return out;
  }
  // Coefficients c_j = t + d_j with d_j >= 0, 0 <= t <= 1 (slack s):
  //   G d + (G 1) t = v,   t + s = 1,   maximize t.
  QMatrix a = QMatrix::Zero(dim + 1, k + 2);
  QVector b(dim + 1);
  a.topLeftCorner(dim, k) = generators;
  for (Eigen::Index i = 0; i < dim; ++i) {
    Rational s = 0;
    for (Eigen::Index j = 0; j < k; ++j) s += generators(i, j);
    a(i, k) = s;
    b(i) = v(i);
  }
  a(dim, k) = 1;
  a(dim, k + 1) = 1;
  b(dim) = 1;
  QVector c = QVector::Zero(k + 2);
  c(k) = 1;
  const LpResult r = lp_maximize(a, b, c);
  if (r.status != LpStatus::Optimal) return out;
  out.certificate = r.value;
  out.member = r.value > 0;
  out.coefficients = QVector(k);
  for (Eigen::Index j = 0; j < k; ++j) out.coefficients(j) = r.x(j) + r.x(k);
  return out;
}

}  // namespace horo
