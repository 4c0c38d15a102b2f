#include "horo/batteries.hpp"

#include "horo/errors.hpp"

#include <cfloat>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

namespace horo {

namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::mt19937_64 stream(std::uint64_t seed, std::uint32_t id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), id};
  return std::mt19937_64(seq);
}

std::string kstr(const std::vector<int>& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + ")";
}

}  // namespace

bool BatteryResult::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

void BatteryResult::add(std::string check, bool ok, std::string detail) {
  checks.push_back({std::move(check), ok, std::move(detail)});
}

const std::vector<std::string>& battery_names() {
  static const std::vector<std::string> names{
      "cone-lattice", "no-real-points", "kernel-series", "measure-invariance",
      "schur",        "fiber-identities", "eigenvalue",  "inversion"};
  return names;
}

std::vector<RootDatum> builtin_data() {
  return {sl2_datum(), group_case_datum(), rank_one_datum(1), rank_one_datum(2), rank_one_datum(3),
          su21_datum()};
}

BatteryResult run_battery(const std::string& name, std::uint64_t seed, const QuadratureSpec& q) {
  if (name == "cone-lattice") return cone_lattice_battery(builtin_data());
  if (name == "no-real-points") return no_real_points_battery(seed, q);
  if (name == "kernel-series") return kernel_series_battery(seed);
  if (name == "measure-invariance") return measure_invariance_battery(seed, q);
  if (name == "schur") return schur_battery(seed, q);
  if (name == "fiber-identities") return fiber_identities_battery(seed);
  if (name == "eigenvalue") return eigenvalue_battery(seed, q);
  if (name == "inversion") return inversion_battery(seed, q);
  throw DomainError("unknown battery '" + name + "'");
}

// ---------------------------------------------------------------- lattices

BatteryResult cone_lattice_battery(const std::vector<RootDatum>& data, int box) {
  BatteryResult res;
  res.name = "cone-lattice";
  for (const auto& d : data) {
    const std::string tag = d.name + ": ";
    try {
      validate(d);
    } catch (const ValidationError& e) {
      res.add(tag + "validates", false, e.what());
      continue;
    }

    const auto coeffs = enumerate_coefficients(d.rank, box);
    const auto weights = enumerate_weights(d, box);
    const auto m = d.noncompact_simple();
    int bad_pos = 0, bad_chain = 0, bad_equal = 0, bad_scale = 0;
    std::string first_pos, first_chain, first_equal, first_scale;
    const Rational scales[] = {Rational(1, 2), Rational(3), Rational(5, 7)};
    for (std::size_t n = 0; n < weights.size(); ++n) {
      const auto& k = coeffs[n];
      const LatticeClass c = classify(d, weights[n]);
      bool all_nonneg = true;
      for (int ki : k) all_nonneg = all_nonneg && ki >= 0;
      if (c.nonneg != all_nonneg && !bad_pos++) first_pos = kstr(k);
      const bool chain = (!c.l1 || c.l2) && (!c.lc || c.l2) && (!c.positive || c.nonneg) &&
                         (!c.l2 || c.positive);
      if (!chain && !bad_chain++) first_chain = kstr(k);
      if (d.sigma_plus && c.positive && !c.l2 && !bad_equal++) first_equal = kstr(k);
      for (const auto& s : scales) {
        const WeightVector sl = s * weights[n];
        if ((compact_antidominant(d, sl) != compact_antidominant(d, weights[n]) ||
             nonnegative_on_cone(d, sl) != nonnegative_on_cone(d, weights[n])) &&
            !bad_scale++)
          first_scale = kstr(k);
      }
    }
    res.add(tag + "Lambda_{>=0} = nonnegative span of omega_i", bad_pos == 0,
            bad_pos ? std::to_string(bad_pos) + " mismatches, first k=" + first_pos
                    : std::to_string(weights.size()) + " weights");
    res.add(tag + "Lambda_1 c Lambda_2, Lambda_c c Lambda_2, Lambda_{>0} c Lambda_{>=0}", bad_chain == 0,
            bad_chain ? std::to_string(bad_chain) + " violations, first k=" + first_chain : "ok");
    if (d.sigma_plus)
      res.add(tag + "equal rank: Lambda_{>0} c Lambda_2", bad_equal == 0,
              bad_equal ? std::to_string(bad_equal) + " weights in Lambda_{>0} but not Lambda_2, first k=" +
                              first_equal
                        : "ok");
    res.add(tag + "cone conditions invariant under positive scaling", bad_scale == 0,
            bad_scale ? "first k=" + first_scale : "scales 1/2, 3, 5/7");
    {
      const auto om = fundamental_weights(d);
      const bool frac = !in_weight_lattice(d, Rational(1, 2) * om[m]);
      res.add(tag + "integrality is not scale invariant", frac, frac ? "omega_m/2 not integral" : "omega_m/2 integral?");
    }

    if (d.rank == 1) {
      const int mult = d.roots[d.simple[0]].multiplicity;
      const int start = 1 + mult / 2;
      bool ok = true;
      std::string where;
      for (int kk = -box; kk <= 10; ++kk) {
        const WeightVector lam = Rational(kk) * fundamental_weights(d)[0];
        const bool in = classify(d, lam).l2;
        if (in != (kk >= start)) {
          ok = false;
          if (where.empty()) where = "k=" + std::to_string(kk);
        }
      }
      res.add(tag + "rank one: Lambda_2 = (Z_{>0} + " + std::to_string(mult / 2) + ") omega", ok,
              ok ? "k in [-" + std::to_string(box) + ", 10]" : "mismatch at " + where);
    }

    // omega_i > 0 on the open cone: >= 0 on every generator and > 0 on one.
    {
      const auto om = fundamental_weights(d);
      const auto pn = d.positive_noncompact();
      bool ok = true;
      for (const auto& w : om) {
        bool some = false;
        for (auto a : pn) {
          const Rational v = evaluate(d, w, coroot(d, a));
          if (v < 0) ok = false;
          if (v > 0) some = true;
        }
        ok = ok && some;
      }
      res.add(tag + "omega_i > 0 on Omega", ok, ok ? "exact, on cone generators" : "fails");
    }

    // Omega = cone over the W_k-orbit of a long noncompact coroot.
    {
      const QMatrix gens = cone_generators(d);
      const auto orbit = compact_weyl_orbit(d, coroot(d, long_noncompact_root(d)).coords);
      QMatrix og(d.rank, static_cast<Eigen::Index>(orbit.size()));
      for (std::size_t j = 0; j < orbit.size(); ++j) og.col(static_cast<Eigen::Index>(j)) = orbit[j];
      bool ok = true;
      for (Eigen::Index j = 0; j < gens.cols(); ++j)
        ok = ok && cone_membership(og, QVector(gens.col(j)), false).member;
      for (Eigen::Index j = 0; j < og.cols(); ++j)
        ok = ok && cone_membership(gens, QVector(og.col(j)), false).member;
      res.add(tag + "Omega = cone(W_k . long coroot)", ok,
              std::to_string(orbit.size()) + " orbit rays, " + std::to_string(gens.cols()) + " generators");
    }
  }
  return res;
}

// ---------------------------------------------------------------- geometry

PairingMinimum polish_pairing_minimum(const CVec3& z, double t, double th) {
  // F = |p|^2, p = cosh t (z1 cos th + z2 sin th) - z3 sinh t.
  auto eval = [&](double t_, double th_, double* g, double* h) {
    const double ch = std::cosh(t_), sh = std::sinh(t_), c = std::cos(th_), s = std::sin(th_);
    const cplx a = z(0) * c + z(1) * s, b = -z(0) * s + z(1) * c;
    const cplx p = ch * a - z(2) * sh;
    if (g) {
      const cplx pt = sh * a - z(2) * ch, ph = ch * b;
      const cplx ptt = p, phh = -ch * a, pth = sh * b;
      g[0] = 2 * std::real(std::conj(p) * pt);
      g[1] = 2 * std::real(std::conj(p) * ph);
      h[0] = 2 * std::real(std::conj(pt) * pt + std::conj(p) * ptt);
      h[1] = 2 * std::real(std::conj(pt) * ph + std::conj(p) * pth);
      h[2] = 2 * std::real(std::conj(ph) * ph + std::conj(p) * phh);
    }
    return std::norm(p);
  };
  PairingMinimum out;
  double f = eval(t, th, nullptr, nullptr);
  for (int it = 0; it < 200; ++it) {
    double g[2], h[3];
    eval(t, th, g, h);
    double dt, dh;
    const double det = h[0] * h[2] - h[1] * h[1];
    if (h[0] > 0 && det > 0) {
      dt = -(h[2] * g[0] - h[1] * g[1]) / det;
      dh = -(-h[1] * g[0] + h[0] * g[1]) / det;
    } else {
      dt = -g[0] / (std::abs(h[0]) + 1.0);
      dh = -g[1] / (std::abs(h[2]) + 1.0);
    }
    double step = 1.0, fn = eval(t + dt, th + dh, nullptr, nullptr);
    while (fn > f && step > 1e-12) {
      step *= 0.5;
      fn = eval(t + step * dt, th + step * dh, nullptr, nullptr);
    }
    out.iterations = it + 1;
    if (fn > f) break;
    t += step * dt;
    th += step * dh;
    const double df = f - fn;
    f = fn;
    if (std::hypot(dt, dh) * step < 1e-14 || df <= 1e-17 * f) break;
  }
  out.value = std::sqrt(f);
  out.t = t;
  out.theta = th;
  return out;
}

BatteryResult no_real_points_battery(std::uint64_t seed, const QuadratureSpec& q, int count) {
  BatteryResult res;
  res.name = "no-real-points";
  q.validate();
  auto rng = stream(seed, 2);
  const int nt = q.n_t, nth = q.n_theta;
  std::vector<double> ts(static_cast<std::size_t>(nt)), th(static_cast<std::size_t>(nth));
  for (int i = 0; i < nt; ++i) ts[static_cast<std::size_t>(i)] = -6.0 + 12.0 * i / (nt - 1);
  for (int j = 0; j < nth; ++j) th[static_cast<std::size_t>(j)] = 2 * std::numbers::pi * j / nth;

  auto grid_min = [&](const CVec3& z, double& bt, double& bth) {
    double best = std::numeric_limits<double>::infinity();
    for (double t : ts)
      for (double a : th) {
        const double v = std::abs(bilinear(param_X(t, a).v, z));
        if (v < best) {
          best = v;
          bt = t;
          bth = a;
        }
      }
    return best;
  };

  double worst_grid = std::numeric_limits<double>::infinity(), worst_polish = worst_grid;
  double worst_oracle = 0;
  bool classified = true;
  for (int n = 0; n < count; ++n) {
    const CVec3 z = random_horopoint(rng, n % 2 ? 1 : -1, 1.05, 3.0);
    classified = classified && classify_horopoint(z).interior();
    double bt = 0, bth = 0;
    const double gm = grid_min(z, bt, bth);
    const PairingMinimum pm = polish_pairing_minimum(z, bt, bth);
    const double oracle = std::sqrt(quadratic(RVec3(z.real())));
    worst_grid = std::min(worst_grid, gm);
    worst_polish = std::min(worst_polish, pm.value);
    worst_oracle = std::max(worst_oracle, std::abs(pm.value - oracle) / oracle);
    res.values.push_back(pm.value);
  }
  res.add("sampled horopoints are interior", classified, std::to_string(count) + " points");
  res.add("min |<x,zeta>| > 1 on the grid", worst_grid > 1.0, "smallest grid minimum " + sci(worst_grid - 1.0) + " above 1");
  res.add("polished minimum > 1", worst_polish > 1.0, "smallest " + sci(worst_polish - 1.0) + " above 1");
  res.add("polished minimum = sqrt(Delta(Re zeta))", worst_oracle < 1e-10, "max rel. deviation " + sci(worst_oracle));

  double bt = 0, bth = 0;
  const double b = grid_min(zeta0(), bt, bth);
  res.add("boundary zeta0: min in [1-1e-10, 1+1e-3]", b >= 1.0 - 1e-10 && b <= 1.0 + 1e-3,
          "min - 1 = " + sci(b - 1.0) + " at t = " + sci(bt));
  res.values.push_back(polish_pairing_minimum(zeta0(), bt, bth).value);
  return res;
}

BatteryResult kernel_series_battery(std::uint64_t seed, int pairs, int terms) {
  BatteryResult res;
  res.name = "kernel-series";
  auto rng = stream(seed, 3);
  std::uniform_real_distribution<double> ut(-4.0, 4.0), uth(0.0, 2 * std::numbers::pi);
  std::bernoulli_distribution coin(0.5);
  double worst = 0, min_mod = std::numeric_limits<double>::infinity();
  int fails = 0;
  for (int n = 0; n < pairs; ++n) {
    const HoroPoint zeta = classify_horopoint(random_horopoint(rng, coin(rng) ? 1 : -1, 1.05, 3.0));
    const RVec3 x = param_X(ut(rng), uth(rng)).v;
    const cplx k = cauchy_kernel(zeta, x);
    const cplx u = 1.0 / bilinear(x, zeta.v);
    const double a = std::abs(u);
    cplx sum = 0.0, term = 1.0;
    double abs_sum = 0;
    for (int l = 1; l <= terms; ++l) {
      term *= u;
      sum += term;
      abs_sum += std::abs(term);
    }
    const double tail = std::pow(a, terms + 1) / (1.0 - a);
    const double rounding = 64 * DBL_EPSILON * (std::abs(k) + abs_sum);
    const double err = std::abs(k - sum);
    worst = std::max(worst, err / (tail + rounding));
    min_mod = std::min(min_mod, 1.0 / a);
    if (err > tail + rounding) ++fails;
  }
  res.add("|K - sum_{l<=" + std::to_string(terms) + "} <x,zeta>^-l| <= geometric tail", fails == 0,
          std::to_string(pairs) + " pairs, " + std::to_string(fails) + " over, worst err/bound " + sci(worst) +
              ", min |<x,zeta>| " + sci(min_mod));
  return res;
}

BatteryResult measure_invariance_battery(std::uint64_t seed, const QuadratureSpec& q, int words) {
  BatteryResult res;
  res.name = "measure-invariance";
  auto rng = stream(seed, 4);
  const CVec3 w = 2.0 * zeta0();
  const std::vector<std::pair<std::string, TestFunction::Fn>> fns{
      {"exp(-|x|^2)", [](const RVec3& x) { return cplx(std::exp(-x.squaredNorm())); }},
      {"exp(-(x1-1/2)^2-x2^2-2x3^2)",
       [](const RVec3& x) {
         return cplx(std::exp(-(x(0) - 0.5) * (x(0) - 0.5) - x(1) * x(1) - 2 * x(2) * x(2)));
       }},
      {"|<x,2 zeta0>|^-6", [w](const RVec3& x) { return cplx(std::pow(std::abs(bilinear(x, w)), -6)); }},
  };
  std::vector<cplx> base;
  for (const auto& [label, f] : fns) base.push_back(integrate_over_X(f, q));
  for (const auto& b : base) res.values.push_back(b);
  for (int n = 0; n < words; ++n) {
    const GroupElement g = random_word(rng);
    for (std::size_t i = 0; i < fns.size(); ++i) {
      const auto& f = fns[i].second;
      const cplx moved = integrate_over_X([&](const RVec3& x) { return f(RVec3(g.m * x)); }, q);
      const double rel = std::abs(moved - base[i]) / std::abs(base[i]);
      res.values.push_back(moved);
      res.add("word " + std::to_string(n) + " [" + g.word + "], " + fns[i].first, rel < 1e-8,
              "rel. change " + sci(rel));
    }
  }
  return res;
}

BatteryResult schur_battery(std::uint64_t seed, const QuadratureSpec& q, int pairs, int lambda_max) {
  BatteryResult res;
  res.name = "schur";
  auto rng = stream(seed, 5);
  for (int n = 0; n < pairs; ++n) {
    // opposite sheets; on a common sheet every entry vanishes
    const HoroPoint z1 = classify_horopoint(random_horopoint(rng, -1));
    const HoroPoint z2 = classify_horopoint(random_horopoint(rng, 1));
    const Eigen::MatrixXcd m = schur_matrix(lambda_max, z1, z2, q);
    const Eigen::MatrixXcd mt = schur_matrix(lambda_max, z2, z1, q);
    const double big = m.cwiseAbs().maxCoeff();
    double off = 0, diag = std::numeric_limits<double>::infinity();
    for (int l = 0; l < lambda_max; ++l)
      for (int k = 0; k < lambda_max; ++k) {
        if (l == k) {
          diag = std::min(diag, std::abs(m(l, k)));
          res.values.push_back(m(l, k));
        } else {
          off = std::max(off, std::abs(m(l, k)));
        }
      }
    const double sym = (m - mt.transpose()).cwiseAbs().maxCoeff() / big;
    const std::string tag = "pair " + std::to_string(n) + ": ";
    res.add(tag + "off-diagonal < 1e-7 max", off < 1e-7 * big, "max off/max " + sci(off / big));
    res.add(tag + "symmetric under (l,zeta1) <-> (m,zeta2)", sym < 1e-12, "rel. defect " + sci(sym));
    res.add(tag + "diagonal nonzero", diag > 1e-7 * big, "min diag/max " + sci(diag / big));
  }
  return res;
}

BatteryResult fiber_identities_battery(std::uint64_t seed, int points, int nodes) {
  BatteryResult res;
  res.name = "fiber-identities";
  auto rng = stream(seed, 6);
  std::uniform_real_distribution<double> us(0.2, 1.5), ut(-14.0, 14.0);
  double worst_iso = 0, worst_pair = 0;
  int not_interior = 0, total = 0;
  for (int n = 0; n < points; ++n) {
    CVec3 z;
    do {
      z = act(random_word(rng), tube_point(us(rng)));
    } while (std::real(z(0) * z(0) + z(1) * z(1)) <= 0.0 || std::abs(z(0) * z(0) + z(1) * z(1)) <= 1e-6);
    for (int k = 0; k < nodes; ++k) {
      const CVec3 zeta = fiber_curve(z, ut(rng));
      worst_iso = std::max(worst_iso, std::abs(quadratic(zeta)) / zeta.squaredNorm());
      worst_pair = std::max(worst_pair, std::abs(bilinear(z, zeta) - 1.0) / (z.norm() * zeta.norm()));
      if (!classify_horopoint(zeta).interior()) ++not_interior;
      ++total;
    }
  }
  const std::string n = std::to_string(points) + "x" + std::to_string(nodes);
  res.add("Delta(zeta(t)) = 0", worst_iso <= 1e-10, n + ", max |Delta|/|zeta|^2 " + sci(worst_iso));
  res.add("<z, zeta(t)> = 1", worst_pair <= 1e-10, n + ", max |<z,zeta>-1|/(|z||zeta|) " + sci(worst_pair));
  res.add("zeta(t) interior", not_interior == 0, std::to_string(not_interior) + " of " + std::to_string(total) + " not interior");
  return res;
}

BatteryResult eigenvalue_battery(std::uint64_t seed, const QuadratureSpec& q, int points) {
  BatteryResult res;
  res.name = "eigenvalue";
  const LCalibration& cal = L_calibration();
  res.add("sign calibration at lambda = 2", cal.residual < 1e-5,
          "epsilon = " + std::to_string(cal.sign) + ", Euler ratio " + sci(cal.euler_ratio.real()) +
              ", residual " + sci(cal.residual));
  auto rng = stream(seed, 7);
  std::vector<CVec3> pts;
  for (int n = 0; n < points; ++n) pts.push_back(random_horopoint(rng, 1));
  for (int lambda : {2, 3, 4}) {
    const PreparedFunction f = prepare(TestFunction::matrix_coefficient(2.0 * zeta0(), lambda), q);
    const HoloFn phi = [&](const CVec3& v) { return cauchy_transform(f, classify_horopoint(v)); };
    double worst = 0;
    for (const auto& z : pts) {
      const HoroPoint zp = classify_horopoint(z);
      const cplx ratio = apply_L(phi, zp) / phi(z);
      res.values.push_back(ratio);
      worst = std::max(worst, std::abs(ratio - (lambda - 0.5)) / (lambda - 0.5));
    }
    res.add("L f^_" + std::to_string(lambda) + " = " + std::to_string(lambda) + "-1/2 times f^", worst < 1e-5,
            std::to_string(points) + " points, max rel. error " + sci(worst));
  }
  return res;
}

BatteryResult inversion_battery(std::uint64_t seed, const QuadratureSpec& q) {
  BatteryResult res;
  res.name = "inversion";
  auto rng = stream(seed, 8);
  std::vector<CVec3> zs;
  for (double s : {0.3, 0.6, 0.9, 1.2, 1.5}) zs.push_back(tube_point(s));
  const std::vector<std::pair<std::string, CVec3>> ws{{"2 zeta0", 2.0 * zeta0()},
                                                      {"seeded w", random_horopoint(rng, -1)}};
  for (const auto& [label, w] : ws) {
    cplx means[2];
    for (int lambda : {2, 3}) {
      const InversionReport rep = inversion_pipeline(TestFunction::matrix_coefficient(w, lambda), zs, q);
      for (const auto& p : rep.points) res.values.push_back(p.ratio);
      means[lambda - 2] = rep.mean;
      res.add(label + ", lambda=" + std::to_string(lambda) + ": cv of (L f^)^v / f < 1e-4", rep.cv < 1e-4,
              "cv " + sci(rep.cv) + ", mean " + sci(rep.mean.real()) + (rep.mean.imag() < 0 ? " - " : " + ") +
                  sci(std::abs(rep.mean.imag())) + "i, mean/(4 pi^2) " +
                  sci(rep.mean.real() / (4 * std::numbers::pi * std::numbers::pi)));
    }
    const double rel = std::abs(means[0] - means[1]) / std::abs(means[0]);
    res.add(label + ": lambda=2 and lambda=3 means agree within 1e-3", rel < 1e-3, "rel. diff " + sci(rel));
  }
  try {
    inversion_pipeline(TestFunction::matrix_coefficient(2.0 * zeta0(), 1), zs, q);
    res.add("lambda=1 raises a divergence error", false, "no error raised");
  } catch (const DivergenceError& e) {
    res.add("lambda=1 raises a divergence error", true, e.what());
  }
  return res;
}

double max_relative_change(const std::vector<cplx>& a, const std::vector<cplx>& b, double floor) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]) / std::max(std::abs(a[i]), floor));
  return worst;
}

}  // namespace horo
