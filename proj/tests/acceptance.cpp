// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// Tolerances and sample sizes are the pinned ones; runtime limits are checked too.

#include "horo/batteries.hpp"
#include "horo/datum_io.hpp"
#include "horo/errors.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>

#ifndef HORO_FIXTURE_DIR
#define HORO_FIXTURE_DIR "fixtures"
#endif

using namespace horo;

namespace {

struct Timed {
  BatteryResult result;
  double seconds = 0;
};

template <typename F>
Timed timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Timed t;
  t.result = f();
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return t;
}

int failures = 0;

void report(int id, const std::string& title, const Timed& t, double limit) {
  const bool in_time = limit <= 0 || t.seconds < limit;
  const bool ok = t.result.passed() && in_time;
  if (!ok) ++failures;
  if (limit > 0)
    std::printf("[%s] criterion %d: %s (%.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", id, title.c_str(),
                t.seconds, limit);
  else
    std::printf("[%s] criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", id, title.c_str(), t.seconds);
  for (const auto& c : t.result.checks)
    std::printf("    %s %s: %s\n", c.passed ? "ok  " : "FAIL", c.name.c_str(), c.detail.c_str());
  if (!in_time) std::printf("    FAIL runtime over limit\n");
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 1;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  const QuadratureSpec q;
  std::printf("acceptance suite, seed %llu\n", static_cast<unsigned long long>(seed));

  const std::string dir = HORO_FIXTURE_DIR;
  const Timed c1 = timed([&] {
    std::vector<RootDatum> data;
    for (const char* f : {"sl2.rd", "group_case.rd", "rank1_m1.rd", "rank1_m2.rd", "rank1_m3.rd", "su21.rd"})
      data.push_back(load_datum(dir + "/" + f));
    return cone_lattice_battery(data, 5);
  });
  report(1, "lattice suite (exact, |k_i| <= 5)", c1, 1);

  std::map<int, Timed> runs;
  runs[2] = timed([&] { return no_real_points_battery(seed, q); });
  report(2, "no real points (50 horopoints, 480x256 grid, |t| <= 6)", runs[2], 30);
  runs[3] = timed([&] { return kernel_series_battery(seed); });
  report(3, "kernel vs geometric series (10^4 pairs, 40 terms)", runs[3], 5);
  runs[4] = timed([&] { return measure_invariance_battery(seed, q); });
  report(4, "measure invariance (10 words x 3 functions, rel < 1e-8)", runs[4], 20);
  runs[5] = timed([&] { return schur_battery(seed, q); });
  report(5, "Schur orthogonality (lambda_max 4, 3 pairs, < 1e-7)", runs[5], 60);
  runs[6] = timed([&] { return fiber_identities_battery(seed); });
  report(6, "fiber identities (20 z x 200 t, 1e-10)", runs[6], 1);
  runs[7] = timed([&] { return eigenvalue_battery(seed, q); });
  report(7, "L eigenvalue lambda - 1/2 (lambda 2,3,4, 5 points, 1e-5)", runs[7], 60);
  runs[8] = timed([&] { return inversion_battery(seed, q); });
  report(8, "inversion round trip (cv < 1e-4, means within 1e-3, lambda=1 diverges)", runs[8], 600);

  // Criterion 9: rerun 2-8 with every node count doubled.
  {
    const QuadratureSpec q2 = q.doubled();
    Timed t9;
    t9.result.name = "self-consistency";
    const auto t0 = std::chrono::steady_clock::now();
    for (int id = 2; id <= 8; ++id) {
      BatteryResult r;
      switch (id) {
        case 2: r = no_real_points_battery(seed, q2); break;
        case 3: r = kernel_series_battery(seed); break;
        case 4: r = measure_invariance_battery(seed, q2); break;
        case 5: r = schur_battery(seed, q2); break;
        case 6: r = fiber_identities_battery(seed); break;
        case 7: r = eigenvalue_battery(seed, q2); break;
        case 8: r = inversion_battery(seed, q2); break;
      }
      const auto& base = runs[id].result.values;
      const double tol = id == 8 ? 1e-5 : 1e-8;
      if (base.empty()) {
        t9.result.add("criterion " + std::to_string(id), true, "no quadrature-dependent values");
        continue;
      }
      const double change = max_relative_change(base, r.values);
      char buf[96];
      std::snprintf(buf, sizeof buf, "%zu values, max rel. change %.3e (tol %.0e)", base.size(), change, tol);
      t9.result.add("criterion " + std::to_string(id), change < tol, buf);
    }
    t9.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(9, "quadrature self-consistency under doubling", t9, 0);
  }

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
