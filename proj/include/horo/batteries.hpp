#pragma once

// Seeded verification batteries. Each returns named pass/fail checks plus the
// quadrature-dependent values it produced, so two resolutions can be compared.

#include "horo/rootlattice.hpp"
#include "horo/transform.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace horo {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct BatteryResult {
  std::string name;
  std::vector<Check> checks;
  std::vector<cplx> values;  ///< empty when nothing depends on the quadrature

  bool passed() const;
  void add(std::string check, bool ok, std::string detail);
};

/// cone-lattice, no-real-points, kernel-series, measure-invariance, schur,
/// fiber-identities, eigenvalue, inversion.
const std::vector<std::string>& battery_names();

/// Dispatch by name; DomainError on an unknown battery.
BatteryResult run_battery(const std::string& name, std::uint64_t seed, const QuadratureSpec& q);

BatteryResult cone_lattice_battery(const std::vector<RootDatum>& data, int box = 5);
BatteryResult no_real_points_battery(std::uint64_t seed, const QuadratureSpec& q, int count = 50);
BatteryResult kernel_series_battery(std::uint64_t seed, int pairs = 10000, int terms = 40);
BatteryResult measure_invariance_battery(std::uint64_t seed, const QuadratureSpec& q, int words = 10);
BatteryResult schur_battery(std::uint64_t seed, const QuadratureSpec& q, int pairs = 3,
                            int lambda_max = 4);
BatteryResult fiber_identities_battery(std::uint64_t seed, int points = 20, int nodes = 200);
BatteryResult eigenvalue_battery(std::uint64_t seed, const QuadratureSpec& q, int points = 5);
BatteryResult inversion_battery(std::uint64_t seed, const QuadratureSpec& q);

/// Built-in sl2, group case, rank one m = 1, 2, 3 and su(2,1).
std::vector<RootDatum> builtin_data();

/// Minimum of |<x, zeta>| over X: grid start, then Newton in (t, theta).
struct PairingMinimum {
  double value = 0;
  double t = 0, theta = 0;
  int iterations = 0;
};
PairingMinimum polish_pairing_minimum(const CVec3& zeta, double t0, double theta0);

/// max_k |a_k - b_k| / |a_k| (|a_k| floored at `floor`).
double max_relative_change(const std::vector<cplx>& a, const std::vector<cplx>& b,
                           double floor = 1e-300);

}  // namespace horo
