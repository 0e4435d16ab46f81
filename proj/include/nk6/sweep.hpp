#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nk6/lie_algebra.hpp"
#include "nk6/report.hpp"

namespace nk6 {

// (alpha, beta, gamma, x, y, z) of the normal-form family.
using FamilyParams = std::array<double, 6>;

// Components of d psi- - 2 omega^2 on so12(tau) + so12, with psi+ = d omega / 3 and
// psi- from the float stable-form path in the given orientation (the sign of k).
// Throws NotStable when lambda(psi+) vanishes.
std::vector<double> nk_residual(const LieAlgebra& lie, const FamilyParams& p, int orientation);

struct SolveOutcome {
  FamilyParams params{};
  double residual = 0;  // max-abs of the raw residual
  bool converged = false;
  bool root = false;  // residual below tolerance and omega nondegenerate
  double orbit_distance = 0;
  bool in_orbit = false;
};

struct SweepOptions {
  std::uint64_t seed = 20240611;
  int starts = 1024;
  int threads = 0;  // 0: hardware concurrency
  double box = 1.0;
  int max_evaluations = 600;
  double residual_tol = 1e-10;
  double orbit_tol = 1e-6;
};

// Levenberg-Marquardt over directions of omega (the residual is quadratic along
// each ray), followed by the exact rescaling onto the ray's root.
SolveOutcome solve_from(const FamilyParams& start, int tau, int orientation, const SweepOptions& opt = {});

// Distance to alpha = beta = gamma = sqrt(3)/18, x = y = z = 0 after the best of the
// normalizations: diagonal sign automorphisms of each summand and, for tau = 1,
// the exchange of the summands.
double orbit_distance(const FamilyParams& p, int tau);

struct SweepConfig {
  int tau = 1;
  int orientation = -1;
  int starts = 0;
  int converged = 0;
  int roots = 0;
  int in_orbit = 0;
  double max_orbit_distance = 0;
};

struct SweepResult {
  std::vector<SweepConfig> configs;  // (tau, orientation) in {+1,-1}^2
  std::vector<SolveOutcome> outcomes;
  double seconds = 0;
};

// Start i uses its own generator seeded from (seed, i) and the configuration i mod 4.
SweepResult numeric_uniqueness_sweep(const SweepOptions& opt);
Report sweep_report(const SweepResult& r, const SweepOptions& opt);

}  // namespace nk6
