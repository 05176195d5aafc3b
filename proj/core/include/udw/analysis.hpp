#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "udw/model.hpp"

namespace udw {

// A (theta, nu2) point is frozen when max_q |dC/dq| stays below this over
// the sampled q range; picked so only exact zeros of the analytic
// derivative qualify.
inline constexpr double kFrozenDerivativeTol = 1e-12;

// Central-difference step balancing truncation against rounding at double
// precision.
inline constexpr double kDefaultFdStep = 1e-4;

// Analytic q-derivative of the l1 coherence:
// -nu2 sin(2 theta) / ((1-q) + nu2 (sin^2 + q cos^2))^2. Nonpositive on the
// whole valid domain; strictly negative whenever sin(2 theta) > 0 and nu > 0.
double dCl1_dq(double theta, double q, double nu2);

// Central difference (C(q+h) - C(q-h)) / (2h); requires [q-h, q+h] in [0, 1).
double finite_difference_dq(double theta, double q, double nu2,
                            double h = kDefaultFdStep);

struct FrozenScanResult {
  struct GridPoint {
    double theta;
    double nu2;
  };
  std::vector<GridPoint> grid;           // theta-major order
  std::vector<GridPoint> frozen_points;  // subset of grid
  // Largest |dCl1/dq| over the non-frozen points and where it occurs.
  double max_abs_derivative_elsewhere = 0.0;
  GridPoint max_location{0.0, 0.0};
  double max_location_q = 0.0;
  // Supplementary: largest numeric |dC_RE/dq| off the frozen set. Reported
  // for inspection only; no freezing claim is attached to it.
  double max_abs_re_derivative_elsewhere = 0.0;
  // True when the frozen set is exactly the trivial boundary: incoherent
  // input (sin 2theta = 0, i.e. theta in {0, pi/2}) or no interaction
  // (nu2 = 0).
  bool frozen_set_is_boundary_only = false;
};

FrozenScanResult frozen_scan(const std::vector<double>& theta_grid,
                             const std::vector<double>& nu2_grid,
                             const std::vector<double>& q_samples,
                             double tol = kFrozenDerivativeTol);

struct SuddenDeathResult {
  std::optional<double> threshold;  // q* or nu*; absent when no finite death
  std::pair<double, double> bracket{0.0, 0.0};
  int iterations = 0;
  // Set when the threshold lies outside the nu^2 << 1 validity regime.
  bool validity_warning = false;
};

// Unique q* in (0, 1) where (1-q) = nu2*sqrt(q), located by bisection to
// 1e-10. Returns no finite death for nu2 = 0. The condition is a lemma of
// the X-state concurrence applied to the evolved family; tests establish it
// against the matrix-level concurrence sign.
SuddenDeathResult sudden_death_q(double theta, double nu2);

// nu* = sqrt((1-q)/sqrt(q)) from the same death condition; concurrence is
// positive below nu* and exactly zero at or above it.
SuddenDeathResult sudden_death_nu(double theta, double q);

struct RobustnessReport {
  double c_l1;
  double concurrence;
  double gap;  // c_l1 - concurrence, nonnegative on the whole family
};

RobustnessReport robustness_report(double theta, const ChannelParams& cp);

// True iff the channel maps the diagonal part of the input state exactly to
// the diagonal part of the evolved state (entrywise within tol) — the
// incoherent-operation property of the noise.
bool verify_incoherent_operation(double theta, const ChannelParams& cp,
                                 double tol);

}  // namespace udw
