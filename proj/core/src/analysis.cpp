#include "udw/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "udw/errors.hpp"
#include "udw/measures.hpp"
#include "udw/numerics.hpp"

namespace udw {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr int kBisectionIters = 60;  // interval width 2^-60 < 1e-18

void require_interior_theta(double theta) {
  validate_theta(theta);
  if (theta == 0.0 || theta == kHalfPi) {
    throw std::domain_error(
        "theta on the boundary carries no entanglement to kill");
  }
}

// A grid point sits on the trivially frozen boundary when the prefactor
// nu2*sin(2 theta) of the analytic derivative vanishes: incoherent input
// (theta in {0, pi/2}) or no field interaction (nu2 = 0).
bool on_frozen_boundary(double theta, double nu2, double tol) {
  return nu2 * std::sin(2.0 * theta) <= tol;
}

}  // namespace

double dCl1_dq(double theta, double q, double nu2) {
  validate_theta(theta);
  validate_channel({q, nu2});
  const double s2 = std::sin(theta) * std::sin(theta);
  const double c2 = std::cos(theta) * std::cos(theta);
  const double denom = (1.0 - q) + nu2 * (s2 + q * c2);
  return -nu2 * std::sin(2.0 * theta) / (denom * denom);
}

double finite_difference_dq(double theta, double q, double nu2, double h) {
  if (!(h > 0.0)) {
    throw std::domain_error("finite_difference_dq: h must be positive");
  }
  if (!(q - h >= 0.0) || !(q + h < 1.0)) {
    throw std::domain_error(
        "finite_difference_dq: stencil [q-h, q+h] leaves [0, 1)");
  }
  const double hi = l1_coherence_closed(theta, {q + h, nu2});
  const double lo = l1_coherence_closed(theta, {q - h, nu2});
  return (hi - lo) / (2.0 * h);
}

FrozenScanResult frozen_scan(const std::vector<double>& theta_grid,
                             const std::vector<double>& nu2_grid,
                             const std::vector<double>& q_samples,
                             double tol) {
  if (theta_grid.empty() || nu2_grid.empty() || q_samples.empty()) {
    throw std::invalid_argument("frozen_scan: grids must be nonempty");
  }
  if (!(tol > 0.0)) {
    throw std::domain_error("frozen_scan: tol must be positive");
  }
  for (double theta : theta_grid) validate_theta(theta);
  for (double nu2 : nu2_grid) validate_channel({0.0, nu2});
  for (double q : q_samples) {
    if (!(q >= 0.0 && q < 1.0)) {
      throw std::domain_error("frozen_scan: q samples must lie in [0, 1)");
    }
  }

  FrozenScanResult result;
  result.frozen_set_is_boundary_only = true;
  const double fd_step = kDefaultFdStep;

  for (double theta : theta_grid) {
    for (double nu2 : nu2_grid) {
      const FrozenScanResult::GridPoint point{theta, nu2};
      result.grid.push_back(point);

      double max_abs = 0.0;
      double max_abs_q = 0.0;
      for (double q : q_samples) {
        const double d = std::abs(dCl1_dq(theta, q, nu2));
        if (d > max_abs) {
          max_abs = d;
          max_abs_q = q;
        }
      }

      const bool frozen = max_abs < tol;
      const bool boundary = on_frozen_boundary(theta, nu2, tol);
      if (frozen) {
        result.frozen_points.push_back(point);
        if (!boundary) result.frozen_set_is_boundary_only = false;
      } else {
        if (boundary) result.frozen_set_is_boundary_only = false;
        if (max_abs > result.max_abs_derivative_elsewhere) {
          result.max_abs_derivative_elsewhere = max_abs;
          result.max_location = point;
          result.max_location_q = max_abs_q;
        }
        // Supplementary numeric C_RE derivative over the same q samples.
        for (double q : q_samples) {
          if (q - fd_step < 0.0 || q + fd_step >= 1.0) continue;
          const double hi = relative_entropy_coherence(
              final_state_closed_form(theta, {q + fd_step, nu2}));
          const double lo = relative_entropy_coherence(
              final_state_closed_form(theta, {q - fd_step, nu2}));
          result.max_abs_re_derivative_elsewhere =
              std::max(result.max_abs_re_derivative_elsewhere,
                       std::abs(hi - lo) / (2.0 * fd_step));
        }
      }
    }
  }
  return result;
}

SuddenDeathResult sudden_death_q(double theta, double nu2) {
  require_interior_theta(theta);
  validate_channel({0.0, nu2});
  SuddenDeathResult result;
  if (nu2 == 0.0) {
    // Identity-channel branch: concurrence stays sin(2 theta) for all q < 1.
    result.bracket = {1.0, 1.0};
    return result;
  }
  // (1-q) - nu2*sqrt(q) is strictly decreasing on [0, 1] with a sign change,
  // so plain bisection is unconditionally safe.
  const auto death_margin = [nu2](double q) {
    return (1.0 - q) - nu2 * std::sqrt(q);
  };
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < kBisectionIters; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (death_margin(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  result.threshold = 0.5 * (lo + hi);
  result.bracket = {lo, hi};
  result.iterations = kBisectionIters;
  return result;
}

SuddenDeathResult sudden_death_nu(double theta, double q) {
  require_interior_theta(theta);
  if (!(q > 0.0 && q < 1.0)) {
    throw std::domain_error("sudden_death_nu: q must lie in (0, 1), got " +
                            std::to_string(q));
  }
  const double nu_star2 = (1.0 - q) / std::sqrt(q);
  SuddenDeathResult result;
  result.threshold = std::sqrt(nu_star2);
  result.bracket = {*result.threshold, *result.threshold};
  result.validity_warning = nu_star2 >= kNu2WarnThreshold;
  return result;
}

RobustnessReport robustness_report(double theta, const ChannelParams& cp) {
  RobustnessReport report{};
  report.c_l1 = l1_coherence_closed(theta, cp);
  report.concurrence = concurrence_xstate(final_state_closed_form(theta, cp));
  report.gap = report.c_l1 - report.concurrence;
  return report;
}

bool verify_incoherent_operation(double theta, const ChannelParams& cp,
                                 double tol) {
  const ComplexMatrix dephased_in =
      diagonal_part(initial_state(InitialStateParams{theta}));
  const ComplexMatrix evolved = apply_channel(dephased_in, cp);
  const ComplexMatrix dephased_out =
      diagonal_part(final_state_closed_form(theta, cp));
  return max_abs_difference(evolved, dephased_out) <= tol;
}

}  // namespace udw
