#pragma once

#include <array>

#include "udw/matrix.hpp"

namespace udw {

// Angle of the pure input state sin(theta)|01> + cos(theta)|10|, radians,
// restricted to [0, pi/2].
struct InitialStateParams {
  double theta = 0.0;
};

// Raw detector/interaction parameters in natural units (c = hbar = kB = 1).
struct PhysicalParams {
  double epsilon = 0.0;  // coupling constant
  double omega = 1.0;    // detector energy gap
  double delta = 1.0;    // interaction window, proper time
  double kappa = 0.0;    // Gaussian coupling-function width
  double accel = 0.0;    // proper acceleration of the moving detector
};

// Dimensionless channel parameters: q = exp(-2 pi omega / accel) in [0, 1]
// and nu2 = nu^2 >= 0. The pair (q, nu2) = (1, 0) is rejected because the
// output normalization vanishes there.
struct ChannelParams {
  double q = 0.0;
  double nu2 = 0.0;
};

// Scalars of the evolved-state closed form. Satisfies
// 2*alpha + beta + gamma == 1 with all three nonnegative.
struct FinalStateParams {
  double alpha;
  double beta;
  double gamma;
  double theta;
  double denom;  // shared normalization D = (1-q) + nu2*(sin^2 + q cos^2)
};

// nu^2 together with a perturbative-validity flag. The flag never changes
// the returned value.
struct EffectiveCoupling {
  double nu2 = 0.0;
  bool validity_warning = false;
};

// Order-of-magnitude readings of the model's validity conditions
// (nu^2 much less than 1, omega*delta much greater than 1).
inline constexpr double kNu2WarnThreshold = 0.1;
inline constexpr double kOmegaDeltaWarnThreshold = 10.0;

void validate_theta(double theta);
void validate_channel(const ChannelParams& cp);

// |Psi><Psi| for |Psi> = sin(theta)|01> + cos(theta)|10>.
ComplexMatrix initial_state(const InitialStateParams& p);

// q = exp(-2 pi omega / accel); 0 at accel = 0 by convention, strictly
// increasing in accel, approaching 1 only in the infinite-acceleration limit.
double acceleration_to_q(double omega, double accel);

// nu^2 = epsilon^2 omega delta / (2 pi) * exp(-omega^2 kappa^2). Sets the
// warning flag at nu^2 >= 0.1 or omega*delta <= 10; throws when nu^2 >= 1.
EffectiveCoupling effective_coupling(const PhysicalParams& p);

FinalStateParams final_state_params(double theta, const ChannelParams& cp);

// The evolved bipartite state: diag(gamma, 2a sin^2, 2a cos^2, beta) with
// the central off-diagonal pair alpha*sin(2 theta).
ComplexMatrix final_state_closed_form(double theta, const ChannelParams& cp);

// The three 2x2 Kraus operators acting on the accelerated detector:
// sqrt(1-q)*I, nu*sqrt(q)|1><0|, nu|0><1|. The set is trace-non-increasing
// (sum M^dag M = diag(1-q+q nu2, 1-q+nu2) != I), so channel application
// renormalizes by the output trace.
std::array<ComplexMatrix, 3> kraus_operators(const ChannelParams& cp);

// [sum (I (x) M) rho (I (x) M)^dag] / trace(...); the static detector's
// Kraus operator is the identity. Throws DegenerateChannelError if the
// unnormalized output trace vanishes.
ComplexMatrix apply_channel(const ComplexMatrix& rho, const ChannelParams& cp);

}  // namespace udw
