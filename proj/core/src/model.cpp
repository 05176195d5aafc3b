#include "udw/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "udw/errors.hpp"
#include "udw/numerics.hpp"

namespace udw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

// Lifts a 2x2 operator on the accelerated detector to the bipartite space.
ComplexMatrix lift_to_r(const ComplexMatrix& m) {
  return kron(ComplexMatrix::identity(2), m);
}

}  // namespace

void validate_theta(double theta) {
  if (!(theta >= 0.0 && theta <= kHalfPi)) {
    throw std::domain_error("theta must lie in [0, pi/2], got " +
                            std::to_string(theta));
  }
}

void validate_channel(const ChannelParams& cp) {
  if (!(cp.q >= 0.0 && cp.q <= 1.0)) {
    throw std::domain_error("q must lie in [0, 1], got " +
                            std::to_string(cp.q));
  }
  if (!(cp.nu2 >= 0.0)) {
    throw std::domain_error("nu2 must be nonnegative, got " +
                            std::to_string(cp.nu2));
  }
  if (cp.nu2 >= 1.0) {
    throw std::domain_error(
        "nu2 must be below 1 for the perturbative channel, got " +
        std::to_string(cp.nu2));
  }
  if (cp.q == 1.0 && cp.nu2 == 0.0) {
    throw std::domain_error(
        "(q, nu2) = (1, 0) is degenerate: the output normalization vanishes");
  }
}

ComplexMatrix initial_state(const InitialStateParams& p) {
  validate_theta(p.theta);
  const double s = std::sin(p.theta);
  const double c = std::cos(p.theta);
  // |Psi> = s|01> + c|10> in basis order |00>, |01>, |10>, |11>.
  ComplexMatrix rho(4);
  rho(1, 1) = s * s;
  rho(1, 2) = s * c;
  rho(2, 1) = s * c;
  rho(2, 2) = c * c;
  return rho;
}

double acceleration_to_q(double omega, double accel) {
  if (!(omega > 0.0)) {
    throw std::domain_error("omega must be positive, got " +
                            std::to_string(omega));
  }
  if (!(accel >= 0.0)) {
    throw std::domain_error("acceleration must be nonnegative, got " +
                            std::to_string(accel));
  }
  if (accel == 0.0) return 0.0;  // limit convention
  return std::exp(-2.0 * kPi * omega / accel);
}

EffectiveCoupling effective_coupling(const PhysicalParams& p) {
  if (!(p.epsilon >= 0.0)) {
    throw std::domain_error("epsilon must be nonnegative");
  }
  if (!(p.omega > 0.0)) {
    throw std::domain_error("omega must be positive");
  }
  if (!(p.delta > 0.0)) {
    throw std::domain_error("delta must be positive");
  }
  if (!(p.kappa >= 0.0)) {
    throw std::domain_error("kappa must be nonnegative");
  }
  const double nu2 = p.epsilon * p.epsilon * p.omega * p.delta /
                     (2.0 * kPi) *
                     std::exp(-p.omega * p.omega * p.kappa * p.kappa);
  if (nu2 >= 1.0) {
    throw std::domain_error(
        "effective coupling nu2 = " + std::to_string(nu2) +
        " breaks the perturbative expansion (requires nu2 < 1)");
  }
  EffectiveCoupling out;
  out.nu2 = nu2;
  out.validity_warning =
      nu2 >= kNu2WarnThreshold || p.omega * p.delta <= kOmegaDeltaWarnThreshold;
  return out;
}

FinalStateParams final_state_params(double theta, const ChannelParams& cp) {
  validate_theta(theta);
  validate_channel(cp);
  const double s2 = std::sin(theta) * std::sin(theta);
  const double c2 = std::cos(theta) * std::cos(theta);
  const double denom = (1.0 - cp.q) + cp.nu2 * (s2 + cp.q * c2);
  if (!(denom > 0.0)) {
    // Unreachable once validate_channel passed; kept as an internal check.
    throw std::logic_error("final_state_params: normalization D <= 0");
  }
  FinalStateParams out;
  out.alpha = (1.0 - cp.q) / (2.0 * denom);
  out.beta = cp.nu2 * cp.q * c2 / denom;
  out.gamma = cp.nu2 * s2 / denom;
  out.theta = theta;
  out.denom = denom;
  return out;
}

ComplexMatrix final_state_closed_form(double theta, const ChannelParams& cp) {
  const FinalStateParams fp = final_state_params(theta, cp);
  const double s2 = std::sin(theta) * std::sin(theta);
  const double c2 = std::cos(theta) * std::cos(theta);
  const double off = fp.alpha * std::sin(2.0 * theta);
  ComplexMatrix rho(4);
  rho(0, 0) = fp.gamma;
  rho(1, 1) = 2.0 * fp.alpha * s2;
  rho(2, 2) = 2.0 * fp.alpha * c2;
  rho(3, 3) = fp.beta;
  rho(1, 2) = off;
  rho(2, 1) = off;
  return rho;
}

std::array<ComplexMatrix, 3> kraus_operators(const ChannelParams& cp) {
  validate_channel(cp);
  const double nu = std::sqrt(cp.nu2);
  ComplexMatrix m1(2);
  m1(0, 0) = std::sqrt(1.0 - cp.q);
  m1(1, 1) = std::sqrt(1.0 - cp.q);
  ComplexMatrix m2(2);
  m2(1, 0) = nu * std::sqrt(cp.q);
  ComplexMatrix m3(2);
  m3(0, 1) = nu;
  return {m1, m2, m3};
}

ComplexMatrix apply_channel(const ComplexMatrix& rho,
                            const ChannelParams& cp) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("apply_channel: expected a 4x4 state");
  }
  validate_density_matrix(rho);
  ComplexMatrix acc(4);
  for (const ComplexMatrix& m : kraus_operators(cp)) {
    const ComplexMatrix k = lift_to_r(m);
    acc = acc + k * rho * adjoint(k);
  }
  const double tr = std::real(trace(acc));
  if (!(tr > 0.0)) {
    throw DegenerateChannelError(
        "channel output has zero trace and cannot be renormalized");
  }
  return (1.0 / tr) * acc;
}

}  // namespace udw
