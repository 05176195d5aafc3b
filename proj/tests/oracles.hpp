#pragma once

// Test-only oracles and state generators. Expected values are recomputed
// here through routes independent of the library implementation: direct
// formula substitution, known spectra, and literal brute-force sums.

#include <cmath>
#include <complex>
#include <random>

#include "udw/matrix.hpp"

namespace oracle {

// Evolved-family scalars by direct substitution.
struct Family {
  double alpha;
  double beta;
  double gamma;
  double denom;
};

inline Family family_scalars(double theta, double q, double nu2) {
  const double s2 = std::sin(theta) * std::sin(theta);
  const double c2 = std::cos(theta) * std::cos(theta);
  Family f{};
  f.denom = (1.0 - q) + nu2 * (s2 + q * c2);
  f.alpha = (1.0 - q) / (2.0 * f.denom);
  f.beta = nu2 * q * c2 / f.denom;
  f.gamma = nu2 * s2 / f.denom;
  return f;
}

inline double binary_entropy_bits(double p) {
  double acc = 0.0;
  if (p > 0.0) acc -= p * std::log2(p);
  if (1.0 - p > 0.0) acc -= (1.0 - p) * std::log2(1.0 - p);
  return acc;
}

// Entropy of the evolved state from its known spectrum {2 alpha, beta,
// gamma, 0}.
inline double family_entropy_bits(double theta, double q, double nu2) {
  const Family f = family_scalars(theta, q, nu2);
  double acc = 0.0;
  for (double lambda : {2.0 * f.alpha, f.beta, f.gamma}) {
    if (lambda > 0.0) acc -= lambda * std::log2(lambda);
  }
  return acc;
}

// Simplified family concurrence sin(2t) max{0, (1-q) - nu2 sqrt(q)} / D,
// obtained by substituting the closed-form entries into the X-state rule.
inline double family_concurrence(double theta, double q, double nu2) {
  const Family f = family_scalars(theta, q, nu2);
  const double margin = (1.0 - q) - nu2 * std::sqrt(q);
  return std::sin(2.0 * theta) * std::max(0.0, margin) / f.denom;
}

// Exact death acceleration: root of u^2 + nu2*u - 1 in u = sqrt(q).
inline double death_acceleration(double nu2) {
  const double u = (-nu2 + std::sqrt(nu2 * nu2 + 4.0)) / 2.0;
  return u * u;
}

// Literal double loop over off-diagonal magnitudes.
inline double l1_brute(const udw::ComplexMatrix& rho) {
  double acc = 0.0;
  for (int i = 0; i < rho.dim(); ++i)
    for (int j = 0; j < rho.dim(); ++j)
      if (i != j) acc += std::abs(rho(i, j));
  return acc;
}

inline udw::Complex random_unit(std::mt19937& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  return {normal(gen), normal(gen)};
}

inline udw::ComplexMatrix random_hermitian(std::mt19937& gen, int dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  udw::ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    m(i, i) = normal(gen);
    for (int j = i + 1; j < dim; ++j) {
      const udw::Complex z{normal(gen), normal(gen)};
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return m;
}

// G G^dag / tr(G G^dag): Hermitian, unit trace, positive semidefinite.
inline udw::ComplexMatrix random_density(std::mt19937& gen, int dim) {
  udw::ComplexMatrix g(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = random_unit(gen);
  udw::ComplexMatrix rho = g * udw::adjoint(g);
  const double tr = std::real(udw::trace(rho));
  return (1.0 / tr) * rho;
}

// Random X state: probabilities on the diagonal, anti-diagonal coherences
// capped by the 2x2 positivity bounds |z| <= sqrt(p_i p_j).
inline udw::ComplexMatrix random_x_state(std::mt19937& gen) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  double p[4];
  double sum = 0.0;
  for (double& x : p) {
    x = uniform(gen) + 1e-6;
    sum += x;
  }
  for (double& x : p) x /= sum;

  udw::ComplexMatrix rho(4);
  for (int i = 0; i < 4; ++i) rho(i, i) = p[i];
  const double phase1 = 2.0 * 3.14159265358979323846 * uniform(gen);
  const double phase2 = 2.0 * 3.14159265358979323846 * uniform(gen);
  const udw::Complex z1 = 0.95 * uniform(gen) * std::sqrt(p[0] * p[3]) *
                          udw::Complex{std::cos(phase1), std::sin(phase1)};
  const udw::Complex z2 = 0.95 * uniform(gen) * std::sqrt(p[1] * p[2]) *
                          udw::Complex{std::cos(phase2), std::sin(phase2)};
  rho(0, 3) = z1;
  rho(3, 0) = std::conj(z1);
  rho(1, 2) = z2;
  rho(2, 1) = std::conj(z2);
  return rho;
}

}  // namespace oracle
