#include "udw/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "udw/errors.hpp"
#include "udw/numerics.hpp"

namespace udw {

namespace {

double objective_on_simplex(const ComplexMatrix& rho,
                            const std::vector<double>& d) {
  ComplexMatrix diff = rho;
  for (int i = 0; i < rho.dim(); ++i) diff(i, i) -= d[i];
  return trace_norm_hermitian(diff);
}

double clamped_sqrt(double x) { return std::sqrt(std::max(x, 0.0)); }

// Eigenvalues of a unit-trace state below this are rounding residue of an
// exact zero; taking their square root would inject sqrt(eps)-size noise.
constexpr double kEigenvalueClampFloor = 1e-15;

void require_dim4(const ComplexMatrix& rho, const char* who) {
  if (rho.dim() != 4) {
    throw std::invalid_argument(std::string(who) + ": expected a 4x4 state");
  }
}

}  // namespace

bool is_x_structured(const ComplexMatrix& rho, double tol) {
  const int n = rho.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && i + j != n - 1 && std::abs(rho(i, j)) > tol) return false;
  return true;
}

double l1_coherence(const ComplexMatrix& rho) {
  validate_density_matrix(rho);
  double acc = 0.0;
  for (int i = 0; i < rho.dim(); ++i)
    for (int j = 0; j < rho.dim(); ++j)
      if (i != j) acc += std::abs(rho(i, j));
  return acc;
}

double l1_coherence_closed(double theta, const ChannelParams& cp) {
  const FinalStateParams fp = final_state_params(theta, cp);
  return 2.0 * fp.alpha * std::sin(2.0 * theta);
}

double relative_entropy_coherence(const ComplexMatrix& rho) {
  const double dephased = von_neumann_entropy(diagonal_part(rho));
  const double full = von_neumann_entropy(rho);
  return std::max(dephased - full, 0.0);
}

double trace_norm_coherence_xstate(const ComplexMatrix& rho) {
  require_dim4(rho, "trace_norm_coherence_xstate");
  validate_density_matrix(rho);
  if (!is_x_structured(rho)) {
    throw StructureError(
        "state is not X-structured; use trace_norm_coherence_numeric");
  }
  return trace_norm_hermitian(rho - diagonal_part(rho));
}

double trace_norm_coherence_numeric(const ComplexMatrix& rho, double tol) {
  validate_density_matrix(rho);
  if (!(tol > 0.0)) {
    throw std::domain_error("trace_norm_coherence_numeric: tol must be > 0");
  }
  const int n = rho.dim();

  // Starting points: the simplex vertices, the center, the (clamped)
  // diagonal of rho, and two blends of those.
  std::vector<std::vector<double>> starts;
  for (int i = 0; i < n; ++i) {
    std::vector<double> vertex(static_cast<std::size_t>(n), 0.0);
    vertex[static_cast<std::size_t>(i)] = 1.0;
    starts.push_back(vertex);
  }
  starts.emplace_back(static_cast<std::size_t>(n), 1.0 / n);
  std::vector<double> diag(static_cast<std::size_t>(n), 0.0);
  double sum = 0.0;
  int argmax = 0;
  for (int i = 0; i < n; ++i) {
    diag[static_cast<std::size_t>(i)] = std::max(0.0, std::real(rho(i, i)));
    sum += diag[static_cast<std::size_t>(i)];
    if (diag[static_cast<std::size_t>(i)] >
        diag[static_cast<std::size_t>(argmax)])
      argmax = i;
  }
  if (sum > 0.0)
    for (double& x : diag) x /= sum;
  starts.push_back(diag);
  std::vector<double> blend_center(static_cast<std::size_t>(n));
  std::vector<double> blend_vertex(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    blend_center[static_cast<std::size_t>(i)] =
        0.5 * (diag[static_cast<std::size_t>(i)] + 1.0 / n);
    blend_vertex[static_cast<std::size_t>(i)] =
        0.5 * diag[static_cast<std::size_t>(i)] + (i == argmax ? 0.5 : 0.0);
  }
  starts.push_back(blend_center);
  starts.push_back(blend_vertex);

  constexpr int kMaxSweeps = 64;
  constexpr int kGoldenIters = 52;
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;

  double best = std::numeric_limits<double>::infinity();
  bool any_converged = false;
  for (std::vector<double> d : starts) {
    double current = objective_on_simplex(rho, d);
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
      const double before = current;
      // Mass transfers along e_i - e_j keep the iterate on the simplex; the
      // objective is convex along every such segment.
      for (int i = 0; i < n - 1; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const std::size_t si = static_cast<std::size_t>(i);
          const std::size_t sj = static_cast<std::size_t>(j);
          double a = -d[si];
          double b = d[sj];
          if (!(b - a > 0.0)) continue;
          const auto line = [&](double t) {
            std::vector<double> moved = d;
            moved[si] += t;
            moved[sj] -= t;
            return objective_on_simplex(rho, moved);
          };
          double x1 = b - invphi * (b - a);
          double x2 = a + invphi * (b - a);
          double f1 = line(x1);
          double f2 = line(x2);
          for (int it = 0; it < kGoldenIters; ++it) {
            if (f1 <= f2) {
              b = x2;
              x2 = x1;
              f2 = f1;
              x1 = b - invphi * (b - a);
              f1 = line(x1);
            } else {
              a = x1;
              x1 = x2;
              f1 = f2;
              x2 = a + invphi * (b - a);
              f2 = line(x2);
            }
          }
          const double t = 0.5 * (a + b);
          const double ft = line(t);
          if (ft < current) {
            d[si] = std::max(d[si] + t, 0.0);
            d[sj] = std::max(d[sj] - t, 0.0);
            current = ft;
          }
        }
      }
      if (before - current < tol / 10.0) converged = true;
    }
    if (converged) any_converged = true;
    best = std::min(best, current);
  }
  if (!any_converged) {
    throw ConvergenceError("trace-norm minimizer did not converge", best);
  }
  return best;
}

double concurrence_xstate(const ComplexMatrix& rho) {
  require_dim4(rho, "concurrence_xstate");
  validate_density_matrix(rho);
  if (!is_x_structured(rho)) {
    throw StructureError("state is not X-structured; use concurrence_general");
  }
  const double c1 = std::abs(rho(0, 3)) -
                    clamped_sqrt(std::real(rho(1, 1)) * std::real(rho(2, 2)));
  const double c2 = std::abs(rho(1, 2)) -
                    clamped_sqrt(std::real(rho(0, 0)) * std::real(rho(3, 3)));
  return std::clamp(2.0 * std::max({0.0, c1, c2}), 0.0, 1.0);
}

double concurrence_general(const ComplexMatrix& rho) {
  require_dim4(rho, "concurrence_general");
  validate_density_matrix(rho);

  ComplexMatrix y(2);  // antisymmetric flip
  y(0, 1) = 1.0;
  y(1, 0) = -1.0;
  const ComplexMatrix flip = kron(y, y);

  // sqrt(rho) from the eigensystem; eigenvalues at rounding level are
  // clamped to zero so the square root does not amplify their noise.
  const HermitianEigensystem es = hermitian_eigensystem(rho);
  ComplexMatrix root(4);
  for (int k = 0; k < 4; ++k) {
    const double lambda = es.eigenvalues[static_cast<std::size_t>(k)];
    if (lambda < kEigenvalueClampFloor) continue;
    const double w = std::sqrt(lambda);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        root(r, c) += w * es.vectors(r, k) * std::conj(es.vectors(c, k));
  }

  // With N = sqrt(rho) (Y x Y) conj(sqrt(rho)), N N^dag is similar to
  // rho (Y x Y) conj(rho) (Y x Y); the singular values of N are therefore
  // the square roots of that product's eigenvalues, computed here without
  // the precision loss of forming the product itself.
  const ComplexMatrix n = root * flip * conjugate(root);
  const std::vector<double> sigma = singular_values(n);
  double c = sigma[0];
  for (std::size_t i = 1; i < sigma.size(); ++i) c -= sigma[i];
  return std::clamp(c, 0.0, 1.0);
}

MeasureReport measure_all(const ComplexMatrix& rho) {
  require_dim4(rho, "measure_all");
  validate_density_matrix(rho);
  MeasureReport report{};
  report.c_l1 = l1_coherence(rho);
  report.c_re = relative_entropy_coherence(rho);
  if (is_x_structured(rho)) {
    report.c_tr = trace_norm_coherence_xstate(rho);
    report.concurrence = concurrence_xstate(rho);
  } else {
    report.c_tr = trace_norm_coherence_numeric(rho, kDefaultTraceNormTol);
    report.concurrence = concurrence_general(rho);
  }
  return report;
}

}  // namespace udw
