#include "udw/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace udw {

namespace {

constexpr int kMaxJacobiSweeps = 64;

double off_diagonal_mass(const ComplexMatrix& m) {
  double acc = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (i != j) acc += std::norm(m(i, j));
  return std::sqrt(acc);
}

void require_hermitian(const ComplexMatrix& m) {
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = i; j < m.dim(); ++j) {
      const double defect = std::abs(m(i, j) - std::conj(m(j, i)));
      if (defect > kHermitianTol) {
        std::ostringstream msg;
        msg << "matrix is not Hermitian: |M(" << i << "," << j
            << ") - conj(M(" << j << "," << i << "))| = " << defect;
        throw std::invalid_argument(msg.str());
      }
    }
  }
}

// One complex Jacobi rotation zeroing m(p, q). The unitary is the diagonal
// phase change that makes m(p, q) real followed by the real Givens rotation
// with tan(2 theta) = 2|m(p,q)| / (m(p,p) - m(q,q)); it is accumulated into
// the eigenvector columns of v.
void jacobi_rotate(ComplexMatrix& m, ComplexMatrix& v, int p, int q) {
  const Complex mpq = m(p, q);
  const double r = std::abs(mpq);
  if (r == 0.0) return;
  const Complex phase = mpq / r;
  const double mpp = std::real(m(p, p));
  const double mqq = std::real(m(q, q));
  const double theta = 0.5 * std::atan2(2.0 * r, mpp - mqq);
  const double c = std::cos(theta);
  const double s = std::sin(theta);

  const Complex upp = c;
  const Complex upq = -s;
  const Complex uqp = std::conj(phase) * s;
  const Complex uqq = std::conj(phase) * c;

  const int n = m.dim();
  for (int k = 0; k < n; ++k) {  // M <- M U
    const Complex mkp = m(k, p);
    const Complex mkq = m(k, q);
    m(k, p) = mkp * upp + mkq * uqp;
    m(k, q) = mkp * upq + mkq * uqq;
  }
  for (int k = 0; k < n; ++k) {  // M <- U^dag M
    const Complex mpk = m(p, k);
    const Complex mqk = m(q, k);
    m(p, k) = std::conj(upp) * mpk + std::conj(uqp) * mqk;
    m(q, k) = std::conj(upq) * mpk + std::conj(uqq) * mqk;
  }
  m(p, q) = 0.0;  // zeroed by construction; discard roundoff residue
  m(q, p) = 0.0;
  m(p, p) = std::real(m(p, p));
  m(q, q) = std::real(m(q, q));

  for (int k = 0; k < n; ++k) {  // V <- V U
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * upp + vkq * uqp;
    v(k, q) = vkp * upq + vkq * uqq;
  }
}

}  // namespace

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m) {
  require_hermitian(m);
  const int n = m.dim();
  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::identity(n);

  int sweep = 0;
  for (; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_mass(a) < kJacobiOffDiagTol) break;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }
  const double residue = off_diagonal_mass(a);
  if (residue >= kJacobiOffDiagTol) {
    throw ConvergenceError("jacobi eigensolver did not converge", residue);
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&a](int lhs, int rhs) {
    return std::real(a(lhs, lhs)) > std::real(a(rhs, rhs));
  });

  HermitianEigensystem out{std::vector<double>(), ComplexMatrix(n)};
  out.eigenvalues.reserve(static_cast<std::size_t>(n));
  for (int col = 0; col < n; ++col) {
    out.eigenvalues.push_back(std::real(a(order[col], order[col])));
    for (int row = 0; row < n; ++row) out.vectors(row, col) = v(row, order[col]);
  }
  return out;
}

HermitianSpectrum hermitian_eigenvalues(const ComplexMatrix& m) {
  return HermitianSpectrum{hermitian_eigensystem(m).eigenvalues};
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  const int n = m.dim();
  ComplexMatrix b = m;

  // One-sided Jacobi: rotate column pairs until all are orthogonal. The
  // rotation diagonalizing the 2x2 Gram block is the same unitary the
  // eigensolver uses.
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        Complex cross = 0.0;
        double npp = 0.0;
        double nqq = 0.0;
        for (int k = 0; k < n; ++k) {
          cross += std::conj(b(k, p)) * b(k, q);
          npp += std::norm(b(k, p));
          nqq += std::norm(b(k, q));
        }
        const double r = std::abs(cross);
        if (r <= kJacobiOffDiagTol * std::sqrt(npp * nqq) || r == 0.0) {
          continue;
        }
        rotated = true;
        const Complex phase = cross / r;
        const double theta = 0.5 * std::atan2(2.0 * r, npp - nqq);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const Complex upp = c;
        const Complex upq = -s;
        const Complex uqp = std::conj(phase) * s;
        const Complex uqq = std::conj(phase) * c;
        for (int k = 0; k < n; ++k) {
          const Complex bkp = b(k, p);
          const Complex bkq = b(k, q);
          b(k, p) = bkp * upp + bkq * uqp;
          b(k, q) = bkp * upq + bkq * uqq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigma;
  sigma.reserve(static_cast<std::size_t>(n));
  for (int col = 0; col < n; ++col) {
    double norm_sq = 0.0;
    for (int k = 0; k < n; ++k) norm_sq += std::norm(b(k, col));
    sigma.push_back(std::sqrt(norm_sq));
  }
  std::sort(sigma.begin(), sigma.end(), std::greater<double>());
  return sigma;
}

double trace_norm_hermitian(const ComplexMatrix& m) {
  double acc = 0.0;
  for (double lambda : hermitian_eigenvalues(m).eigenvalues)
    acc += std::abs(lambda);
  return acc;
}

void validate_density_matrix(const ComplexMatrix& rho) {
  if (!is_hermitian(rho, kHermitianTol)) {
    throw InvalidDensityMatrixError("density matrix is not Hermitian");
  }
  const double tr = std::real(trace(rho));
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw InvalidDensityMatrixError("density matrix trace is not 1: " +
                                    std::to_string(tr));
  }
  for (double lambda : hermitian_eigenvalues(rho).eigenvalues) {
    if (lambda < -kPsdTol) {
      throw InvalidDensityMatrixError(
          "density matrix has a negative eigenvalue: " +
          std::to_string(lambda));
    }
  }
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  validate_density_matrix(rho);
  double acc = 0.0;
  for (double lambda : hermitian_eigenvalues(rho).eigenvalues) {
    if (lambda <= 0.0) continue;  // clamped: 0 log 0 = 0
    acc -= lambda * std::log2(lambda);
  }
  return std::max(acc, 0.0);
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("partial_trace: expected a 4x4 state");
  }
  validate_density_matrix(rho);
  ComplexMatrix out(2);
  if (keep == Subsystem::A) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        out(i, j) = rho(2 * i + 0, 2 * j + 0) + rho(2 * i + 1, 2 * j + 1);
  } else {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        out(i, j) = rho(0 + i, 0 + j) + rho(2 + i, 2 + j);
  }
  return out;
}

}  // namespace udw
