#pragma once

#include <vector>

#include "udw/errors.hpp"
#include "udw/matrix.hpp"

namespace udw {

// Tolerances shared by validation and the eigensolver, in the order they are
// usually hit: Hermiticity and trace checks at 1e-12, positivity slack at
// 1e-10, Jacobi off-diagonal convergence at 1e-14.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kJacobiOffDiagTol = 1e-14;

// Real eigenvalues of a Hermitian matrix, sorted descending.
struct HermitianSpectrum {
  std::vector<double> eigenvalues;
};

// Eigenvalues (descending) with the matching orthonormal eigenvector columns.
struct HermitianEigensystem {
  std::vector<double> eigenvalues;
  ComplexMatrix vectors;
};

/// Diagonalizes a Hermitian 2x2 or 4x4 matrix by cyclic complex Jacobi
/// rotations, sweeping until the off-diagonal Frobenius mass drops below
/// kJacobiOffDiagTol. Throws std::invalid_argument naming the offending
/// entry pair when the input is not Hermitian within kHermitianTol.
HermitianSpectrum hermitian_eigenvalues(const ComplexMatrix& m);
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m);

// Singular values in descending order, by one-sided Jacobi orthogonalization
// of the columns. Works on arbitrary (not necessarily Hermitian) input and
// computes each sigma to absolute accuracy without squaring the matrix.
std::vector<double> singular_values(const ComplexMatrix& m);

// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm_hermitian(const ComplexMatrix& m);

// -sum lambda_i log2 lambda_i in bits, with 0 log 0 = 0 and eigenvalues in
// [-kPsdTol, 0) clamped to zero before the log.
double von_neumann_entropy(const ComplexMatrix& rho);

// Which detector to keep when tracing a 4x4 bipartite state down to 2x2.
// Basis order is |00>, |01>, |10>, |11> with A the slow index.
enum class Subsystem { A, R };
ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep);

// Throws InvalidDensityMatrixError unless rho is Hermitian, unit trace and
// positive semidefinite within the module tolerances.
void validate_density_matrix(const ComplexMatrix& rho);

}  // namespace udw
