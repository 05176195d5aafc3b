#pragma once

#include <array>
#include <complex>
#include <stdexcept>

namespace udw {

using Complex = std::complex<double>;

// Dense row-major complex matrix fixed to the two sizes this model needs:
// 2x2 single-detector operators and 4x4 bipartite detector states.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int dim) : dim_(dim) {
    if (dim != 2 && dim != 4) {
      throw std::invalid_argument("ComplexMatrix: dim must be 2 or 4");
    }
  }

  static ComplexMatrix identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  int dim() const { return dim_; }

  Complex& operator()(int row, int col) {
    return a_[static_cast<std::size_t>(row * dim_ + col)];
  }
  const Complex& operator()(int row, int col) const {
    return a_[static_cast<std::size_t>(row * dim_ + col)];
  }

 private:
  int dim_;
  std::array<Complex, 16> a_{};  // first dim*dim entries used
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, const ComplexMatrix& a);
ComplexMatrix operator*(double scale, const ComplexMatrix& a);

ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);

// Copy with every off-diagonal entry dropped.
ComplexMatrix diagonal_part(const ComplexMatrix& a);

// Kronecker product of two 2x2 matrices; the first factor is the slow index.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);
bool is_hermitian(const ComplexMatrix& a, double tol);

}  // namespace udw
