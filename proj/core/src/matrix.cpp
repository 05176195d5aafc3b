#include "udw/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace udw {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("matrix dimensions do not match");
  }
}

}  // namespace

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  ComplexMatrix out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  ComplexMatrix out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < n; ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix& a) {
  ComplexMatrix out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out(i, j) = scale * a(i, j);
  return out;
}

ComplexMatrix operator*(double scale, const ComplexMatrix& a) {
  return Complex(scale, 0.0) * a;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out(i, j) = std::conj(a(j, i));
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
  ComplexMatrix out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out(i, j) = std::conj(a(i, j));
  return out;
}

Complex trace(const ComplexMatrix& a) {
  Complex acc = 0.0;
  for (int i = 0; i < a.dim(); ++i) acc += a(i, i);
  return acc;
}

ComplexMatrix diagonal_part(const ComplexMatrix& a) {
  ComplexMatrix out(a.dim());
  for (int i = 0; i < a.dim(); ++i) out(i, i) = a(i, i);
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw std::invalid_argument("kron: both factors must be 2x2");
  }
  ComplexMatrix out(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  double worst = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
  return true;
}

}  // namespace udw
