#pragma once

#include <complex>
#include <vector>

namespace renyi {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
struct ComplexMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Complex> data;

    ComplexMatrix() = default;
    ComplexMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

    Complex& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const Complex& operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

    double max_abs() const;
};

/// M M^† for an r × c matrix M.
ComplexMatrix gram(const ComplexMatrix& m);

/// All eigenvalues of a Hermitian matrix, descending, by cyclic complex
/// Jacobi rotations. Throws DomainError if the input is not square or not
/// Hermitian to 1e-12 (relative to max(1, max-norm)), NumericError if the
/// sweeps stall.
std::vector<double> hermitian_eigenvalues(ComplexMatrix matrix);

}  // namespace renyi
