#include "renyi/hermitian.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "renyi/errors.hpp"

namespace renyi {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kHermitianTolerance = 1e-12;

double off_diagonal_norm2(const ComplexMatrix& a) {
    double sum = 0.0;
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            if (i != j) sum += std::norm(a(i, j));
    return sum;
}

// Annihilates a(p,q) with V = D R, where D rephases column q so the pivot is
// real and R is the real Jacobi rotation of the resulting 2 × 2 block.
void rotate(ComplexMatrix& a, int p, int q) {
    const Complex apq = a(p, q);
    const double magnitude = std::abs(apq);
    const Complex phase = apq / magnitude;
    const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * magnitude);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const Complex conj_phase = std::conj(phase);

    const int dim = a.rows;
    for (int k = 0; k < dim; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * c - akq * (s * conj_phase);
        a(k, q) = akp * s + akq * (c * conj_phase);
    }
    for (int k = 0; k < dim; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk - (s * phase) * aqk;
        a(q, k) = s * apk + (c * phase) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace

double ComplexMatrix::max_abs() const {
    double out = 0.0;
    for (const auto& z : data) out = std::max(out, std::abs(z));
    return out;
}

ComplexMatrix gram(const ComplexMatrix& m) {
    ComplexMatrix g(m.rows, m.rows);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = i; j < m.rows; ++j) {
            Complex acc = 0.0;
            for (int k = 0; k < m.cols; ++k) acc += m(i, k) * std::conj(m(j, k));
            g(i, j) = acc;
            g(j, i) = std::conj(acc);
        }
        g(i, i) = g(i, i).real();
    }
    return g;
}

std::vector<double> hermitian_eigenvalues(ComplexMatrix a) {
    if (a.rows != a.cols) throw DomainError(fmt::format("hermitian_eigenvalues: matrix is {}x{}", a.rows, a.cols));
    const int dim = a.rows;
    const double scale = std::max(1.0, a.max_abs());
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j)
            if (std::abs(a(i, j) - std::conj(a(j, i))) > kHermitianTolerance * scale)
                throw DomainError(fmt::format("hermitian_eigenvalues: not Hermitian at ({}, {})", i, j));

    double total = 0.0;
    for (const auto& z : a.data) total += std::norm(z);
    const double eps2 = std::numeric_limits<double>::epsilon() * std::numeric_limits<double>::epsilon();

    int sweep = 0;
    while (off_diagonal_norm2(a) > eps2 * total) {
        if (++sweep > kMaxSweeps) throw NumericError("hermitian_eigenvalues: Jacobi sweeps did not converge");
        for (int p = 0; p < dim - 1; ++p)
            for (int q = p + 1; q < dim; ++q)
                if (std::abs(a(p, q)) > 0.0) rotate(a, p, q);
    }

    std::vector<double> eig(dim);
    for (int i = 0; i < dim; ++i) eig[i] = a(i, i).real();
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

}  // namespace renyi
