#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qchan/errors.hpp"

namespace qchan {

using Complex = std::complex<double>;

// A qubit state vector (or any normalized complex 2-vector).
using Vec2 = std::array<Complex, 2>;

namespace tol {
// Structural checks (Hermitian, unitary, trace, orthonormality).
inline constexpr double structural = 1e-10;
// Derived-quantity comparisons (entropies, coherences, spectra).
inline constexpr double derived = 1e-9;
// Equality detection in uncertainty relations.
inline constexpr double saturation = 1e-6;
// Operators below this Frobenius norm count as zero and are dropped.
inline constexpr double zero_operator = 1e-12;
}  // namespace tol

// Dense square complex matrix of dimension 2 or 4: density matrices, Kraus
// operators and Choi matrices. Row-major, fixed capacity, value semantics.
class ComplexMatrix {
public:
    explicit ComplexMatrix(std::size_t dim);

    static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }
    static ComplexMatrix identity(std::size_t dim);
    // Row-major construction; every row must have `dim` entries.
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t dim() const noexcept { return dim_; }

    Complex& at(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Complex& at(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

    Complex trace() const noexcept;
    double max_abs() const noexcept;
    double frobenius_norm() const noexcept;
    bool all_finite() const noexcept;

    bool operator==(const ComplexMatrix& other) const noexcept = default;

private:
    std::size_t dim_;
    std::array<Complex, 16> data_{};
};

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, const ComplexMatrix& m);

// Tensor product of two 2x2 matrices; row index (j, m) maps to 2*j + m, so
// the result has the block layout kron(a, b)[(j,m),(k,n)] = a[j][k] * b[m][n].
ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

// Max-norm distance from the named structure.
double hermiticity_defect(const ComplexMatrix& m);
double unitarity_defect(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tolerance = tol::structural);
bool is_unitary(const ComplexMatrix& m, double tolerance = tol::structural);
// Hermitian, trace one, and eigenvalues >= -tolerance.
bool is_density(const ComplexMatrix& m, double tolerance = tol::structural);

// Real eigenvalues of a Hermitian matrix, sorted descending.
struct Spectrum {
    std::vector<double> eigenvalues;
};

// Closed form for dim 2, cyclic complex Jacobi rotations for dim 4.
// Throws NonHermitianInput when the max-norm defect exceeds 1e-10.
Spectrum hermitian_eigenvalues(const ComplexMatrix& m);

Complex inner(const Vec2& a, const Vec2& b);        // <a|b>
double overlap_prob(const Vec2& a, const Vec2& b);  // |<a|b>|^2
double norm(const Vec2& v);

// Column of a matrix as a vector, and <x| m |y>.
Vec2 column(const ComplexMatrix& m, std::size_t col);
Complex sandwich(const Vec2& x, const ComplexMatrix& m, const Vec2& y);

}  // namespace qchan
