#include "qchan/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qchan {

namespace {

void require_dim(std::size_t dim) {
    if (dim != 2 && dim != 4) {
        throw DimensionMismatch("matrix dimension must be 2 or 4, got " + std::to_string(dim));
    }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch(std::string(op) + ": dimensions " + std::to_string(a.dim()) +
                                " and " + std::to_string(b.dim()) + " differ");
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) {
    require_dim(dim);
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t dim = rows.size();
    require_dim(dim);
    ComplexMatrix m(dim);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != dim) {
            throw DimensionMismatch("from_rows: row " + std::to_string(r) + " has " +
                                    std::to_string(row.size()) + " entries, expected " +
                                    std::to_string(dim));
        }
        std::size_t c = 0;
        for (const Complex& v : row) m.at(r, c++) = v;
        ++r;
    }
    return m;
}

Complex ComplexMatrix::trace() const noexcept {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

double ComplexMatrix::max_abs() const noexcept {
    double m = 0.0;
    for (std::size_t i = 0; i < dim_ * dim_; ++i) m = std::max(m, std::abs(data_[i]));
    return m;
}

double ComplexMatrix::frobenius_norm() const noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < dim_ * dim_; ++i) s += std::norm(data_[i]);
    return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const noexcept {
    for (std::size_t i = 0; i < dim_ * dim_; ++i) {
        if (!std::isfinite(data_[i].real()) || !std::isfinite(data_[i].imag())) return false;
    }
    return true;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix r(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) r.at(i, j) = std::conj(m.at(j, i));
    return r;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "operator+");
    ComplexMatrix r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "operator-");
    ComplexMatrix r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "operator*");
    ComplexMatrix r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < a.dim(); ++k) s += a.at(i, k) * b.at(k, j);
            r.at(i, j) = s;
        }
    }
    return r;
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix& m) {
    ComplexMatrix r(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) r.at(i, j) = scale * m.at(i, j);
    return r;
}

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != 2 || b.dim() != 2) {
        throw DimensionMismatch("kronecker: both factors must be 2x2");
    }
    ComplexMatrix r(4);
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t m = 0; m < 2; ++m)
                for (std::size_t n = 0; n < 2; ++n)
                    r.at(2 * j + m, 2 * k + n) = a.at(j, k) * b.at(m, n);
    return r;
}

double hermiticity_defect(const ComplexMatrix& m) {
    double d = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            d = std::max(d, std::abs(m.at(i, j) - std::conj(m.at(j, i))));
    return d;
}

double unitarity_defect(const ComplexMatrix& m) {
    return (adjoint(m) * m - ComplexMatrix::identity(m.dim())).max_abs();
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
    return m.all_finite() && hermiticity_defect(m) <= tolerance;
}

bool is_unitary(const ComplexMatrix& m, double tolerance) {
    return m.all_finite() && unitarity_defect(m) <= tolerance;
}

bool is_density(const ComplexMatrix& m, double tolerance) {
    if (!is_hermitian(m, tolerance)) return false;
    if (std::abs(m.trace() - Complex(1.0)) > tolerance) return false;
    const Spectrum s = hermitian_eigenvalues(m);
    return s.eigenvalues.back() >= -tolerance;
}

namespace {

// One Jacobi rotation zeroing the (p, q) entry of a Hermitian matrix:
// A <- G^dagger A G with G unitary, identity outside the (p, q) plane.
void jacobi_rotate(ComplexMatrix& a, std::size_t p, std::size_t q) {
    const Complex apq = a.at(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const Complex phase = apq / r;  // e^{i arg(apq)}
    // Annihilation condition r(c^2 - s^2) + s c (a_qq - a_pp) = 0, i.e.
    // t^2 - 2 theta t - 1 = 0; take the smaller-magnitude root.
    const double theta = (a.at(q, q).real() - a.at(p, p).real()) / (2.0 * r);
    const double t = (theta >= 0.0 ? -1.0 : 1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    ComplexMatrix g = ComplexMatrix::identity(a.dim());
    g.at(p, p) = c;
    g.at(p, q) = -s * phase;
    g.at(q, p) = s * std::conj(phase);
    g.at(q, q) = c;
    a = adjoint(g) * a * g;
    // Pin the annihilated pair against round-off drift.
    a.at(p, q) = 0.0;
    a.at(q, p) = 0.0;
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a.at(i, j));
    return std::sqrt(s);
}

}  // namespace

Spectrum hermitian_eigenvalues(const ComplexMatrix& m) {
    if (!m.all_finite()) {
        throw NonHermitianInput("hermitian_eigenvalues: non-finite entries");
    }
    const double defect = hermiticity_defect(m);
    if (defect > tol::structural) {
        throw NonHermitianInput("hermitian_eigenvalues: defect " + std::to_string(defect) +
                                " exceeds tolerance 1e-10");
    }

    std::vector<double> ev;
    if (m.dim() == 2) {
        const double a = m.at(0, 0).real();
        const double d = m.at(1, 1).real();
        const Complex b = 0.5 * (m.at(0, 1) + std::conj(m.at(1, 0)));
        const double mid = 0.5 * (a + d);
        const double rad = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
        ev = {mid + rad, mid - rad};
    } else {
        // Symmetrize away the tolerated defect, then iterate cyclic sweeps.
        ComplexMatrix a(4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                a.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));

        const double scale = std::max(1.0, a.frobenius_norm());
        for (int sweep = 0; sweep < 60 && off_diagonal_norm(a) > 1e-14 * scale; ++sweep) {
            for (std::size_t p = 0; p < 4; ++p)
                for (std::size_t q = p + 1; q < 4; ++q) jacobi_rotate(a, p, q);
        }
        ev = {a.at(0, 0).real(), a.at(1, 1).real(), a.at(2, 2).real(), a.at(3, 3).real()};
    }
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return Spectrum{std::move(ev)};
}

Complex inner(const Vec2& a, const Vec2& b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

double overlap_prob(const Vec2& a, const Vec2& b) {
    return std::norm(inner(a, b));
}

double norm(const Vec2& v) {
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]));
}

Vec2 column(const ComplexMatrix& m, std::size_t col) {
    if (m.dim() != 2) throw DimensionMismatch("column: expected 2x2 matrix");
    return Vec2{m.at(0, col), m.at(1, col)};
}

Complex sandwich(const Vec2& x, const ComplexMatrix& m, const Vec2& y) {
    if (m.dim() != 2) throw DimensionMismatch("sandwich: expected 2x2 matrix");
    const Vec2 my{m.at(0, 0) * y[0] + m.at(0, 1) * y[1], m.at(1, 0) * y[0] + m.at(1, 1) * y[1]};
    return inner(x, my);
}

}  // namespace qchan
