#include "qchan/entropy.hpp"

#include <cmath>
#include <string>

namespace qchan {

namespace {

// -x log2 x with the 0 log 0 := 0 convention.
double xlog2x(double x) {
    return x > 0.0 ? -x * std::log2(x) : 0.0;
}

}  // namespace

double binary_entropy(double x) {
    constexpr double slack = 1e-12;
    if (x < -slack || x > 1.0 + slack) {
        throw DomainError("binary_entropy: argument " + std::to_string(x) + " outside [0, 1]");
    }
    x = std::min(1.0, std::max(0.0, x));
    return xlog2x(x) + xlog2x(1.0 - x);
}

double shannon_entropy_bits(std::span<const double> probabilities) {
    double h = 0.0;
    for (double p : probabilities) {
        if (p < -tol::structural) {
            throw DomainError("shannon_entropy_bits: negative probability " + std::to_string(p));
        }
        h += xlog2x(p);
    }
    return h;
}

double von_neumann_entropy(const ComplexMatrix& rho) {
    if (!is_hermitian(rho, tol::structural)) {
        throw NotDensityMatrix("von_neumann_entropy: input is not Hermitian within 1e-10");
    }
    const double trace_defect = std::abs(rho.trace() - Complex(1.0));
    if (trace_defect > tol::structural) {
        throw NotDensityMatrix("von_neumann_entropy: trace differs from 1 by " +
                               std::to_string(trace_defect));
    }
    const Spectrum spectrum = hermitian_eigenvalues(rho);
    double s = 0.0;
    for (double lambda : spectrum.eigenvalues) {
        if (lambda < -tol::structural) {
            throw NotDensityMatrix("von_neumann_entropy: negative eigenvalue " +
                                   std::to_string(lambda));
        }
        s += xlog2x(lambda);
    }
    return s;
}

}  // namespace qchan
