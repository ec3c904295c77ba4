#pragma once

#include <span>

#include "qchan/matrix.hpp"

namespace qchan {

// All entropies are in bits (base-2 logarithms), so binary_entropy(0.5) = 1
// and von_neumann_entropy(diag(1/2, 1/2)) = 1.

// H(x) = -x log2 x - (1-x) log2(1-x). Inputs within 1e-12 of [0, 1] are
// clamped; anything further out raises DomainError.
double binary_entropy(double x);

// Shannon entropy of a probability vector. Entries in [-1e-10, 0) clamp to
// zero; larger negatives raise DomainError. The vector is not renormalized.
double shannon_entropy_bits(std::span<const double> probabilities);

// S(rho) = -Tr(rho log2 rho) for a density matrix. Raises NotDensityMatrix
// naming the violated check (hermiticity, trace, or positivity).
double von_neumann_entropy(const ComplexMatrix& rho);

}  // namespace qchan
