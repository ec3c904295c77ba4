#pragma once

#include <array>
#include <vector>

#include "qchan/basis.hpp"
#include "qchan/matrix.hpp"

namespace qchan {

// A qubit channel given by 2x2 Kraus operators, certified trace preserving
// (sum of M^dagger M equal to the identity within 1e-10). Near-zero operators
// are dropped during validation; at most 8 operators are accepted.
class KrausChannel {
public:
    static KrausChannel identity();
    static KrausChannel pauli_x();
    // {sqrt(p) I, sqrt(1-p) X}, p in [0, 1].
    static KrausChannel bit_flip(double p);
    // {diag(1, sqrt(1-lambda)), diag(0, sqrt(lambda))}, lambda in [0, 1].
    static KrausChannel phase_damping(double lambda);
    // Planar rotation by alpha: [[cos a, -sin a], [sin a, cos a]].
    static KrausChannel rotation(double alpha);
    // Single-operator channel; throws NotUnitary if u fails the 1e-10 check.
    static KrausChannel from_unitary(const ComplexMatrix& u);

    const std::vector<ComplexMatrix>& operators() const noexcept { return operators_; }
    // True iff the channel has exactly one Kraus operator and it is unitary.
    bool unitary() const noexcept { return unitary_; }

    // Apply the channel: sum_m M rho M^dagger.
    ComplexMatrix apply(const ComplexMatrix& rho) const;

private:
    friend KrausChannel validate_cptp(std::vector<ComplexMatrix> operators);
    KrausChannel(std::vector<ComplexMatrix> operators, bool unitary)
        : operators_(std::move(operators)), unitary_(unitary) {}

    std::vector<ComplexMatrix> operators_;
    bool unitary_;
};

// Certify a Kraus operator list as a channel. Throws EmptyOperatorList,
// DimensionMismatch (non-2x2 operator, or more than 8 operators), or
// NotTracePreserving (message carries the residual norm).
KrausChannel validate_cptp(std::vector<ComplexMatrix> operators);

// Convex mixture of two channels with weight t on `a`, realized as the
// weighted Kraus union {sqrt(t) M_m} U {sqrt(1-t) N_n}.
KrausChannel mix(const KrausChannel& a, const KrausChannel& b, double t);

// The normalized Choi matrix J/2 of a channel, expressed relative to a chosen
// output measurement basis: only the output factor is rotated, the input
// factor stays computational. Entry ((j,m),(k,n)) = <b_m| Phi(|j><k|) |b_n> / 2.
class ChoiState {
public:
    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    const QubitBasis& output_basis() const noexcept { return output_basis_; }
    const KrausChannel& source() const noexcept { return source_; }

    // Real diagonal in the product reference basis {|j> (x) |b_m>}.
    std::array<double, 4> diagonal() const;

private:
    friend ChoiState choi(const KrausChannel& channel, const QubitBasis& output_basis);
    ChoiState(ComplexMatrix matrix, QubitBasis output_basis, KrausChannel source)
        : matrix_(std::move(matrix)),
          output_basis_(std::move(output_basis)),
          source_(std::move(source)) {}

    ComplexMatrix matrix_;
    QubitBasis output_basis_;
    KrausChannel source_;
};

// Build the normalized Choi state. The result is validated: Hermitian, PSD
// (min eigenvalue >= -1e-10), unit trace, and output partial trace I/2.
ChoiState choi(const KrausChannel& channel, const QubitBasis& output_basis);

}  // namespace qchan
