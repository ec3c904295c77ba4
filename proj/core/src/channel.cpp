#include "qchan/channel.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qchan {

namespace {

constexpr std::size_t max_kraus_operators = 8;

ComplexMatrix pauli_x_matrix() {
    return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
}

void require_param_range(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw DomainError(std::string(name) + " must lie in [0, 1], got " + std::to_string(value));
    }
}

}  // namespace

KrausChannel validate_cptp(std::vector<ComplexMatrix> operators) {
    if (operators.empty()) {
        throw EmptyOperatorList("validate_cptp: no Kraus operators given");
    }
    if (operators.size() > max_kraus_operators) {
        throw DomainError("validate_cptp: more than 8 Kraus operators (" +
                          std::to_string(operators.size()) + ")");
    }
    std::vector<ComplexMatrix> kept;
    for (const ComplexMatrix& op : operators) {
        if (op.dim() != 2) {
            throw DimensionMismatch("validate_cptp: Kraus operators must be 2x2");
        }
        if (!op.all_finite()) {
            throw DomainError("validate_cptp: Kraus operator has non-finite entries");
        }
        if (op.frobenius_norm() >= tol::zero_operator) kept.push_back(op);
    }
    ComplexMatrix sum(2);
    for (const ComplexMatrix& op : kept) sum = sum + adjoint(op) * op;
    const double residual = (sum - ComplexMatrix::identity(2)).max_abs();
    if (residual > tol::structural) {
        throw NotTracePreserving("validate_cptp: sum of M^dagger M deviates from identity by " +
                                 std::to_string(residual));
    }
    const bool unitary = kept.size() == 1 && is_unitary(kept.front(), tol::structural);
    return KrausChannel(std::move(kept), unitary);
}

KrausChannel KrausChannel::identity() {
    return validate_cptp({ComplexMatrix::identity(2)});
}

KrausChannel KrausChannel::pauli_x() {
    return validate_cptp({pauli_x_matrix()});
}

KrausChannel KrausChannel::bit_flip(double p) {
    require_param_range(p, "bit_flip: p");
    const Complex w0 = std::sqrt(p);
    const Complex w1 = std::sqrt(1.0 - p);
    return validate_cptp({w0 * ComplexMatrix::identity(2), w1 * pauli_x_matrix()});
}

KrausChannel KrausChannel::phase_damping(double lambda) {
    require_param_range(lambda, "phase_damping: lambda");
    const ComplexMatrix e0 = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, std::sqrt(1.0 - lambda)}});
    const ComplexMatrix e1 = ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, std::sqrt(lambda)}});
    return validate_cptp({e0, e1});
}

KrausChannel KrausChannel::rotation(double alpha) {
    if (!std::isfinite(alpha)) throw DomainError("rotation: alpha must be finite");
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    return validate_cptp({ComplexMatrix::from_rows({{c, -s}, {s, c}})});
}

KrausChannel KrausChannel::from_unitary(const ComplexMatrix& u) {
    if (u.dim() != 2) throw DimensionMismatch("from_unitary: expected 2x2 matrix");
    if (!is_unitary(u, tol::structural)) {
        throw NotUnitary("from_unitary: matrix fails the unitarity check at 1e-10 (defect " +
                         std::to_string(unitarity_defect(u)) + ")");
    }
    return validate_cptp({u});
}

ComplexMatrix KrausChannel::apply(const ComplexMatrix& rho) const {
    if (rho.dim() != 2) throw DimensionMismatch("apply: expected 2x2 state");
    ComplexMatrix out(2);
    for (const ComplexMatrix& op : operators_) out = out + op * rho * adjoint(op);
    return out;
}

KrausChannel mix(const KrausChannel& a, const KrausChannel& b, double t) {
    require_param_range(t, "mix: t");
    std::vector<ComplexMatrix> ops;
    for (const ComplexMatrix& op : a.operators()) ops.push_back(Complex(std::sqrt(t)) * op);
    for (const ComplexMatrix& op : b.operators()) ops.push_back(Complex(std::sqrt(1.0 - t)) * op);
    return validate_cptp(std::move(ops));
}

std::array<double, 4> ChoiState::diagonal() const {
    return {matrix_.at(0, 0).real(), matrix_.at(1, 1).real(), matrix_.at(2, 2).real(),
            matrix_.at(3, 3).real()};
}

ChoiState choi(const KrausChannel& channel, const QubitBasis& output_basis) {
    // Phi(|j><k|) = sum_m (column j of M_m)(column k of M_m)^dagger, then the
    // output factor is sandwiched with the measurement-basis vectors.
    ComplexMatrix j_half(4);
    for (std::size_t j = 0; j < 2; ++j) {
        for (std::size_t k = 0; k < 2; ++k) {
            ComplexMatrix block(2);
            for (const ComplexMatrix& op : channel.operators()) {
                const Vec2 cj = column(op, j);
                const Vec2 ck = column(op, k);
                for (std::size_t r = 0; r < 2; ++r)
                    for (std::size_t c = 0; c < 2; ++c)
                        block.at(r, c) = block.at(r, c) + cj[r] * std::conj(ck[c]);
            }
            for (std::size_t m = 0; m < 2; ++m) {
                for (std::size_t n = 0; n < 2; ++n) {
                    const Complex value =
                        sandwich(output_basis.vector(static_cast<int>(m)), block,
                                 output_basis.vector(static_cast<int>(n)));
                    j_half.at(2 * j + m, 2 * k + n) = 0.5 * value;
                }
            }
        }
    }

    if (hermiticity_defect(j_half) > tol::structural) {
        throw Error("choi: state failed the hermiticity check");
    }
    if (std::abs(j_half.trace() - Complex(1.0)) > tol::structural) {
        throw Error("choi: state trace differs from 1");
    }
    const Spectrum spectrum = hermitian_eigenvalues(j_half);
    if (spectrum.eigenvalues.back() < -tol::structural) {
        throw Error("choi: state failed the positivity check");
    }
    // Partial trace over the output factor must be I/2 (trace preservation).
    for (std::size_t j = 0; j < 2; ++j) {
        for (std::size_t k = 0; k < 2; ++k) {
            Complex t = 0.0;
            for (std::size_t m = 0; m < 2; ++m) t += j_half.at(2 * j + m, 2 * k + m);
            const Complex expected = j == k ? 0.5 : 0.0;
            if (std::abs(t - expected) > tol::structural) {
                throw Error("choi: output partial trace differs from I/2");
            }
        }
    }
    return ChoiState(std::move(j_half), output_basis, channel);
}

}  // namespace qchan
