#include "qchan/coherence.hpp"

#include <cmath>
#include <string>

#include "qchan/entropy.hpp"

namespace qchan {

namespace {

double clamp_tiny_negative(double value, const char* what) {
    if (value < -tol::structural) {
        throw Error(std::string(what) + ": negative value " + std::to_string(value) +
                    " beyond round-off tolerance");
    }
    return std::max(0.0, value);
}

}  // namespace

CoherenceValue rel_entropy_coherence(const KrausChannel& channel, const QubitBasis& basis) {
    const ChoiState state = choi(channel, basis);
    const auto diag = state.diagonal();
    const double diag_entropy = shannon_entropy_bits(diag);
    const double state_entropy = von_neumann_entropy(state.matrix());
    const double value = clamp_tiny_negative(diag_entropy - state_entropy, "rel_entropy_coherence");
    return CoherenceValue{Measure::RelativeEntropy, value, basis, diag_entropy, state_entropy};
}

CoherenceValue l1_coherence(const KrausChannel& channel, const QubitBasis& basis) {
    const ChoiState state = choi(channel, basis);
    double sum = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) sum += std::abs(state.matrix().at(i, j));
    return CoherenceValue{Measure::L1Norm, sum, basis, std::nullopt, std::nullopt};
}

double unitary_l1_closed_form(const KrausChannel& channel, const QubitBasis& basis) {
    if (!channel.unitary()) {
        throw NotUnitaryChannel("unitary_l1_closed_form: channel is not unitary");
    }
    const ComplexMatrix& m = channel.operators().front();
    const Vec2 m0 = column(m, 0);
    // cos(alpha/2) = |<x|M|0>|, clipped against 1+epsilon round-off.
    const double amplitude = std::min(1.0, std::abs(inner(basis.first(), m0)));
    const double alpha = 2.0 * std::acos(amplitude);
    return 2.0 * std::sin(alpha) + 1.0;
}

}  // namespace qchan
