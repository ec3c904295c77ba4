#pragma once

#include <optional>

#include "qchan/channel.hpp"

namespace qchan {

enum class Measure {
    RelativeEntropy,  // S(diag(J/2)) - S(J/2), in bits
    L1Norm,           // sum of off-diagonal magnitudes of J/2
};

struct CoherenceValue {
    Measure measure;
    double value;  // >= 0
    QubitBasis basis;
    // RelativeEntropy only: the two entropies whose difference is `value`.
    std::optional<double> diag_entropy;
    std::optional<double> state_entropy;
};

// Coherence of a channel relative to a measurement basis, evaluated on the
// normalized Choi state in the product reference basis.
CoherenceValue rel_entropy_coherence(const KrausChannel& channel, const QubitBasis& basis);
CoherenceValue l1_coherence(const KrausChannel& channel, const QubitBasis& basis);

// For a unitary channel with Kraus operator M the l1 coherence collapses to
// 2 sin(alpha) + 1 with cos^2(alpha/2) = |<x|M|0>|^2, x the first basis
// vector. Throws NotUnitaryChannel for non-unitary channels.
double unitary_l1_closed_form(const KrausChannel& channel, const QubitBasis& basis);

}  // namespace qchan
