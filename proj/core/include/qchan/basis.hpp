#pragma once

#include <optional>
#include <utility>

#include "qchan/matrix.hpp"

namespace qchan {

struct BlochAngles {
    double theta;  // [0, pi]
    double phi;    // [0, 2*pi)
};

// An ordered orthonormal pair of qubit state vectors, i.e. a measurement
// basis. Carries its Bloch angles when constructed parametrically.
class QubitBasis {
public:
    // {(cos(theta/2), e^{i phi} sin(theta/2)), (-e^{-i phi} sin(theta/2), cos(theta/2))}.
    static QubitBasis from_bloch(double theta, double phi);
    // Validates normalization and orthogonality at 1e-10.
    static QubitBasis from_vectors(const Vec2& first, const Vec2& second);

    static QubitBasis computational();  // {|0>, |1>}
    static QubitBasis plus_minus();     // {(|0>+|1>)/sqrt2, (|0>-|1>)/sqrt2}

    const Vec2& first() const noexcept { return first_; }
    const Vec2& second() const noexcept { return second_; }
    const Vec2& vector(int index) const { return index == 0 ? first_ : second_; }
    const std::optional<BlochAngles>& bloch() const noexcept { return bloch_; }

private:
    QubitBasis(Vec2 first, Vec2 second, std::optional<BlochAngles> bloch)
        : first_(first), second_(second), bloch_(bloch) {}

    Vec2 first_;
    Vec2 second_;
    std::optional<BlochAngles> bloch_;
};

// Extremal squared overlaps between two bases. For valid qubit bases
// c_max + c_min = 1 and c_max >= 1/2.
struct BasisOverlap {
    double c_max;
    double c_min;
    std::pair<int, int> argmax;  // (vector index in b1, vector index in b2)
};

BasisOverlap overlap(const QubitBasis& b1, const QubitBasis& b2);

}  // namespace qchan
