#include "qchan/basis.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qchan {

QubitBasis QubitBasis::from_bloch(double theta, double phi) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
        throw DomainError("from_bloch: theta " + std::to_string(theta) + " outside [0, pi]");
    }
    if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) {
        throw DomainError("from_bloch: phi " + std::to_string(phi) + " outside [0, 2*pi)");
    }
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const Complex phase = std::polar(1.0, phi);
    const Vec2 first{c, phase * s};
    const Vec2 second{-std::conj(phase) * s, c};
    return QubitBasis(first, second, BlochAngles{theta, phi});
}

QubitBasis QubitBasis::from_vectors(const Vec2& first, const Vec2& second) {
    const double n1 = norm(first);
    const double n2 = norm(second);
    if (std::abs(n1 - 1.0) > tol::structural || std::abs(n2 - 1.0) > tol::structural) {
        throw DomainError("from_vectors: vectors not normalized within 1e-10 (norms " +
                          std::to_string(n1) + ", " + std::to_string(n2) + ")");
    }
    const double ortho = std::abs(inner(first, second));
    if (ortho > tol::structural) {
        throw DomainError("from_vectors: vectors not orthogonal within 1e-10 (|<1|2>| = " +
                          std::to_string(ortho) + ")");
    }
    return QubitBasis(first, second, std::nullopt);
}

QubitBasis QubitBasis::computational() {
    return QubitBasis(Vec2{1.0, 0.0}, Vec2{0.0, 1.0}, BlochAngles{0.0, 0.0});
}

QubitBasis QubitBasis::plus_minus() {
    const double r = 1.0 / std::numbers::sqrt2;
    return QubitBasis(Vec2{r, r}, Vec2{r, -r}, std::nullopt);
}

BasisOverlap overlap(const QubitBasis& b1, const QubitBasis& b2) {
    BasisOverlap result{0.0, 2.0, {0, 0}};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double c = overlap_prob(b1.vector(i), b2.vector(j));
            if (c > result.c_max) {
                result.c_max = c;
                result.argmax = {i, j};
            }
            result.c_min = std::min(result.c_min, c);
        }
    }
    return result;
}

}  // namespace qchan
