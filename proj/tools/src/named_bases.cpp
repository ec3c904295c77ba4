#include <cmath>

#include "qchan/cli.hpp"

namespace qchan::cli {

namespace {

// Golden-ratio-flavored basis: with g = (3 - sqrt 5)/2 the two squared
// overlaps against the computational basis are g and 1 - g, and sqrt(g) = 1 - g.
QubitBasis golden_basis() {
    const double g = (3.0 - std::sqrt(5.0)) / 2.0;
    const double lo = std::sqrt(g);
    const double hi = std::sqrt(1.0 - g);
    return QubitBasis::from_vectors(Vec2{hi, lo}, Vec2{-lo, hi});
}

// Complex basis with squared overlaps 9/16 and 7/16 against computational.
QubitBasis yprime_basis() {
    const double r2 = std::sqrt(2.0);
    const double r3 = std::sqrt(3.0);
    const double r5 = std::sqrt(5.0);
    const double r6 = std::sqrt(6.0);
    const Vec2 first{Complex(r3, r6) / 4.0, Complex(r2, r5) / 4.0};
    const Vec2 second{Complex(r2, -r5) / 4.0, Complex(-r3, r6) / 4.0};
    return QubitBasis::from_vectors(first, second);
}

}  // namespace

const std::vector<std::pair<std::string, QubitBasis>>& named_bases() {
    static const std::vector<std::pair<std::string, QubitBasis>> bases = {
        {"computational", QubitBasis::computational()},
        {"plus-minus", QubitBasis::plus_minus()},
        {"example2-golden", golden_basis()},
        {"example3-yprime", yprime_basis()},
    };
    return bases;
}

std::optional<QubitBasis> find_named_basis(std::string_view name) {
    for (const auto& [key, basis] : named_bases()) {
        if (key == name) return basis;
    }
    return std::nullopt;
}

}  // namespace qchan::cli
