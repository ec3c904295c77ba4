#include "qchan/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qchan/entropy.hpp"

namespace qchan {

double rel_entropy_bound(const KrausChannel& channel, double c_max) {
    if (!(c_max > 0.0 && c_max <= 1.0)) {
        throw DomainError("rel_entropy_bound: c_max " + std::to_string(c_max) +
                          " outside (0, 1]");
    }
    // S(J/2) is basis independent; evaluate in the computational basis.
    const double state_entropy = von_neumann_entropy(choi(channel, QubitBasis::computational()).matrix());
    return binary_entropy(std::sqrt(c_max)) - 2.0 * state_entropy + 2.0;
}

double l1_unitary_bound(double c_max) {
    if (!(c_max >= 0.0 && c_max <= 1.0)) {
        throw DomainError("l1_unitary_bound: c_max " + std::to_string(c_max) + " outside [0, 1]");
    }
    return 4.0 * std::sqrt(c_max * (1.0 - c_max)) + 2.0;
}

UncertaintyReport check_relation(const KrausChannel& channel, const QubitBasis& b1,
                                 const QubitBasis& b2, Measure measure,
                                 std::optional<double> c_override) {
    const double c_used = c_override.value_or(overlap(b1, b2).c_max);
    double sum = 0.0;
    double bound = 0.0;
    if (measure == Measure::RelativeEntropy) {
        sum = rel_entropy_coherence(channel, b1).value + rel_entropy_coherence(channel, b2).value;
        bound = rel_entropy_bound(channel, c_used);
    } else {
        if (!channel.unitary()) {
            throw TheoremScopeError("check_relation: the l1 lower bound holds for unitary "
                                    "channels only");
        }
        sum = l1_coherence(channel, b1).value + l1_coherence(channel, b2).value;
        bound = l1_unitary_bound(c_used);
    }
    const double slack = sum - bound;
    return UncertaintyReport{measure, sum, bound, slack, c_used, slack <= tol::saturation};
}

namespace {

// sum_m |<v|M_m|i>|^2, i.e. <v|Phi(|i><i|)|v>.
double transition_weight(const KrausChannel& channel, const Vec2& v, std::size_t i) {
    double w = 0.0;
    for (const ComplexMatrix& op : channel.operators()) w += std::norm(inner(v, column(op, i)));
    return w;
}

}  // namespace

bool saturation_condition(const KrausChannel& channel, const QubitBasis& b1,
                          const QubitBasis& b2) {
    constexpr double eq_tol = 1e-8;
    const double target = 1.0 - std::sqrt(overlap(b1, b2).c_max);
    for (int xi = 0; xi < 2; ++xi) {
        for (int yi = 0; yi < 2; ++yi) {
            bool holds = true;
            for (std::size_t i = 0; i < 2 && holds; ++i) {
                const double a = transition_weight(channel, b1.vector(xi), i);
                const double b = transition_weight(channel, b2.vector(yi), i);
                holds = std::abs(a + b - target) <= eq_tol && std::abs(a - b - target) <= eq_tol;
            }
            if (holds) return true;
        }
    }
    return false;
}

Lemma1Result lemma1_check(const ComplexMatrix& density, const Vec2& x, const Vec2& z) {
    if (density.dim() != 2) throw DimensionMismatch("lemma1_check: density must be 2x2");
    if (!is_density(density, tol::structural)) {
        throw NotDensityMatrix("lemma1_check: A fails the density-matrix checks at 1e-10");
    }
    if (std::abs(norm(x) - 1.0) > tol::structural || std::abs(norm(z) - 1.0) > tol::structural) {
        throw DomainError("lemma1_check: x and z must be normalized within 1e-10");
    }
    const double a = sandwich(x, density, x).real();
    const double b = sandwich(z, density, z).real();
    const double c = std::min(1.0, overlap_prob(x, z));
    const double root_c = std::sqrt(c);
    const double root_1mc = std::sqrt(1.0 - c);
    constexpr double slack = 1e-10;
    return Lemma1Result{
        a,
        b,
        c,
        a + b <= 1.0 + root_c + slack,
        std::abs(a - b) <= root_1mc + slack,
        1.0 - root_c <= a + b + slack,
    };
}

bool lemma2_check(double alpha, double beta, double gamma) {
    return std::sin(alpha) + std::sin(beta) + 1e-10 >= std::sin(gamma);
}

namespace {

double angle_between(const std::array<double, 3>& u, const std::array<double, 3>& v) {
    const double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    const std::array<double, 3> cross{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                      u[0] * v[1] - u[1] * v[0]};
    const double cross_norm =
        std::sqrt(cross[0] * cross[0] + cross[1] * cross[1] + cross[2] * cross[2]);
    return std::atan2(cross_norm, dot);  // in [0, pi]
}

}  // namespace

AngleTriple pairwise_angles(const std::array<double, 3>& a, const std::array<double, 3>& b,
                            const std::array<double, 3>& c) {
    return AngleTriple{angle_between(a, b), angle_between(b, c), angle_between(c, a)};
}

bool GFeasiblePoint::feasible(double c_max, double slack) const {
    const double root_c = std::sqrt(c_max);
    const double root_1mc = std::sqrt(1.0 - c_max);
    const auto pair_ok = [&](double a, double b) {
        return a >= -slack && a <= 1.0 + slack && b >= -slack && b <= 1.0 + slack &&
               a + b >= 1.0 - root_c - slack && a + b <= 1.0 + root_c + slack &&
               std::abs(a - b) <= root_1mc + slack;
    };
    return pair_ok(a1, b1) && pair_ok(a2, b2);
}

double g_function(const GFeasiblePoint& point) {
    return 0.5 * (binary_entropy(point.a1) + binary_entropy(point.b1)) +
           0.5 * (binary_entropy(point.a2) + binary_entropy(point.b2)) + 2.0;
}

double minimize_g_bruteforce(double c_max, double grid_step) {
    if (!(c_max >= 0.5 && c_max < 1.0)) {
        throw DomainError("minimize_g_bruteforce: c_max " + std::to_string(c_max) +
                          " outside [1/2, 1)");
    }
    if (!(grid_step >= 1e-4 && grid_step <= 1e-2)) {
        throw DomainError("minimize_g_bruteforce: grid_step " + std::to_string(grid_step) +
                          " outside [1e-4, 1e-2]");
    }
    const double root_c = std::sqrt(c_max);
    const double root_1mc = std::sqrt(1.0 - c_max);
    const double a_lo = 1.0 - root_c;

    double min_f = 2.0;  // f <= 1 everywhere, so any evaluation lowers this
    const auto visit = [&](double a_sum, double b_diff) {
        const double a = 0.5 * (a_sum - b_diff);
        const double b = 0.5 * (a_sum + b_diff);
        const double f = 0.5 * (binary_entropy(a) + binary_entropy(b));
        min_f = std::min(min_f, f);
    };

    const auto steps_up_to = [grid_step](double span) {
        return static_cast<std::size_t>(std::floor(span / grid_step + 1e-12));
    };

    const std::size_t a_steps = steps_up_to(1.0 - a_lo);
    for (std::size_t i = 0; i <= a_steps + 1; ++i) {
        const double a_sum = std::min(1.0, a_lo + static_cast<double>(i) * grid_step);
        const double b_max = std::min(a_sum, root_1mc);
        const std::size_t b_steps = steps_up_to(b_max);
        for (std::size_t j = 0; j <= b_steps; ++j) {
            visit(a_sum, static_cast<double>(j) * grid_step);
        }
        visit(a_sum, b_max);  // region corner on this grid line
    }
    return 2.0 * min_f + 2.0;
}

}  // namespace qchan
