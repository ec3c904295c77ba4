#pragma once

#include <optional>

#include "qchan/coherence.hpp"

namespace qchan {

// Outcome of evaluating one uncertainty relation on a channel and basis pair.
struct UncertaintyReport {
    Measure measure;
    double sum_coherence;  // C(b1) + C(b2)
    double lower_bound;
    double slack;  // sum_coherence - lower_bound, recorded as-is
    double c_max_used;
    bool saturated;  // slack <= 1e-6
};

// Lower bound for the relative-entropy relation of any channel:
// H2(sqrt(c_max)) - 2 S(J/2) + 2, in bits. Requires c_max in (0, 1].
double rel_entropy_bound(const KrausChannel& channel, double c_max);

// Lower bound for the l1 relation of unitary channels:
// 4 sqrt(c_max (1 - c_max)) + 2. Requires c_max in [0, 1].
double l1_unitary_bound(double c_max);

// Evaluate sum-of-coherences against the matching lower bound. c_override
// replaces the measured overlap c_max when provided. The L1Norm measure is
// restricted to unitary channels (TheoremScopeError otherwise).
UncertaintyReport check_relation(const KrausChannel& channel, const QubitBasis& b1,
                                 const QubitBasis& b2, Measure measure,
                                 std::optional<double> c_override = std::nullopt);

// Sufficient condition for equality in the relative-entropy relation: some
// x in b1, y in b2 satisfy, for both i = 0 and i = 1,
//   sum_m |<x|M_m|i>|^2 + sum_m |<y|M_m|i>|^2
//     = sum_m |<x|M_m|i>|^2 - sum_m |<y|M_m|i>|^2 = 1 - sqrt(c_max)
// within 1e-8.
bool saturation_condition(const KrausChannel& channel, const QubitBasis& b1,
                          const QubitBasis& b2);

// Overlap inequalities for a density matrix A and unit vectors x, z, with
// a = <x|A|x>, b = <z|A|z>, c = |<x|z>|^2. Booleans allow -1e-10 slack.
struct Lemma1Result {
    double a;
    double b;
    double c;
    bool sum_upper;    // a + b <= 1 + sqrt(c)
    bool diff_within;  // |a - b| <= sqrt(1 - c)
    bool sum_lower;    // 1 - sqrt(c) <= a + b  (qubit case)
    bool all() const { return sum_upper && diff_within && sum_lower; }
};
Lemma1Result lemma1_check(const ComplexMatrix& density, const Vec2& x, const Vec2& z);

// sin(alpha) + sin(beta) + 1e-10 >= sin(gamma) for pairwise angles of three
// unit vectors in R^3. Callers derive the angles from actual vectors.
bool lemma2_check(double alpha, double beta, double gamma);

// Pairwise angles (in [0, pi]) of three unit vectors in R^3, in the order
// (a,b), (b,c), (c,a).
struct AngleTriple {
    double ab;
    double bc;
    double ca;
};
AngleTriple pairwise_angles(const std::array<double, 3>& a, const std::array<double, 3>& b,
                            const std::array<double, 3>& c);

// A point of the constraint region over which the diagonal-entropy sum is
// minimized: a_i = <x|Phi(|i-1><i-1|)|x>, b_i = <z|Phi(|i-1><i-1|)|z>.
struct GFeasiblePoint {
    double a1;
    double a2;
    double b1;
    double b2;
    // Within the region for the given c_max: per i, probabilities in [0, 1],
    // 1 - sqrt(c) <= a_i + b_i <= 1 + sqrt(c), |a_i - b_i| <= sqrt(1 - c).
    bool feasible(double c_max, double slack = 1e-12) const;
};

// g(a1, a2, b1, b2) = (H(a1)+H(b1))/2 + (H(a2)+H(b2))/2 + 2, in bits.
double g_function(const GFeasiblePoint& point);

// Grid-search minimum of g over the feasible region. The region factorizes
// over i, and in the (A, B) = (a+b, b-a) coordinates it is symmetric about
// A = 1, so a single (A, B) block over A in [1-sqrt(c), 1], B in
// [0, min(A, sqrt(1-c))] is scanned and doubled. Grid lines include the
// region corners, so the analytic minimizer is always evaluated.
// Requires c_max in [1/2, 1) and grid_step in [1e-4, 1e-2].
double minimize_g_bruteforce(double c_max, double grid_step);

}  // namespace qchan
