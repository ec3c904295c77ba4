#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qchan/bounds.hpp"

namespace qchan {

enum class Target {
    Theorem1,  // relative-entropy relation, random channels of 1-4 Kraus operators
    Theorem2,  // l1 relation, random unitary channels
    Lemma1,    // overlap inequalities, random rank-1/2 densities
    Lemma2,    // sine inequality, random unit-vector triples
    GMinimum,  // grid minimum of g against its closed form
};

std::string target_name(Target target);

// Deterministic per-trial random stream. Doubles and gaussians are derived
// from raw mt19937_64 output with explicit arithmetic, so identical seeds
// give identical draws on any platform.
class TrialRng {
public:
    explicit TrialRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    double uniform();   // [0, 1)
    double gaussian();  // N(0, 1), Box-Muller

private:
    std::mt19937_64 engine_;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

// Counter-based per-trial seeds: parallel partitioning cannot change them.
std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

// Haar-distributed 2x2 unitary (Gram-Schmidt of a complex Gaussian matrix;
// the triangular factor has a positive real diagonal, which fixes the phase
// gauge). Passes is_unitary at 1e-12.
ComplexMatrix random_unitary(std::uint64_t seed);

// Channel from a Haar-random isometry of dim 2 -> 2*kraus_count, sliced into
// kraus_count 2x2 blocks. kraus_count in [1, 4].
KrausChannel random_cptp(int kraus_count, std::uint64_t seed);

// Normalized G G^dagger with G a 2 x rank complex Gaussian. rank in {1, 2}.
ComplexMatrix random_density(int rank, std::uint64_t seed);

// Basis from Bloch angles uniform on the sphere:
// theta = arccos(1 - 2u), phi = 2 pi v.
QubitBasis random_basis(std::uint64_t seed);

struct Violation {
    std::uint64_t trial;
    std::string inputs;  // JSON text of the trial inputs
    double slack;
};

struct NearSaturation {
    std::uint64_t trial;
    std::string inputs;
    double slack;
};

// Aggregate of a randomized falsification run. Reproducible bit-for-bit for
// a fixed (target, trials, master_seed) at any parallelism level.
struct VerificationReport {
    Target target;
    std::uint64_t trials;
    std::uint64_t master_seed;
    double min_slack;
    // Trials with slack < -1e-9; nonempty iff min_slack < -1e-9.
    std::vector<Violation> violations;
    // Trials with slack < 1e-3 (theorem and lemma targets): the empirical
    // neighborhood of the equality manifold.
    std::vector<NearSaturation> near_saturation;
};

inline constexpr double violation_threshold = -1e-9;
inline constexpr double near_saturation_threshold = 1e-3;

// Run `trials` independent seeded trials of the target check and aggregate
// the minimum slack and any violations. parallelism 0 means one thread.
VerificationReport run_falsification(Target target, std::uint64_t trials,
                                     std::uint64_t master_seed, unsigned parallelism);

}  // namespace qchan
