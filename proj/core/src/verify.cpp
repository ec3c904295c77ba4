#include "qchan/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iterator>
#include <limits>
#include <numbers>
#include <thread>
#include <utility>

#include "json_detail.hpp"
#include "qchan/entropy.hpp"

namespace qchan {

std::string target_name(Target target) {
    switch (target) {
        case Target::Theorem1: return "theorem1";
        case Target::Theorem2: return "theorem2";
        case Target::Lemma1: return "lemma1";
        case Target::Lemma2: return "lemma2";
        case Target::GMinimum: return "gmin";
    }
    throw DomainError("target_name: unknown target");
}

double TrialRng::uniform() {
    // Top 53 bits of the raw draw, scaled into [0, 1).
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double TrialRng::gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(angle);
    has_cached_ = true;
    return r * std::cos(angle);
}

std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
    // splitmix64 finalizer over the keyed counter.
    std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ULL * (trial_index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

Complex complex_gaussian(TrialRng& rng) {
    const double re = rng.gaussian();
    const double im = rng.gaussian();
    return Complex(re, im);
}

// Gram-Schmidt over two Gaussian columns of length 2k. The triangular factor
// has a positive real diagonal, so the result is Haar distributed.
std::vector<Vec2> haar_isometry_blocks(int kraus_count, TrialRng& rng) {
    const std::size_t rows = 2 * static_cast<std::size_t>(kraus_count);
    while (true) {
        std::vector<Complex> col0(rows), col1(rows);
        for (auto& z : col0) z = complex_gaussian(rng);
        for (auto& z : col1) z = complex_gaussian(rng);

        double n0 = 0.0;
        for (const auto& z : col0) n0 += std::norm(z);
        n0 = std::sqrt(n0);
        if (n0 < 1e-8) continue;
        for (auto& z : col0) z /= n0;

        for (int pass = 0; pass < 2; ++pass) {
            Complex proj = 0.0;
            for (std::size_t i = 0; i < rows; ++i) proj += std::conj(col0[i]) * col1[i];
            for (std::size_t i = 0; i < rows; ++i) col1[i] -= proj * col0[i];
        }
        double n1 = 0.0;
        for (const auto& z : col1) n1 += std::norm(z);
        n1 = std::sqrt(n1);
        if (n1 < 1e-8) continue;
        for (auto& z : col1) z /= n1;

        std::vector<Vec2> blocks;  // block m holds rows 2m, 2m+1 as a 2x2 operator
        for (int m = 0; m < kraus_count; ++m) {
            blocks.push_back(Vec2{col0[2 * m], col1[2 * m]});
            blocks.push_back(Vec2{col0[2 * m + 1], col1[2 * m + 1]});
        }
        return blocks;
    }
}

ComplexMatrix random_unitary_from(TrialRng& rng) {
    const auto rows = haar_isometry_blocks(1, rng);
    ComplexMatrix u(2);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) u.at(r, c) = rows[r][c];
    return u;
}

KrausChannel random_cptp_from(int kraus_count, TrialRng& rng) {
    if (kraus_count < 1 || kraus_count > 4) {
        throw DomainError("random_cptp: kraus_count must lie in [1, 4]");
    }
    const auto rows = haar_isometry_blocks(kraus_count, rng);
    std::vector<ComplexMatrix> ops;
    for (int m = 0; m < kraus_count; ++m) {
        ComplexMatrix op(2);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) op.at(r, c) = rows[2 * m + r][c];
        ops.push_back(op);
    }
    return validate_cptp(std::move(ops));
}

ComplexMatrix random_density_from(int rank, TrialRng& rng) {
    if (rank < 1 || rank > 2) throw DomainError("random_density: rank must be 1 or 2");
    ComplexMatrix rho(2);
    for (int r = 0; r < rank; ++r) {
        const Vec2 g{complex_gaussian(rng), complex_gaussian(rng)};
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) rho.at(i, j) = rho.at(i, j) + g[i] * std::conj(g[j]);
    }
    const double trace = rho.trace().real();
    return Complex(1.0 / trace) * rho;
}

QubitBasis random_basis_from(TrialRng& rng) {
    const double theta = std::acos(1.0 - 2.0 * rng.uniform());
    const double phi = 2.0 * std::numbers::pi * rng.uniform();
    return QubitBasis::from_bloch(theta, phi);
}

std::array<double, 3> random_unit_vector3(TrialRng& rng) {
    while (true) {
        std::array<double, 3> v{rng.gaussian(), rng.gaussian(), rng.gaussian()};
        const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        if (n < 1e-8) continue;
        return {v[0] / n, v[1] / n, v[2] / n};
    }
}

struct TrialOutcome {
    double slack;
    std::string inputs;  // filled only when the trial is worth recording
};

nlohmann::json relation_inputs(const KrausChannel& channel, const QubitBasis& b1,
                               const QubitBasis& b2, double c_max) {
    nlohmann::json j = detail::channel_to_json_obj(channel);
    j["basis1"] = detail::basis_to_json_obj(b1);
    j["basis2"] = detail::basis_to_json_obj(b2);
    j["c_max"] = c_max;
    return j;
}

TrialOutcome theorem1_trial(TrialRng& rng) {
    const int kraus_count = 1 + static_cast<int>(rng.next_u64() % 4);
    const KrausChannel channel = random_cptp_from(kraus_count, rng);
    const QubitBasis b1 = random_basis_from(rng);
    const QubitBasis b2 = random_basis_from(rng);
    const UncertaintyReport report = check_relation(channel, b1, b2, Measure::RelativeEntropy);
    TrialOutcome outcome{report.slack, {}};
    if (report.slack < near_saturation_threshold) {
        outcome.inputs = relation_inputs(channel, b1, b2, report.c_max_used).dump();
    }
    return outcome;
}

TrialOutcome theorem2_trial(TrialRng& rng) {
    const KrausChannel channel = KrausChannel::from_unitary(random_unitary_from(rng));
    const QubitBasis b1 = random_basis_from(rng);
    const QubitBasis b2 = random_basis_from(rng);
    const UncertaintyReport report = check_relation(channel, b1, b2, Measure::L1Norm);
    TrialOutcome outcome{report.slack, {}};
    if (report.slack < near_saturation_threshold) {
        outcome.inputs = relation_inputs(channel, b1, b2, report.c_max_used).dump();
    }
    return outcome;
}

TrialOutcome lemma1_trial(TrialRng& rng) {
    const int rank = 1 + static_cast<int>(rng.next_u64() % 2);
    const ComplexMatrix density = random_density_from(rank, rng);
    const Vec2 x = random_basis_from(rng).first();
    const Vec2 z = random_basis_from(rng).first();
    const Lemma1Result res = lemma1_check(density, x, z);
    const double root_c = std::sqrt(res.c);
    const double slack = std::min({1.0 + root_c - (res.a + res.b),
                                   std::sqrt(1.0 - res.c) - std::abs(res.a - res.b),
                                   (res.a + res.b) - (1.0 - root_c)});
    TrialOutcome outcome{slack, {}};
    if (slack < near_saturation_threshold) {
        nlohmann::json j;
        j["density"] = detail::matrix2_to_json(density);
        j["x"] = detail::vec2_to_json(x);
        j["z"] = detail::vec2_to_json(z);
        j["a"] = res.a;
        j["b"] = res.b;
        j["c"] = res.c;
        outcome.inputs = j.dump();
    }
    return outcome;
}

TrialOutcome lemma2_trial(TrialRng& rng) {
    const auto va = random_unit_vector3(rng);
    const auto vb = random_unit_vector3(rng);
    const auto vc = random_unit_vector3(rng);
    const AngleTriple angles = pairwise_angles(va, vb, vc);
    // All three cyclic pairings: each angle takes the role of gamma once.
    const double s_ab = std::sin(angles.ab);
    const double s_bc = std::sin(angles.bc);
    const double s_ca = std::sin(angles.ca);
    const double slack =
        std::min({s_ab + s_bc - s_ca, s_bc + s_ca - s_ab, s_ca + s_ab - s_bc});
    TrialOutcome outcome{slack, {}};
    if (slack < near_saturation_threshold) {
        nlohmann::json j;
        j["vectors"] = nlohmann::json::array({va, vb, vc});
        j["angles"] = nlohmann::json::array({angles.ab, angles.bc, angles.ca});
        outcome.inputs = j.dump();
    }
    return outcome;
}

TrialOutcome gmin_trial(TrialRng& rng) {
    constexpr double grid_step = 1e-2;
    const double c_max = 0.5 + 0.4999 * rng.uniform();
    const double grid_min = minimize_g_bruteforce(c_max, grid_step);
    const double analytic = binary_entropy(std::sqrt(c_max)) + 2.0;
    const double slack = grid_min - analytic;
    TrialOutcome outcome{slack, {}};
    if (slack < violation_threshold) {
        nlohmann::json j;
        j["c_max"] = c_max;
        j["grid_step"] = grid_step;
        j["grid_min"] = grid_min;
        j["analytic_min"] = analytic;
        outcome.inputs = j.dump();
    }
    return outcome;
}

TrialOutcome run_trial(Target target, TrialRng& rng) {
    switch (target) {
        case Target::Theorem1: return theorem1_trial(rng);
        case Target::Theorem2: return theorem2_trial(rng);
        case Target::Lemma1: return lemma1_trial(rng);
        case Target::Lemma2: return lemma2_trial(rng);
        case Target::GMinimum: return gmin_trial(rng);
    }
    throw DomainError("run_falsification: unknown target");
}

struct PartialResult {
    double min_slack = std::numeric_limits<double>::infinity();
    std::vector<Violation> violations;
    std::vector<NearSaturation> near_saturation;
};

PartialResult run_range(Target target, std::uint64_t master_seed, std::uint64_t begin,
                        std::uint64_t end) {
    PartialResult result;
    for (std::uint64_t trial = begin; trial < end; ++trial) {
        TrialRng rng(derive_trial_seed(master_seed, trial));
        TrialOutcome outcome = run_trial(target, rng);
        result.min_slack = std::min(result.min_slack, outcome.slack);
        if (outcome.slack < violation_threshold) {
            result.violations.push_back({trial, outcome.inputs, outcome.slack});
        } else if (target != Target::GMinimum && outcome.slack < near_saturation_threshold) {
            result.near_saturation.push_back({trial, std::move(outcome.inputs), outcome.slack});
        }
    }
    return result;
}

}  // namespace

ComplexMatrix random_unitary(std::uint64_t seed) {
    TrialRng rng(seed);
    return random_unitary_from(rng);
}

KrausChannel random_cptp(int kraus_count, std::uint64_t seed) {
    TrialRng rng(seed);
    return random_cptp_from(kraus_count, rng);
}

ComplexMatrix random_density(int rank, std::uint64_t seed) {
    TrialRng rng(seed);
    return random_density_from(rank, rng);
}

QubitBasis random_basis(std::uint64_t seed) {
    TrialRng rng(seed);
    return random_basis_from(rng);
}

VerificationReport run_falsification(Target target, std::uint64_t trials,
                                     std::uint64_t master_seed, unsigned parallelism) {
    if (trials < 1) throw DomainError("run_falsification: trials must be >= 1");
    const unsigned workers =
        std::max(1u, std::min<unsigned>(parallelism == 0 ? 1 : parallelism,
                                        static_cast<unsigned>(trials)));

    std::vector<PartialResult> parts(workers);
    if (workers == 1) {
        parts[0] = run_range(target, master_seed, 0, trials);
    } else {
        const std::uint64_t chunk = (trials + workers - 1) / workers;
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(workers);
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                const std::uint64_t begin = static_cast<std::uint64_t>(w) * chunk;
                const std::uint64_t end = std::min<std::uint64_t>(trials, begin + chunk);
                try {
                    if (begin < end) parts[w] = run_range(target, master_seed, begin, end);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : threads) t.join();
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    VerificationReport report{target, trials, master_seed,
                              std::numeric_limits<double>::infinity(), {}, {}};
    // Contiguous chunks merged in worker order keep trial indices sorted.
    for (auto& part : parts) {
        report.min_slack = std::min(report.min_slack, part.min_slack);
        std::move(part.violations.begin(), part.violations.end(),
                  std::back_inserter(report.violations));
        std::move(part.near_saturation.begin(), part.near_saturation.end(),
                  std::back_inserter(report.near_saturation));
    }
    return report;
}

}  // namespace qchan
