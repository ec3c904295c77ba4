#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qchan/coherence.hpp"
#include "qchan/entropy.hpp"
#include "qchan/verify.hpp"

using namespace qchan;

TEST_CASE("relative entropy coherence of the bit flip channel") {
    // Computational basis: S(diag) = H(p) + 1 and S(J/2) = H(p), so the
    // coherence is 1 for every p.
    for (double p : {0.0, 0.3, 0.5, 0.9, 1.0}) {
        const auto x = rel_entropy_coherence(KrausChannel::bit_flip(p), QubitBasis::computational());
        CHECK(x.value == doctest::Approx(1.0).epsilon(1e-9));
        REQUIRE(x.diag_entropy.has_value());
        REQUIRE(x.state_entropy.has_value());
        CHECK(*x.diag_entropy == doctest::Approx(binary_entropy(p) + 1.0).epsilon(1e-9));
        CHECK(*x.state_entropy == doctest::Approx(binary_entropy(p)).epsilon(1e-9));

        // Plus-minus basis: S(diag) = 2, coherence 2 - H(p).
        const auto z = rel_entropy_coherence(KrausChannel::bit_flip(p), QubitBasis::plus_minus());
        CHECK(z.value == doctest::Approx(2.0 - binary_entropy(p)).epsilon(1e-9));
    }
}

TEST_CASE("relative entropy coherence of the identity channel") {
    // J/2 is a pure (Bell) projector with diagonal (1/2, 0, 0, 1/2).
    const auto value = rel_entropy_coherence(KrausChannel::identity(), QubitBasis::computational());
    CHECK(value.value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(*value.state_entropy == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("l1 coherence examples") {
    CHECK(l1_coherence(KrausChannel::pauli_x(), QubitBasis::computational()).value ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(l1_coherence(KrausChannel::pauli_x(), QubitBasis::plus_minus()).value ==
          doctest::Approx(3.0).epsilon(1e-9));

    for (int j = 0; j <= 16; ++j) {
        const double alpha = j * std::numbers::pi / 16.0;
        const auto value = l1_coherence(KrausChannel::rotation(alpha), QubitBasis::computational());
        CHECK(value.value ==
              doctest::Approx(2.0 * std::abs(std::sin(2.0 * alpha)) + 1.0).epsilon(1e-9));
    }
}

TEST_CASE("decomposition stored with the relative entropy value") {
    std::uint64_t seed = 97;
    for (int i = 0; i < 200; ++i) {
        const KrausChannel channel = random_cptp(1 + i % 4, seed++);
        const auto value = rel_entropy_coherence(channel, random_basis(seed++));
        REQUIRE(value.diag_entropy.has_value());
        REQUIRE(value.state_entropy.has_value());
        CHECK(std::abs(value.value - (*value.diag_entropy - *value.state_entropy)) <= 1e-10);
    }
}

TEST_CASE("unitary l1 closed form") {
    CHECK(unitary_l1_closed_form(KrausChannel::pauli_x(), QubitBasis::computational()) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(unitary_l1_closed_form(KrausChannel::pauli_x(), QubitBasis::plus_minus()) ==
          doctest::Approx(3.0).epsilon(1e-9));
    CHECK(unitary_l1_closed_form(KrausChannel::identity(), QubitBasis::computational()) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(unitary_l1_closed_form(KrausChannel::bit_flip(0.5), QubitBasis::computational()),
                    NotUnitaryChannel);
}

TEST_CASE("closed form agrees with the l1 sum on random unitaries") {
    std::uint64_t seed = 1111;
    for (int i = 0; i < 300; ++i) {
        const KrausChannel channel = KrausChannel::from_unitary(random_unitary(seed++));
        const QubitBasis basis = random_basis(seed++);
        const double closed = unitary_l1_closed_form(channel, basis);
        const double summed = l1_coherence(channel, basis).value;
        CHECK(std::abs(closed - summed) <= 1e-9);
    }
}

TEST_CASE("coherence vanishes exactly on diagonal choi states") {
    // Full phase damping leaves the Choi state diagonal in the computational
    // product basis.
    const KrausChannel pd1 = KrausChannel::phase_damping(1.0);
    const auto rel = rel_entropy_coherence(pd1, QubitBasis::computational());
    const auto l1 = l1_coherence(pd1, QubitBasis::computational());
    CHECK(rel.value <= 1e-9);
    CHECK(l1.value <= 1e-9);
}

TEST_CASE("nonnegativity and the zero-iff-diagonal correspondence") {
    std::uint64_t seed = 13579;
    std::vector<KrausChannel> channels = {
        KrausChannel::identity(),    KrausChannel::pauli_x(),     KrausChannel::bit_flip(0.4),
        KrausChannel::phase_damping(1.0), KrausChannel::rotation(0.3),
    };
    for (int i = 0; i < 1000; ++i) channels.push_back(random_cptp(1 + i % 4, seed++));
    for (const auto& channel : channels) {
        const QubitBasis basis = random_basis(seed++);
        const ChoiState state = choi(channel, basis);
        double max_off = 0.0;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                if (r != c) max_off = std::max(max_off, std::abs(state.matrix().at(r, c)));

        const double rel = rel_entropy_coherence(channel, basis).value;
        const double l1 = l1_coherence(channel, basis).value;
        CHECK(rel >= 0.0);
        CHECK(l1 >= 0.0);
        CHECK((max_off <= 1e-10) == (l1 <= 1e-9));
        CHECK((max_off <= 1e-10) == (rel <= 1e-9));
    }
}

TEST_CASE("convexity under weighted kraus mixing") {
    std::uint64_t seed = 24680;
    for (int i = 0; i < 60; ++i) {
        const KrausChannel a = random_cptp(1 + i % 4, seed++);
        const KrausChannel b = random_cptp(1 + (i + 1) % 4, seed++);
        const QubitBasis basis = random_basis(seed++);
        for (double t : {0.25, 0.5, 0.75}) {
            const KrausChannel mixture = mix(a, b, t);
            const double rel_mix = rel_entropy_coherence(mixture, basis).value;
            const double rel_convex = t * rel_entropy_coherence(a, basis).value +
                                      (1.0 - t) * rel_entropy_coherence(b, basis).value;
            CHECK(rel_mix <= rel_convex + 1e-9);

            const double l1_mix = l1_coherence(mixture, basis).value;
            const double l1_convex = t * l1_coherence(a, basis).value +
                                     (1.0 - t) * l1_coherence(b, basis).value;
            CHECK(l1_mix <= l1_convex + 1e-9);
        }
    }
}
