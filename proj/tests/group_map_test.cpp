#include "strobe/group_map.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "strobe/qsequence.hpp"
#include "strobe/su2.hpp"

using namespace strobe;

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    Vec3 v;
    do {
        v = {nd(rng), nd(rng), nd(rng)};
    } while (norm(v) < 1e-3);
    return normalized(v);
}

GroupElement random_element(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ang(0.05, 2.0 * kPi - 0.05);
    return exp_axis_angle(random_unit(rng), ang(rng));
}

QSequence random_sequence(std::mt19937_64& rng, int which, int explicit_len = 128) {
    switch (which % 3) {
        case 0:
            return QSequence::constant(random_element(rng));
        case 1:
            return QSequence::alternating(random_element(rng), random_element(rng));
        default: {
            std::vector<GroupElement> elems;
            for (int i = 0; i < explicit_len; ++i) elems.push_back(random_element(rng));
            return QSequence::explicit_list(std::move(elems));
        }
    }
}

TEST(QSequenceTest, ConstantCoversMinusOne) {
    std::mt19937_64 rng(20);
    const GroupElement q = random_element(rng);
    const QSequence qs = QSequence::constant(q);
    EXPECT_LE(max_abs_diff(qs.at(-1), q), 0.0);
    EXPECT_LE(max_abs_diff(qs.at(1000), q), 0.0);
    EXPECT_THROW(qs.at(-2), std::out_of_range);
}

TEST(QSequenceTest, AlternatingParity) {
    std::mt19937_64 rng(21);
    const GroupElement even = random_element(rng);
    const GroupElement odd = random_element(rng);
    const QSequence qs = QSequence::alternating(even, odd);
    EXPECT_LE(max_abs_diff(qs.at(-1), odd), 0.0);
    EXPECT_LE(max_abs_diff(qs.at(0), even), 0.0);
    EXPECT_LE(max_abs_diff(qs.at(7), odd), 0.0);
}

TEST(QSequenceTest, ExplicitRangeAndDefaultQMinusOne) {
    std::mt19937_64 rng(22);
    std::vector<GroupElement> elems{random_element(rng), random_element(rng),
                                    random_element(rng)};
    const QSequence qs = QSequence::explicit_list(elems);  // indices 0, 1, 2
    EXPECT_LE(max_abs_diff(qs.at(-1), elems[0]), 0.0);     // Q_{-1} defaults to Q_0
    EXPECT_LE(max_abs_diff(qs.at(2), elems[2]), 0.0);
    EXPECT_THROW(qs.at(3), std::out_of_range);

    const QSequence qs2 = QSequence::explicit_list(elems, -1);  // indices -1, 0, 1
    EXPECT_LE(max_abs_diff(qs2.at(-1), elems[0]), 0.0);
    EXPECT_THROW(qs2.at(2), std::out_of_range);
}

// With all Q = identity the map collapses to pure conjugation.
TEST(StepTest, IdentityQReducesToConjugation) {
    std::mt19937_64 rng(23);
    const GroupElement r0 = random_element(rng);
    const GroupElement r1 = random_element(rng);
    const QSequence qs = QSequence::constant(GroupElement::identity());
    const MapState next = step(initial_state(r0, r1), qs);
    EXPECT_LE(max_abs_diff(next.r_curr, mul(r1, r0, inverse(r1))), 1e-13);
    EXPECT_EQ(next.n, 2);
}

TEST(StepTest, IdentityInitialDataStaysIdentity) {
    std::mt19937_64 rng(24);
    const QSequence qs = QSequence::constant(random_element(rng));
    MapState st = initial_state(GroupElement::identity(), GroupElement::identity());
    for (int i = 0; i < 10; ++i) st = step(st, qs);
    EXPECT_LE(max_abs_diff(st.r_curr, GroupElement::identity()), 1e-12);
}

TEST(StepTest, ConstantQAgreesWithSimplifiedSolutionAtK1) {
    std::mt19937_64 rng(25);
    for (int i = 0; i < 50; ++i) {
        const GroupElement q = random_element(rng);
        const GroupElement r0 = random_element(rng);
        const GroupElement r1 = random_element(rng);
        const GroupElement p = mul(inverse(q), r1, q, r0);  // P = Q^-1 R_1 Q R_0
        const MapState st = step(initial_state(r0, r1), QSequence::constant(q));
        const GroupElement closed =
            simplified_solution(1, Parity::Even, q, p, r0, r1_tilde_from(q, r1));
        EXPECT_LE(max_abs_diff(st.r_curr, closed), 1e-12);
    }
}

TEST(StepBackTest, InvertsStep) {
    std::mt19937_64 rng(26);
    for (int i = 0; i < 30; ++i) {
        const QSequence qs = random_sequence(rng, i);
        const MapState st = initial_state(random_element(rng), random_element(rng));
        const MapState back = step_back(step(st, qs), qs);
        EXPECT_EQ(back.n, st.n);
        EXPECT_LE(max_abs_diff(back.r_prev, st.r_prev), 1e-12);
        EXPECT_LE(max_abs_diff(back.r_curr, st.r_curr), 1e-12);
    }
}

TEST(StepBackTest, HundredDeepRoundTrip) {
    std::mt19937_64 rng(27);
    for (int i = 0; i < 12; ++i) {
        const QSequence qs = random_sequence(rng, i, 256);
        const GroupElement r0 = random_element(rng);
        const GroupElement r1 = random_element(rng);
        MapState st = initial_state(r0, r1);
        for (int j = 0; j < 100; ++j) st = step(st, qs);
        for (int j = 0; j < 100; ++j) st = step_back(st, qs);
        EXPECT_EQ(st.n, 1);
        EXPECT_LE(max_abs_diff(st.r_prev, r0), 1e-9);
        EXPECT_LE(max_abs_diff(st.r_curr, r1), 1e-9);
    }
}

TEST(StepBackTest, AllIdentityUnchanged) {
    const QSequence qs = QSequence::constant(GroupElement::identity());
    MapState st{5, GroupElement::identity(), GroupElement::identity()};
    st = step_back(st, qs);
    EXPECT_LE(max_abs_diff(st.r_prev, GroupElement::identity()), 1e-14);
}

TEST(SOfTest, AllIdentityGivesIdentity) {
    const QSequence qs = QSequence::constant(GroupElement::identity());
    const SRecord s = s_of(GroupElement::identity(), GroupElement::identity(), qs, 1);
    EXPECT_LE(max_abs_diff(s.s, GroupElement::identity()), 1e-14);
}

// Constant Q: S_1 = R_1 Q R_0 Q and P = Q^-1 S_1 Q^-1 = Q^-1 R_1 Q R_0.
TEST(SOfTest, ConstantQPRelation) {
    std::mt19937_64 rng(28);
    for (int i = 0; i < 50; ++i) {
        const GroupElement q = random_element(rng);
        const GroupElement r0 = random_element(rng);
        const GroupElement r1 = random_element(rng);
        const SRecord s1 = s_of(r1, r0, QSequence::constant(q), 1);
        EXPECT_LE(max_abs_diff(s1.s, mul(r1, q, r0, q)), 1e-13);
        const GroupElement p_from_s = mul(inverse(q), s1.s, inverse(q));
        const GroupElement p_direct = mul(inverse(q), r1, q, r0);
        EXPECT_LE(max_abs_diff(p_from_s, p_direct), 1e-13);
    }
}

// S_{N+1} = Q_N S_N Q_{N-2}^-1 holds along the orbit.
TEST(SOfTest, SatisfiesRecursion) {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 30; ++i) {
        const QSequence qs = random_sequence(rng, i);
        const GroupElement r0 = random_element(rng);
        const GroupElement r1 = random_element(rng);
        const std::vector<GroupElement> orbit = direct_orbit(r0, r1, qs, 12);
        for (std::int64_t n = 1; n <= 10; ++n) {
            const SRecord sn = s_of(orbit[static_cast<std::size_t>(n)],
                                    orbit[static_cast<std::size_t>(n - 1)], qs, n);
            const SRecord snext = s_of(orbit[static_cast<std::size_t>(n + 1)],
                                       orbit[static_cast<std::size_t>(n)], qs, n + 1);
            EXPECT_LE(max_abs_diff(snext.s, mul(qs.at(n), sn.s, inverse(qs.at(n - 2)))), 1e-12);
        }
    }
}

TEST(RsStepTest, IdentitySAndQFreezeR) {
    std::mt19937_64 rng(30);
    const GroupElement r_prev = random_element(rng);
    const QSequence qs = QSequence::constant(GroupElement::identity());
    const RsPair next = rs_step(r_prev, SRecord{1, GroupElement::identity()}, qs);
    EXPECT_LE(max_abs_diff(next.r_next, r_prev), 1e-13);
    EXPECT_LE(max_abs_diff(next.s_next, GroupElement::identity()), 1e-14);
}

TEST(RsStepTest, EvenOrbitMatchesDirectIteration) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        const QSequence qs = random_sequence(rng, i);
        const GroupElement r0 = random_element(rng);
        const GroupElement r1 = random_element(rng);
        const std::vector<GroupElement> direct = direct_orbit(r0, r1, qs, 100);
        const std::vector<GroupElement> reduced = rs_orbit_even(r0, r1, qs, 51);
        for (std::int64_t k = 0; k <= 50; ++k) {
            EXPECT_LE(max_abs_diff(reduced[static_cast<std::size_t>(k)],
                                   direct[static_cast<std::size_t>(2 * k)]),
                      1e-10);
        }
    }
}

// Constant Q telescopes the S recursion into conjugation by Q powers.
TEST(RsStepTest, ConstantQSTelescopes) {
    std::mt19937_64 rng(32);
    const GroupElement q = random_element(rng);
    const QSequence qs = QSequence::constant(q);
    const GroupElement r0 = random_element(rng);
    const GroupElement r1 = random_element(rng);
    SRecord s = s_of(r1, r0, qs, 1);
    const SRecord s1 = s;
    SRecord s2{0, GroupElement::identity()};
    for (std::int64_t n = 2; n <= 20; ++n) {
        s = s_advance(s, qs);
        if (n == 2) s2 = s;
        const GroupElement qpow = pow_real(q, static_cast<double>(n - 2));
        EXPECT_LE(max_abs_diff(s.s, mul(qpow, s2.s, inverse(qpow))), 1e-12)
            << "S_N = Q^{N-2} S_2 Q^{-(N-2)} failed at N=" << n;
        const GroupElement qpow1 = pow_real(q, static_cast<double>(n - 1));
        EXPECT_LE(max_abs_diff(s.s, mul(qpow1, s1.s, inverse(qpow1))), 1e-12)
            << "S_N = Q^{N-1} S_1 Q^{-(N-1)} failed at N=" << n;
    }
}

TEST(ClosedSTest, LowestIndexPattern) {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 20; ++i) {
        const QSequence qs = random_sequence(rng, i);
        const GroupElement r0 = random_element(rng);
        const GroupElement r1 = random_element(rng);
        const SRecord s1 = s_of(r1, r0, qs, 1);
        // S_2 = Q_1 S_1 Q_{-1}^-1
        EXPECT_LE(max_abs_diff(closed_s(2, s1, qs), mul(qs.at(1), s1.s, inverse(qs.at(-1)))),
                  1e-13);
    }
}

TEST(ClosedSTest, ConstantQTelescoping) {
    std::mt19937_64 rng(34);
    const GroupElement q = random_element(rng);
    const QSequence qs = QSequence::constant(q);
    const GroupElement r0 = random_element(rng);
    const GroupElement r1 = random_element(rng);
    const SRecord s1 = s_of(r1, r0, qs, 1);
    // recursion oracle, and the explicit power form Q^{N-1} S_1 Q^{-(N-1)}
    SRecord s = s1;
    for (std::int64_t n = 2; n <= 5; ++n) s = s_advance(s, qs);
    EXPECT_LE(max_abs_diff(closed_s(5, s1, qs), s.s), 1e-12);
    const GroupElement q4 = pow_real(q, 4.0);
    EXPECT_LE(max_abs_diff(closed_s(5, s1, qs), mul(q4, s1.s, inverse(q4))), 1e-12);
}

TEST(ClosedSTest, MatchesRecursionForRandomSequences) {
    std::mt19937_64 rng(35);
    for (int i = 0; i < 40; ++i) {
        const QSequence qs = random_sequence(rng, i);
        const GroupElement r0 = random_element(rng);
        const GroupElement r1 = random_element(rng);
        const SRecord s1 = s_of(r1, r0, qs, 1);
        SRecord s = s1;
        for (std::int64_t n = 2; n <= 20; ++n) {
            s = s_advance(s, qs);
            EXPECT_LE(max_abs_diff(closed_s(n, s1, qs), s.s), 1e-12);
        }
    }
}

TEST(ClosedREvenTest, SingleStepCaseEqualsReducedMap) {
    std::mt19937_64 rng(36);
    for (int i = 0; i < 20; ++i) {
        const QSequence qs = random_sequence(rng, i);
        const GroupElement r0 = random_element(rng);
        const GroupElement r1 = random_element(rng);
        const std::vector<GroupElement> s_even = s_even_list(r0, r1, qs, 1);
        EXPECT_LE(max_abs_diff(closed_r_even(1, r0, s_even),
                               mul(s_even[0], r0, inverse(s_even[0]))),
                  1e-13);
    }
}

TEST(ClosedREvenTest, AllIdentitySKeepsR0) {
    std::mt19937_64 rng(37);
    const GroupElement r0 = random_element(rng);
    const std::vector<GroupElement> s_ident(25, GroupElement::identity());
    EXPECT_LE(max_abs_diff(closed_r_even(25, r0, s_ident), r0), 1e-13);
}

TEST(ClosedREvenTest, MatchesDirectIteration) {
    std::mt19937_64 rng(38);
    for (int i = 0; i < 20; ++i) {
        const QSequence qs = random_sequence(rng, i);
        const GroupElement r0 = random_element(rng);
        const GroupElement r1 = random_element(rng);
        const std::vector<GroupElement> orbit = direct_orbit(r0, r1, qs, 50);
        const std::vector<GroupElement> s_even = s_even_list(r0, r1, qs, 25);
        EXPECT_LE(max_abs_diff(closed_r_even(25, r0, s_even), orbit[50]), 1e-10);
    }
}

TEST(ClosedREvenTest, MissingEntriesRejected) {
    std::mt19937_64 rng(39);
    const GroupElement r0 = random_element(rng);
    const std::vector<GroupElement> s_short(3, GroupElement::identity());
    EXPECT_THROW(closed_r_even(4, r0, s_short), std::out_of_range);
}

TEST(SimplifiedSolutionTest, KZeroReturnsInitial) {
    std::mt19937_64 rng(40);
    const GroupElement q = random_element(rng);
    const GroupElement p = random_element(rng);
    const GroupElement r0 = random_element(rng);
    const GroupElement out =
        simplified_solution(0, Parity::Even, q, p, r0, r1_tilde_from(q, r1_from(q, p, r0)));
    EXPECT_LE(max_abs_diff(out, r0), 1e-13);
}

// K=1 algebraic identity: R_2 = Q R_1 Q R_0 Q^-1 R_1^-1 Q^-1 with
// R_1 = Q P R_0^-1 Q^-1.
TEST(SimplifiedSolutionTest, K1AlgebraicIdentity) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 20; ++i) {
        const GroupElement q = random_element(rng);
        const GroupElement p = random_element(rng);
        const GroupElement r0 = random_element(rng);
        const GroupElement r1 = r1_from(q, p, r0);
        const GroupElement direct =
            mul(q, r1, q, r0, inverse(q), inverse(r1), inverse(q));
        const GroupElement closed =
            simplified_solution(1, Parity::Even, q, p, r0, r1_tilde_from(q, r1));
        EXPECT_LE(max_abs_diff(direct, closed), 1e-12);
    }
}

TEST(SimplifiedSolutionTest, LongOrbitBothParities) {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 10; ++i) {
        const GroupElement q = random_element(rng);
        const GroupElement p = random_element(rng);
        const GroupElement r0 = random_element(rng);
        const GroupElement r1 = r1_from(q, p, r0);
        const GroupElement r1t = r1_tilde_from(q, r1);
        const std::vector<GroupElement> orbit =
            direct_orbit(r0, r1, QSequence::constant(q), 201);
        for (const std::int64_t k : {1LL, 7LL, 50LL, 100LL}) {
            EXPECT_LE(max_abs_diff(simplified_solution(k, Parity::Even, q, p, r0, r1t),
                                   orbit[static_cast<std::size_t>(2 * k)]),
                      1e-9);
        }
        for (const std::int64_t k : {0LL, 3LL, 42LL, 99LL}) {
            EXPECT_LE(max_abs_diff(simplified_solution(k, Parity::Odd, q, p, r0, r1t),
                                   orbit[static_cast<std::size_t>(2 * k + 1)]),
                      1e-9);
        }
    }
}

// The closed form is a conjugation of R_0: the rotation angle is conserved.
TEST(SimplifiedSolutionTest, ConjugationClassConserved) {
    std::mt19937_64 rng(43);
    const GroupElement q = random_element(rng);
    const GroupElement p = random_element(rng);
    const GroupElement r0 = random_element(rng);
    const GroupElement r1t = r1_tilde_from(q, r1_from(q, p, r0));
    const double chi0 = axis_angle_of(r0).angle;
    for (const std::int64_t k : {1LL, 10LL, 100LL, 1000LL}) {
        const GroupElement g = simplified_solution(k, Parity::Even, q, p, r0, r1t);
        EXPECT_NEAR(axis_angle_of(g).angle, chi0, 1e-10);
    }
}

TEST(ParameterOrbitTest, IdentityOrbitIsZero) {
    const std::vector<GroupElement> orbit(4, GroupElement::identity());
    const std::vector<Coordinate> coords = parameter_orbit(orbit);
    for (const Coordinate& c : coords) {
        EXPECT_TRUE(c.degenerate);
        EXPECT_LE(norm(c.c), 0.0);
    }
}

TEST(ParameterOrbitTest, DirectReadOff) {
    const std::vector<GroupElement> orbit{exp_axis_angle({0, 0, 1}, std::numbers::pi / 2)};
    const std::vector<Coordinate> coords = parameter_orbit(orbit);
    EXPECT_LE(max_abs_diff(coords[0].c, {0, 0, std::numbers::pi / 4}), 1e-14);
    EXPECT_FALSE(coords[0].degenerate);
}

TEST(ParameterOrbitTest, ReconstructionRoundTrip) {
    std::mt19937_64 rng(44);
    std::vector<GroupElement> orbit;
    for (int i = 0; i < 200; ++i) orbit.push_back(random_element(rng));
    const std::vector<Coordinate> coords = parameter_orbit(orbit);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        const double len = norm(coords[i].c);
        const GroupElement back = exp_axis_angle(coords[i].c / len, 2.0 * len);
        EXPECT_LE(projective_diff(back, orbit[i]), 1e-12);
    }
}

// Norm control: products stay on the unit sphere to well below 1e-12
// between the per-step renormalizations, over a million steps.
TEST(NormControlTest, MillionStepDrift) {
    std::mt19937_64 rng(45);
    const GroupElement q = random_element(rng);
    const QSequence qs = QSequence::constant(q);
    MapState st = initial_state(random_element(rng), random_element(rng));
    double worst = 0.0;
    for (int i = 0; i < 1000000; ++i) {
        const GroupElement qn = qs.at(st.n);
        const GroupElement qm = qs.at(st.n - 1);
        const GroupElement raw = mul(qn, st.r_curr, qm, st.r_prev, inverse(qm),
                                     inverse(st.r_curr), inverse(qn));
        worst = std::max(worst, std::fabs(norm(raw) - 1.0));
        st = MapState{st.n + 1, st.r_curr, renormalize(raw)};
    }
    EXPECT_LE(worst, 1e-12);
}

}  // namespace
