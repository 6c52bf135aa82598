#include "strobe/su2.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "strobe/errors.hpp"
#include "su2_matrix_oracle.hpp"

using namespace strobe;
namespace oracle = strobe::testing;

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

TEST(ExpAxisAngle, ZeroAngleIsIdentity) {
    const GroupElement g = exp_axis_angle({{0, 0, 1}, 0.0});
    EXPECT_DOUBLE_EQ(g.w, 1.0);
    EXPECT_DOUBLE_EQ(norm(g.v), 0.0);
}

TEST(ExpAxisAngle, FullTurnIsMinusIdentity) {
    const GroupElement g = exp_axis_angle({{0, 0, 1}, 2.0 * kPi});
    EXPECT_NEAR(g.w, -1.0, 1e-15);
    EXPECT_NEAR(norm(g.v), 0.0, 1e-15);
}

TEST(ExpAxisAngle, MatchesSeriesOracle) {
    const GroupElement g = exp_axis_angle({{1, 0, 0}, kPi / 2});
    EXPECT_LE(oracle::mat_max_abs_diff(oracle::to_matrix(g), oracle::exp_oracle({1, 0, 0}, kPi / 2)),
              1e-12);
}

TEST(ExpAxisAngle, RejectsNonUnitAxis) {
    EXPECT_THROW(exp_axis_angle({{1, 1, 0}, 0.3}), std::invalid_argument);
}

TEST(ExpAxisAngle, MatrixIsSpecialUnitary) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        EXPECT_TRUE(oracle::is_special_unitary(oracle::to_matrix(random_element(rng))));
    }
}

TEST(Mul, IdentityLaws) {
    std::mt19937_64 rng(2);
    const GroupElement g = random_element(rng);
    EXPECT_LE(max_abs_diff(mul(GroupElement::identity(), g), g), 1e-15);
    EXPECT_LE(max_abs_diff(mul(g, inverse(g)), GroupElement::identity()), 1e-13);
}

TEST(Mul, HomomorphismAgainstMatrixProduct) {
    std::mt19937_64 rng(3);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const GroupElement a = random_element(rng);
        const GroupElement b = random_element(rng);
        worst = std::max(worst,
                         oracle::mat_max_abs_diff(oracle::to_matrix(mul(a, b)),
                                                  oracle::mat_mul(oracle::to_matrix(a),
                                                                  oracle::to_matrix(b))));
    }
    EXPECT_LE(worst, 1e-12);
}

TEST(Inverse, IdentityAndAngleNegation) {
    EXPECT_LE(max_abs_diff(inverse(GroupElement::identity()), GroupElement::identity()), 0.0);
    const Vec3 s{0, 1, 0};
    EXPECT_LE(max_abs_diff(inverse(exp_axis_angle(s, 0.7)), exp_axis_angle(s, -0.7)), 1e-15);
}

TEST(Inverse, CompositionGivesIdentity) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
        const GroupElement g = random_element(rng);
        EXPECT_LE(max_abs_diff(mul(g, inverse(g)), GroupElement::identity()), 1e-13);
    }
}

TEST(Conjugate, TrivialCases) {
    std::mt19937_64 rng(5);
    const GroupElement g = random_element(rng);
    EXPECT_LE(max_abs_diff(conjugate(GroupElement::identity(), g), g), 1e-15);
    EXPECT_LE(max_abs_diff(conjugate(g, GroupElement::identity()), GroupElement::identity()),
              1e-13);
}

TEST(Conjugate, PreservesRotationAngle) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 200; ++i) {
        const GroupElement a = random_element(rng);
        const GroupElement g = random_element(rng);
        EXPECT_NEAR(axis_angle_of(conjugate(a, g)).angle, axis_angle_of(g).angle, 1e-12);
    }
}

// The orientation contract: conjugating the embedded vector equals
// rotate_vector with the x-cross-s sine term.
TEST(Conjugate, AxisTransformsLikeRotateVector) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const Vec3 x = random_unit(rng);
        const Vec3 s = random_unit(rng);
        std::uniform_real_distribution<double> ang(-2.0 * kPi, 2.0 * kPi);
        const double gamma = ang(rng);
        const GroupElement embedded = exp_axis_angle(x, kPi / 2);
        const GroupElement rotated = conjugate(exp_axis_angle(s, gamma), embedded);
        EXPECT_LE(max_abs_diff(axis_angle_of(rotated).axis, rotate_vector(x, s, gamma)), 1e-12);
    }
}

TEST(RotateVector, QuarterTurnAboutOrthogonalAxis) {
    const Vec3 out = rotate_vector({1, 0, 0}, {0, 0, 1}, kPi / 2);
    EXPECT_LE(max_abs_diff(out, {0, -1, 0}), 1e-15);
}

TEST(RotateVector, OwnAxisIsFixed) {
    const Vec3 x{0.6, 0, 0.8};
    EXPECT_LE(max_abs_diff(rotate_vector(x, normalized(x), 1.234), x), 1e-15);
}

TEST(RotateVector, MatchesPauliConjugationOracle) {
    const Vec3 out = rotate_vector({0.6, 0, 0.8}, {1, 0, 0}, kPi);
    EXPECT_LE(max_abs_diff(out, {0.6, 0, -0.8}), 1e-12);
    EXPECT_LE(max_abs_diff(out, oracle::rotate_oracle({0.6, 0, 0.8}, {1, 0, 0}, kPi)), 1e-12);

    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> ang(-2.0 * kPi, 2.0 * kPi);
    for (int i = 0; i < 1000; ++i) {
        const Vec3 x = random_unit(rng);
        const Vec3 s = random_unit(rng);
        const double gamma = ang(rng);
        EXPECT_LE(max_abs_diff(rotate_vector(x, s, gamma), oracle::rotate_oracle(x, s, gamma)),
                  1e-12);
    }
}

TEST(RotateVector, RejectsNonUnitAxis) {
    EXPECT_THROW(rotate_vector({1, 0, 0}, {0, 0, 2}, 0.1), std::invalid_argument);
}

TEST(RotateVector, IsometryAndAngleAddition) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    std::uniform_real_distribution<double> len(0.1, 5.0);
    for (int i = 0; i < 500; ++i) {
        const Vec3 x = len(rng) * random_unit(rng);
        const Vec3 s = random_unit(rng);
        const double g1 = ang(rng), g2 = ang(rng);
        EXPECT_NEAR(norm(rotate_vector(x, s, g1)), norm(x), 1e-12);
        EXPECT_LE(max_abs_diff(rotate_vector(rotate_vector(x, s, g1), s, g2),
                               rotate_vector(x, s, g1 + g2)),
                  1e-12);
    }
}

TEST(AxisAngleOf, IdentityIsDegenerate) {
    const AxisAngleDecomp aa = axis_angle_of(GroupElement::identity());
    EXPECT_TRUE(aa.degenerate);
    EXPECT_DOUBLE_EQ(aa.angle, 0.0);
    EXPECT_LE(max_abs_diff(aa.axis, {0, 0, 1}), 0.0);
}

TEST(AxisAngleOf, MinusIdentityIsDegenerateFullTurn) {
    const AxisAngleDecomp aa = axis_angle_of({-1.0, {0, 0, 0}});
    EXPECT_TRUE(aa.degenerate);
    EXPECT_DOUBLE_EQ(aa.angle, 2.0 * kPi);
}

TEST(AxisAngleOf, SimpleRoundTrip) {
    const AxisAngleDecomp aa = axis_angle_of(exp_axis_angle({1, 0, 0}, kPi / 3));
    EXPECT_FALSE(aa.degenerate);
    EXPECT_NEAR(aa.angle, kPi / 3, 1e-14);
    EXPECT_LE(max_abs_diff(aa.axis, {1, 0, 0}), 1e-14);
}

TEST(AxisAngleOf, RandomRoundTrip) {
    std::mt19937_64 rng(10);
    for (int i = 0; i < 1000; ++i) {
        const GroupElement g = random_element(rng);
        const AxisAngleDecomp aa = axis_angle_of(g);
        EXPECT_GE(aa.angle, 0.0);
        EXPECT_LE(aa.angle, 2.0 * kPi);
        const GroupElement back = exp_axis_angle(aa.axis, aa.angle);
        EXPECT_LE(max_abs_diff(GroupElement{back.w * aa.sign, aa.sign * back.v}, g), 1e-12);
    }
}

TEST(Renormalize, UnitElementUnchangedAndScalingRemoved) {
    std::mt19937_64 rng(11);
    const GroupElement g = random_element(rng);
    EXPECT_LE(max_abs_diff(renormalize(g), g), 1e-15);
    const GroupElement scaled{g.w * 1.0001, 1.0001 * g.v};
    EXPECT_NEAR(norm(renormalize(scaled)), 1.0, 1e-15);
}

TEST(Renormalize, RejectsNormOutsideWindow) {
    EXPECT_THROW(renormalize({0.1, {0, 0, 0}}), NumericalInstabilityError);
    EXPECT_THROW(renormalize({1.7, {0, 0, 0}}), NumericalInstabilityError);
}

TEST(DoubleCover, FullTurnFlipsSign) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    for (int i = 0; i < 200; ++i) {
        const Vec3 s = random_unit(rng);
        const double gamma = ang(rng);
        const GroupElement a = exp_axis_angle(s, gamma + 2.0 * kPi);
        const GroupElement b = exp_axis_angle(s, gamma);
        EXPECT_LE(max_abs_diff(a, GroupElement{-b.w, -b.v}), 1e-12);
    }
}

TEST(PowReal, MatchesRepeatedMultiplication) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        const GroupElement g = random_element(rng);
        GroupElement acc = GroupElement::identity();
        for (int k = 0; k < 5; ++k) acc = mul(acc, g);
        EXPECT_LE(max_abs_diff(pow_real(g, 5.0), acc), 1e-12);
        EXPECT_LE(max_abs_diff(pow_real(g, -1.0), inverse(g)), 1e-12);
    }
}

}  // namespace
