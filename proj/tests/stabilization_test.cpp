#include <gtest/gtest.h>

#include "pushforward/genus0.hpp"
#include "pushforward/stabilization.hpp"

namespace pushforward {
namespace {

TEST(RrDefect, Examples) {
    EXPECT_EQ(rr_defect({0, 2, 1, 0}, 0), 1);
    EXPECT_EQ(rr_defect({1, 2, 1, 0}, 0), 0);
    EXPECT_EQ(rr_defect({2, 2, 1, 0}, -1), 1);
}

TEST(BSequence, GenusZeroExample) {
    const CohSequence a(-1, {3, 1, 0, 0}, 2);
    const CohSequence b = b_sequence_from_a(a, {0, 2, 1, 0});
    EXPECT_EQ(b.mode(), CohMode::kH1);
    EXPECT_EQ(b.lo(), -1);
    EXPECT_EQ(b.values(), (std::vector<Int>{0, 0, 1, 3}));
    EXPECT_EQ(splitting_from_h1_sequence(b), (SplittingType{0, -1}));
}

TEST(BSequence, GenusOneTrivialBundle) {
    // a_l = h^0(-2l inf) on an elliptic curve: 4, 2, 1, 0, 0 on [-2, 2].
    const CohSequence a(-2, {4, 2, 1, 0, 0}, 2);
    const CohSequence b = b_sequence_from_a(a, {1, 2, 1, 0});
    EXPECT_EQ(b.at(0), 1);
    EXPECT_EQ(splitting_from_h1_sequence(b), splitting_from_h0_sequence(a));
}

TEST(BSequence, InconsistentContextIsNegativeH1) {
    const CohSequence a(-1, {3, 1, 0, 0}, 2);
    try {
        b_sequence_from_a(a, {0, 2, 1, 100});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kNegativeH1);
    }
}

TEST(BSequence, RouteEqualityOnGenusZero) {
    for (Int n = 1; n <= 6; ++n)
        for (Int m = -12; m <= 12; ++m) {
            const CohSequence a = g0_oracle_sequence(n, m);
            const CohSequence b = b_sequence_from_a(a, {0, n, 1, m});
            EXPECT_EQ(splitting_from_h1_sequence(b), splitting_from_h0_sequence(a));
            for (Int ell = a.lo(); ell <= a.hi(); ++ell)
                EXPECT_EQ(b.at(ell), std::max<Int>(0, -2 - m + ell * n + 1));  // h^0(O(-2 - m + ln))
        }
}

TEST(Duality, Examples) {
    EXPECT_TRUE(verify_duality(SplittingType{0, -1, -1}, SplittingType{-1, -1, -2}));
    EXPECT_TRUE(verify_duality(SplittingType{0, -3}, SplittingType{1, -2}));
    EXPECT_FALSE(verify_duality(SplittingType{0}, SplittingType{0}));
    try {
        verify_duality(SplittingType{0}, SplittingType{0, 0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kRankMismatch);
    }
}

TEST(StableForm, Examples) {
    EXPECT_EQ(stable_form(5, 1, 2, 0), (SplittingType{0, -1, -1, -2, -2}));
    EXPECT_EQ(stable_form(3, 0, 0, 4), (SplittingType{3, 3, 3}));
    try {
        stable_form(2, 2, 1, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kOverfull);
    }
}

TEST(NearCanonicalForms, GenusTwoDoubleCover) {
    // L = O, g = 2, n = 2: f^*O(1) = 2 inf = K, h0 = 1, h1 = 2.
    EXPECT_EQ(below_canonical_form(2, 1, 2, true), (SplittingType{0, -3}));
    // L = 2 inf = f^*O(1): h0 = 2, h1 = 1.
    EXPECT_EQ(above_canonical_form(2, 2, 1, true), (SplittingType{1, -2}));
    EXPECT_EQ(below_canonical_form(4, 1, 2, false), stable_form(4, 1, 2, 0));
    EXPECT_THROW(below_canonical_form(2, 1, 1, true), Error);
}

TEST(SpreadBound, AnyLineBundleExamples) {
    const SpreadBound corollary = spread_bound({2, 3, 1, 0}, BoundMode::kAnyLineBundle);
    EXPECT_EQ(corollary.bound, Rational(2));
    EXPECT_EQ(corollary.case_tag, BoundCase::kGenusTwo);

    const SpreadBound double_cover = spread_bound({5, 2, 1, 0}, BoundMode::kAnyLineBundle);
    EXPECT_EQ(double_cover.bound, Rational(6));
    EXPECT_EQ(double_cover.case_tag, BoundCase::kDoubleCover);

    const SpreadBound odd = spread_bound({4, 3, 1, 0}, BoundMode::kAnyLineBundle);
    EXPECT_EQ(odd.bound, Rational(13, 3));
    EXPECT_EQ(to_string(odd.bound), "13/3");
    EXPECT_EQ(floor(odd.bound), 4);

    const SpreadBound even = spread_bound({9, 6, 1, 0}, BoundMode::kAnyLineBundle);
    EXPECT_EQ(even.bound, Rational(16, 6) + Rational(5, 2));
    EXPECT_EQ(even.case_tag, BoundCase::kEvenMapDegree);

    EXPECT_EQ(spread_bound({3, 5, 1, 0}, BoundMode::kAnyLineBundle).case_tag, BoundCase::kLargeMapDegree);
}

TEST(SpreadBound, GenericAndDegreeSpecific) {
    EXPECT_EQ(spread_bound({3, 3, 1, 0}, BoundMode::kGenericLineBundle).bound, Rational(1));
    // n <= g - 1: generic hypothesis does not apply.
    EXPECT_EQ(spread_bound({5, 3, 1, 0}, BoundMode::kGenericLineBundle).case_tag, BoundCase::kOddMapDegree);

    const SpreadBound below = spread_bound({4, 4, 1, 2}, BoundMode::kDegreeSpecific);
    EXPECT_EQ(below.bound, Rational(3));
    EXPECT_EQ(below.case_tag, BoundCase::kDegreeBelowCanonical);
    ASSERT_TRUE(below.equality_condition.has_value());
    EXPECT_EQ(*below.equality_condition, (EqualityCondition{EqualityCondition::Kind::kCanonicalTwist, -1}));
    EXPECT_EQ(below.equality_condition->to_string(), "L = f^*O(-1) (x) K");

    const SpreadBound near = spread_bound({4, 4, 1, 3 + 4}, BoundMode::kDegreeSpecific);
    EXPECT_EQ(near.bound, Rational(2));
    EXPECT_EQ(near.case_tag, BoundCase::kDegreeNearCanonical);

    const SpreadBound above = spread_bound({4, 4, 1, 4 - 8}, BoundMode::kDegreeSpecific);
    EXPECT_EQ(above.bound, Rational(3));
    EXPECT_EQ(*above.equality_condition, (EqualityCondition{EqualityCondition::Kind::kPullback, -1}));

    EXPECT_EQ(spread_bound({4, 4, 1, 2}, BoundMode::kDegreeSpecific, false).bound, Rational(2));

    // Genus 2, n = 2: the double-cover bound ties at 3; the degree case carries the equality condition.
    const SpreadBound tie = spread_bound({2, 2, 1, 0}, BoundMode::kDegreeSpecific);
    EXPECT_EQ(tie.bound, Rational(3));
    EXPECT_TRUE(tie.equality_condition.has_value());
}

TEST(SpreadBound, Errors) {
    try {
        spread_bound({1, 4, 1, 0}, BoundMode::kAnyLineBundle);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kOutOfScope);
    }
    EXPECT_THROW(spread_bound({3, 1, 1, 0}, BoundMode::kAnyLineBundle), Error);
    EXPECT_THROW(spread_bound({3, 4, 2, 0}, BoundMode::kAnyLineBundle), Error);
}

TEST(SpreadBound, NeverBelowTwoForArbitraryBundles) {
    // A bundle with h0 and h1 both nonzero already has spread >= 2.
    for (Int g = 2; g <= 12; ++g)
        for (Int n = 2; n <= 30; ++n) {
            const SpreadBound b = spread_bound({g, n, 1, 0}, BoundMode::kAnyLineBundle);
            EXPECT_GE(b.bound, Rational(2));
            if (n % 2 == 1) { EXPECT_LE(b.bound, Rational(2 * g, 3) + Rational(5, 3)); }
            if (n % 2 == 0 && n >= 4) { EXPECT_LE(b.bound, Rational(g, 2) + Rational(2)); }
            if (n == 2) { EXPECT_EQ(b.bound, Rational(g + 1)); }
        }
}

}  // namespace
}  // namespace pushforward
