#include <gtest/gtest.h>

#include "pushforward/genus1.hpp"

namespace pushforward {
namespace {

ErrorCode code_of_g1(Int n, AtiyahBundleSpec spec) {
    try {
        direct_image_g1(n, spec);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::kParse;
}

TEST(EllipticCohomology, TableValues) {
    EXPECT_EQ(elliptic_cohomology({3, 2}), (Cohomology{2, 0}));
    EXPECT_EQ(elliptic_cohomology({2, 0, Exceptional::kYes}), (Cohomology{1, 1}));
    EXPECT_EQ(elliptic_cohomology({2, 0, Exceptional::kNo}), (Cohomology{0, 0}));
    EXPECT_EQ(elliptic_cohomology({1, -4}), (Cohomology{0, 4}));
    EXPECT_THROW(elliptic_cohomology({2, 0}), Error);
}

TEST(Genus1, DirectImageExamples) {
    EXPECT_EQ(direct_image_g1(2, {1, 1}), (SplittingType{0, -1}));
    EXPECT_EQ(direct_image_g1(2, {2, 0, Exceptional::kYes}), (SplittingType{0, -1, -1, -2}));
    EXPECT_EQ(direct_image_g1(2, {2, 0, Exceptional::kNo}), (SplittingType{-1, -1, -1, -1}));
    // q = -1, d - qrn = 1, (q+1)rn - d = 2.
    EXPECT_EQ(direct_image_g1(3, {1, -2}), (SplittingType{-1, -2, -2}));
}

TEST(Genus1, FlagErrors) {
    EXPECT_EQ(code_of_g1(2, {1, 2}), ErrorCode::kMissingFlag);
    EXPECT_EQ(code_of_g1(2, {1, 3, Exceptional::kYes}), ErrorCode::kExcessFlag);
    EXPECT_EQ(code_of_g1(1, {1, 3}), ErrorCode::kInvalidDegree);
    EXPECT_EQ(code_of_g1(2, {0, 3}), ErrorCode::kInvalidDegree);
}

TEST(Genus1, DirectSumIsUnionOfSummands) {
    const SplittingType sum = direct_image_g1(2, std::vector<AtiyahBundleSpec>{{1, 1}, {1, 0, Exceptional::kYes}});
    EXPECT_EQ(sum, (SplittingType{0, -1, 0, -2}));
}

// Grid over r <= 4, n in [2, 4], |d| <= 3rn, both flags where applicable.
template <class Check>
void for_each_spec(Check&& check) {
    for (Int r = 1; r <= 4; ++r)
        for (Int n = 2; n <= 4; ++n)
            for (Int d = -3 * r * n; d <= 3 * r * n; ++d) {
                if (d % (r * n) != 0) {
                    check(n, AtiyahBundleSpec{r, d});
                } else {
                    check(n, AtiyahBundleSpec{r, d, Exceptional::kYes});
                    check(n, AtiyahBundleSpec{r, d, Exceptional::kNo});
                }
            }
}

TEST(Genus1, Properties) {
    for_each_spec([](Int n, const AtiyahBundleSpec& spec) {
        const Int rn = spec.r * n;
        const SplittingType push = direct_image_g1(n, spec);
        EXPECT_EQ(push.rank(), rn);
        EXPECT_EQ(push.degree(), spec.d - rn);

        // Cohomology of E itself (E is E_r only in degree 0 with the flag set).
        const AtiyahBundleSpec own{spec.r, spec.d, spec.d == 0 ? spec.exceptional : Exceptional::kNotApplicable};
        EXPECT_EQ((Cohomology{h0(push), h1(push)}), elliptic_cohomology(own));

        // Cohomology of the untwisted bundle E (x) f^*O(-q).
        const Int q = floor_div(spec.d, rn);
        const AtiyahBundleSpec effective{spec.r, spec.d - q * rn, spec.exceptional};
        const SplittingType untwisted = twist(push, -q);
        EXPECT_EQ((Cohomology{h0(untwisted), h1(untwisted)}), elliptic_cohomology(effective));

        for (Int ell = -2; ell <= 2; ++ell)
            EXPECT_EQ(direct_image_g1(n, AtiyahBundleSpec{spec.r, spec.d + ell * rn, spec.exceptional}),
                      twist(push, ell));

        // K = O, so K (x) E^* has degree -d; E_r stays exceptional.
        EXPECT_EQ(serre_dual(push), direct_image_g1(n, AtiyahBundleSpec{spec.r, -spec.d, spec.exceptional}))
            << "r=" << spec.r << " d=" << spec.d << " n=" << n;

        EXPECT_EQ(spread(push), spec.exceptional == Exceptional::kYes ? 2 : (spec.d % rn == 0 ? 0 : 1));
    });
}

}  // namespace
}  // namespace pushforward
