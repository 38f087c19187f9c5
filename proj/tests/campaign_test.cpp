#include <gtest/gtest.h>

#include "pushforward/campaign.hpp"

namespace pushforward {
namespace {

TEST(Campaign, NamesRoundTrip) {
    for (Campaign c : kAllCampaigns) EXPECT_EQ(parse_campaign(to_string(c)), c);
    EXPECT_FALSE(parse_campaign("nope").has_value());
}

TEST(Campaign, EveryCampaignPassesSmallRuns) {
    for (Campaign c : kAllCampaigns) {
        const CampaignReport report = run_campaign(c, {7, 20, 3, 3});
        EXPECT_EQ(report.campaign, to_string(c));
        EXPECT_EQ(report.instances, 20);
        EXPECT_EQ(report.passed + report.failed, report.instances);
        EXPECT_EQ(report.failed, 0) << to_string(c) << ": "
                                    << (report.exemplars.empty() ? "" : report.exemplars.front().actual);
        EXPECT_EQ(report.exemplars.empty(), report.failed == 0);
    }
}

TEST(Campaign, ReproducibleFromSeed) {
    // Same seed, same instances: a scan of spreads must coincide.
    CampaignOptions opt{12345, 5, 2, 2};
    const CampaignReport a = run_campaign(Campaign::kDuality, opt);
    const CampaignReport b = run_campaign(Campaign::kDuality, opt);
    EXPECT_EQ(a.passed, b.passed);
    EXPECT_EQ(a.failed, b.failed);
}

TEST(Campaign, RejectsBadOptions) {
    EXPECT_THROW(run_campaign(Campaign::kGenus0, {1, -1, 3, 3}), Error);
    EXPECT_THROW(run_campaign(Campaign::kGenus1, {1, 5, 3, 0}), Error);
    EXPECT_THROW(run_campaign(Campaign::kDuality, {1, 5, 0, 1}), Error);
}

}  // namespace
}  // namespace pushforward
