#pragma once

// Seeded verification campaigns: each trial samples an instance, computes a
// quantity two independent ways and records whether they agree.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pushforward/genus0.hpp"
#include "pushforward/sampling.hpp"
#include "pushforward/verification.hpp"

namespace pushforward {

enum class Campaign { kGenus0, kGenus1, kDuality, kStabilization, kComposition, kRiemannRoch };

inline constexpr std::array<Campaign, 6> kAllCampaigns{Campaign::kGenus0,        Campaign::kGenus1,
                                                       Campaign::kDuality,       Campaign::kStabilization,
                                                       Campaign::kComposition,   Campaign::kRiemannRoch};

inline std::string to_string(Campaign c) {
    switch (c) {
        case Campaign::kGenus0: return "genus0";
        case Campaign::kGenus1: return "genus1";
        case Campaign::kDuality: return "duality";
        case Campaign::kStabilization: return "stabilization";
        case Campaign::kComposition: return "composition";
        case Campaign::kRiemannRoch: return "riemann-roch";
    }
    return "unknown";
}

inline std::optional<Campaign> parse_campaign(const std::string& name) {
    for (Campaign c : kAllCampaigns)
        if (to_string(c) == name) return c;
    return std::nullopt;
}

struct CampaignOptions {
    std::uint64_t seed = 0;
    Int trials = 100;
    Int max_genus = 3;
    Int max_m = 3;
};

struct FailureExemplar {
    Int index;
    std::string input;
    std::string expected;
    std::string actual;
};

struct CampaignReport {
    std::string campaign;
    std::uint64_t seed = 0;
    Int instances = 0;
    Int passed = 0;
    Int failed = 0;
    double wall_ms = 0.0;
    std::vector<FailureExemplar> exemplars;  // ordered by instance index
};

inline constexpr std::size_t kMaxExemplars = 10;

namespace detail {

// A trial returns nullopt on success or the failing comparison.
using TrialResult = std::optional<FailureExemplar>;

inline FailureExemplar mismatch(std::string input, std::string expected, std::string actual) {
    return {0, std::move(input), std::move(expected), std::move(actual)};
}

inline std::string describe(const HyperellipticCurve& curve, const Divisor& l, Int m) {
    return "curve=\"" + curve.to_string() + "\" divisor=\"" + l.to_string() + "\" m=" + std::to_string(m);
}

template <class Rng>
Int uniform(Rng& rng, Int lo, Int hi) {
    return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

template <class Rng>
TrialResult genus0_trial(Rng& rng, const CampaignOptions&) {
    const Int n = uniform(rng, 1, 8);
    const Int m = uniform(rng, -20, 20);
    const Int ell = uniform(rng, -3, 3);
    const std::string input = "n=" + std::to_string(n) + " m=" + std::to_string(m);
    const SplittingType closed = direct_image_g0(n, m);
    const CohSequence a = g0_oracle_sequence(n, m);
    const SplittingType extracted = splitting_from_h0_sequence(a);
    if (extracted != closed) return mismatch(input, closed.to_string(), extracted.to_string());
    const SplittingType via_h1 = splitting_from_h1_sequence(b_sequence_from_a(a, {0, n, 1, m}));
    if (via_h1 != closed) return mismatch(input + " (h^1 route)", closed.to_string(), via_h1.to_string());
    if (direct_image_g0(n, m + ell * n) != twist(closed, ell))
        return mismatch(input + " l=" + std::to_string(ell) + " (projection formula)", twist(closed, ell).to_string(),
                        direct_image_g0(n, m + ell * n).to_string());
    if (serre_dual(closed) != direct_image_g0(n, -2 - m))
        return mismatch(input + " (duality)", serre_dual(closed).to_string(), direct_image_g0(n, -2 - m).to_string());
    return std::nullopt;
}

template <class Rng>
TrialResult genus1_trial(Rng& rng, const CampaignOptions& opt) {
    const auto curve = random_curve(rng, 1);
    const Divisor l = random_divisor(rng, curve);
    const ComposedMap map(uniform(rng, 1, opt.max_m));
    const SplittingType expected = genus1_prediction(curve, l, map);
    const SplittingType actual = pushforward(curve, l, map);
    if (expected != actual) return mismatch(describe(curve, l, map.m), expected.to_string(), actual.to_string());
    return std::nullopt;
}

template <class Rng>
TrialResult duality_trial(Rng& rng, const CampaignOptions& opt) {
    const auto curve = random_curve(rng, uniform(rng, 1, std::max<Int>(1, opt.max_genus)));
    const Divisor l = random_divisor(rng, curve);
    const ComposedMap map(uniform(rng, 1, opt.max_m));
    const SplittingType push = pushforward(curve, l, map);
    const SplittingType push_dual = pushforward(curve, curve.canonical_divisor() - l, map);
    if (!verify_duality(push, push_dual))
        return mismatch(describe(curve, l, map.m), serre_dual(push).to_string(), push_dual.to_string());
    return std::nullopt;
}

template <class Rng>
TrialResult stabilization_trial(Rng& rng, const CampaignOptions& opt) {
    const auto curve = random_curve(rng, uniform(rng, 2, std::max<Int>(2, opt.max_genus)));
    const Divisor l = random_divisor(rng, curve);
    const ComposedMap map(uniform(rng, 1, opt.max_m));
    const Int g = curve.genus();
    const std::string input = describe(curve, l, map.m);
    const SplittingType push = pushforward(curve, l, map);

    const SpreadBound any = spread_bound(context_of(curve, l, map), BoundMode::kAnyLineBundle);
    const SpreadBound specific = concrete_spread_bound(curve, l, map);
    const Int allowed = std::min(floor(any.bound), floor(specific.bound));
    if (spread(push) > allowed)
        return mismatch(input + " (spread bound " + to_string(specific.case_tag) + ")",
                        "spread <= " + std::to_string(allowed), push.to_string());
    if (map.degree() > 2 * g - 2) {
        const UntwistedCohomology u = untwisted_cohomology(curve, l, map);
        const SplittingType stable = stable_form(map.degree(), u.h0, u.h1, u.q);
        if (stable != push) return mismatch(input + " (stable form)", stable.to_string(), push.to_string());
    }
    return std::nullopt;
}

template <class Rng>
TrialResult composition_trial(Rng& rng, const CampaignOptions& opt) {
    const auto curve = random_curve(rng, uniform(rng, 1, std::max<Int>(1, opt.max_genus)));
    const Divisor l = random_divisor(rng, curve);
    const ComposedMap map(uniform(rng, 2, std::max<Int>(2, opt.max_m)));
    const SplittingType one_shot = pushforward(curve, l, map);
    const SplittingType two_stage = direct_image_g0_bundle(map.m, pushforward(curve, l, ComposedMap(1)));
    if (one_shot != two_stage) return mismatch(describe(curve, l, map.m), two_stage.to_string(), one_shot.to_string());
    return std::nullopt;
}

template <class Rng>
TrialResult riemann_roch_trial(Rng& rng, const CampaignOptions& opt) {
    const auto curve = random_curve(rng, uniform(rng, 1, std::max<Int>(1, opt.max_genus)));
    const Divisor l = random_divisor(rng, curve);
    const ComposedMap map(uniform(rng, 1, opt.max_m));
    const std::string input = describe(curve, l, map.m);
    const Int lhs = curve.rr_space_dim(l) - curve.h1(l);
    const Int rhs = l.degree() + 1 - curve.genus();
    if (lhs != rhs) return mismatch(input + " (h0 - h1)", std::to_string(rhs), std::to_string(lhs));
    const CohSequence a = a_sequence(curve, l, map);
    const CurveMapContext ctx = context_of(curve, l, map);
    for (Int ell = a.lo(); ell <= a.hi(); ++ell) {
        const Int b = curve.h1(l - Divisor(map.degree() * ell));
        if (a.at(ell) - b != rr_defect(ctx, ell))
            return mismatch(input + " (defect at l=" + std::to_string(ell) + ")", std::to_string(rr_defect(ctx, ell)),
                            std::to_string(a.at(ell) - b));
    }
    return std::nullopt;
}

}  // namespace detail

/// Runs `opt.trials` seeded trials. Trial i draws from its own generator
/// seeded by (seed, i), so any instance can be replayed in isolation.
inline CampaignReport run_campaign(Campaign campaign, const CampaignOptions& opt) {
    if (opt.trials < 0) throw Error(ErrorCode::kParse, "trials must be nonnegative");
    if (opt.max_m < 1) throw Error(ErrorCode::kParse, "max-m must be >= 1");
    if (opt.max_genus < 1) throw Error(ErrorCode::kParse, "max-genus must be >= 1");

    CampaignReport report;
    report.campaign = to_string(campaign);
    report.seed = opt.seed;
    const auto start = std::chrono::steady_clock::now();
    for (Int i = 0; i < opt.trials; ++i) {
        std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                          static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(static_cast<std::uint64_t>(i) >> 32)};
        std::mt19937_64 rng(seq);
        detail::TrialResult result;
        try {
            switch (campaign) {
                case Campaign::kGenus0: result = detail::genus0_trial(rng, opt); break;
                case Campaign::kGenus1: result = detail::genus1_trial(rng, opt); break;
                case Campaign::kDuality: result = detail::duality_trial(rng, opt); break;
                case Campaign::kStabilization: result = detail::stabilization_trial(rng, opt); break;
                case Campaign::kComposition: result = detail::composition_trial(rng, opt); break;
                case Campaign::kRiemannRoch: result = detail::riemann_roch_trial(rng, opt); break;
            }
        } catch (const Error& e) {
            result = detail::mismatch("trial " + std::to_string(i), "no error", e.what());
        }
        ++report.instances;
        if (!result) {
            ++report.passed;
            continue;
        }
        ++report.failed;
        if (report.exemplars.size() < kMaxExemplars) {
            result->index = i;
            report.exemplars.push_back(std::move(*result));
        }
    }
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace pushforward
