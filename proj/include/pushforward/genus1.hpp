#pragma once

// Direct images of indecomposable bundles on an elliptic curve, from the
// rank/degree classification of such bundles.

#include <string>
#include <utility>
#include <vector>

#include "pushforward/error.hpp"
#include "pushforward/splitting.hpp"

namespace pushforward {

/// Whether E (x) f^*O(-q) is the distinguished degree-zero class E_r.
/// Only meaningful when d is a multiple of r n.
enum class Exceptional { kYes, kNo, kNotApplicable };

/// An indecomposable bundle of rank r and degree d on an elliptic curve.
struct AtiyahBundleSpec {
    Int r;
    Int d;
    Exceptional exceptional = Exceptional::kNotApplicable;
};

struct Cohomology {
    Int h0;
    Int h1;

    bool operator==(const Cohomology&) const = default;
};

/// h^0 and h^1 of an indecomposable bundle. For d = 0 the flag says
/// whether the bundle is E_r itself.
inline Cohomology elliptic_cohomology(const AtiyahBundleSpec& spec) {
    if (spec.r < 1) throw Error(ErrorCode::kInvalidDegree, "rank must be >= 1");
    if (spec.d != 0) {
        if (spec.exceptional != Exceptional::kNotApplicable)
            throw Error(ErrorCode::kExcessFlag, "exceptionality flag given for nonzero degree " +
                                                    std::to_string(spec.d));
        return spec.d > 0 ? Cohomology{spec.d, 0} : Cohomology{0, -spec.d};
    }
    switch (spec.exceptional) {
        case Exceptional::kYes: return {1, 1};
        case Exceptional::kNo: return {0, 0};
        case Exceptional::kNotApplicable: break;
    }
    throw Error(ErrorCode::kMissingFlag, "degree 0 needs the exceptionality flag");
}

/// Direct image under a degree-n map X -> P^1 from an elliptic curve.
///
/// With q = floor(d / rn), the result is (d - qrn) O(q) + ((q+1)rn - d) O(q-1),
/// except when E (x) f^*O(-q) = E_r, where it is O(q) + (rn-2) O(q-1) + O(q-2).
/// The flag must be given exactly when rn divides d. No degree-1 map from an
/// elliptic curve exists, so n >= 2 is required.
inline SplittingType direct_image_g1(Int n, const AtiyahBundleSpec& spec) {
    if (n < 2)
        throw Error(ErrorCode::kInvalidDegree,
                    "an elliptic curve has no map to P^1 of degree " + std::to_string(n));
    if (spec.r < 1) throw Error(ErrorCode::kInvalidDegree, "rank must be >= 1");
    const Int rn = spec.r * n;
    const Int q = floor_div(spec.d, rn);
    const Int rem = spec.d - q * rn;
    if (rem != 0) {
        if (spec.exceptional != Exceptional::kNotApplicable)
            throw Error(ErrorCode::kExcessFlag, "degree " + std::to_string(spec.d) + " is not a multiple of rn = " +
                                                    std::to_string(rn));
        return SplittingType::from_runs({{q, rem}, {q - 1, rn - rem}});
    }
    switch (spec.exceptional) {
        case Exceptional::kYes: return SplittingType::from_runs({{q, 1}, {q - 1, rn - 2}, {q - 2, 1}});
        case Exceptional::kNo: return SplittingType::from_runs({{q - 1, rn}});
        case Exceptional::kNotApplicable: break;
    }
    throw Error(ErrorCode::kMissingFlag,
                "degree " + std::to_string(spec.d) + " is a multiple of rn = " + std::to_string(rn) +
                    "; the exceptionality flag is required");
}

/// Direct image of a direct sum of indecomposables: union of the summands' images.
inline SplittingType direct_image_g1(Int n, const std::vector<AtiyahBundleSpec>& summands) {
    if (summands.empty()) throw Error(ErrorCode::kEmptySplitting, "no summands given");
    std::vector<TwistRun> runs;
    for (const auto& spec : summands) {
        const SplittingType image = direct_image_g1(n, spec);
        runs.insert(runs.end(), image.runs().begin(), image.runs().end());
    }
    return SplittingType::from_runs(runs);
}

}  // namespace pushforward
