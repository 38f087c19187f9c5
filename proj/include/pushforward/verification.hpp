#pragma once

// Closed-form predictions and bounds evaluated on concrete oracle instances.

#include <optional>

#include "pushforward/genus1.hpp"
#include "pushforward/hyperelliptic.hpp"
#include "pushforward/stabilization.hpp"

namespace pushforward {

/// Twist index q = floor(deg L / n) and the cohomology of L (x) f^*O(-q).
struct UntwistedCohomology {
    Int q;
    Int h0;
    Int h1;
};

inline UntwistedCohomology untwisted_cohomology(const HyperellipticCurve& curve, const Divisor& l,
                                                const ComposedMap& map) {
    const Int n = map.degree();
    const Int q = floor_div(l.degree(), n);
    const Divisor shifted = l - Divisor(q * n);
    return {q, curve.rr_space_dim(shifted), curve.h1(shifted)};
}

inline CurveMapContext context_of(const HyperellipticCurve& curve, const Divisor& l, const ComposedMap& map) {
    return {curve.genus(), map.degree(), 1, l.degree()};
}

/// For deg L = g - 2 or g up to a twist by f^*O(1) (and n > g - 1): whether L
/// is in the class that can attain spread 3. nullopt outside those cases.
inline std::optional<bool> attains_degree_case_equality(const HyperellipticCurve& curve, const Divisor& l,
                                                        const ComposedMap& map) {
    const SpreadBound abstract = spread_bound(context_of(curve, l, map), BoundMode::kDegreeSpecific);
    if (!abstract.equality_condition) return std::nullopt;
    const EqualityCondition& cond = *abstract.equality_condition;
    Divisor target(cond.twist * map.degree());
    if (cond.kind == EqualityCondition::Kind::kCanonicalTwist) target += curve.canonical_divisor();
    return curve.linearly_equivalent(l, target);
}

/// Degree-specific bound with the equality flag decided on the curve.
inline SpreadBound concrete_spread_bound(const HyperellipticCurve& curve, const Divisor& l, const ComposedMap& map) {
    return spread_bound(context_of(curve, l, map), BoundMode::kDegreeSpecific,
                        attains_degree_case_equality(curve, l, map));
}

/// Exceptionality flag of a line bundle on a genus-1 curve, as the closed form expects it.
inline Exceptional exceptional_flag(const HyperellipticCurve& curve, const Divisor& l, const ComposedMap& map) {
    if (floor_mod(l.degree(), map.degree()) != 0) return Exceptional::kNotApplicable;
    return is_exceptional_class(curve, l, map) ? Exceptional::kYes : Exceptional::kNo;
}

inline SplittingType genus1_prediction(const HyperellipticCurve& curve, const Divisor& l, const ComposedMap& map) {
    return direct_image_g1(map.degree(), AtiyahBundleSpec{1, l.degree(), exceptional_flag(curve, l, map)});
}

}  // namespace pushforward
