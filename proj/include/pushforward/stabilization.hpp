#pragma once

// Duality, the Riemann-Roch defect between h^0 and h^1 sequences, the
// stable shape of direct images for large map degree, and the bounds on
// the spread s(L, f) of line-bundle direct images.

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "pushforward/error.hpp"
#include "pushforward/splitting.hpp"

namespace pushforward {

using Rational = boost::rational<Int>;

inline std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline Int floor(const Rational& q) { return floor_div(q.numerator(), q.denominator()); }

/// A map f: X -> P^1 of degree n from a genus-g curve, and a bundle of rank r, degree d on X.
struct CurveMapContext {
    Int g = 0;
    Int n = 1;
    Int r = 1;
    Int d = 0;
};

/// a_l - b_l = chi(E (x) f^*O(-l)) = (d - r n l) + r (1 - g).
inline Int rr_defect(const CurveMapContext& ctx, Int ell) noexcept {
    return (ctx.d - ctx.r * ctx.n * ell) + ctx.r * (1 - ctx.g);
}

/// Converts an h^0 sequence into the matching h^1 sequence on the same window.
inline CohSequence b_sequence_from_a(const CohSequence& a, const CurveMapContext& ctx) {
    if (a.mode() != CohMode::kH0) throw Error(ErrorCode::kInvalidSequence, "expected an h^0 sequence");
    std::vector<Int> b;
    b.reserve(a.values().size());
    for (Int ell = a.lo(); ell <= a.hi(); ++ell) {
        const Int v = a.at(ell) - rr_defect(ctx, ell);
        if (v < 0)
            throw Error(ErrorCode::kNegativeH1, "h^1 at l = " + std::to_string(ell) + " would be " + std::to_string(v) +
                                                    "; context and sequence are inconsistent");
        b.push_back(v);
    }
    try {
        return CohSequence(a.lo(), std::move(b), a.rank_hint(), CohMode::kH1);
    } catch (const Error& e) {
        throw Error(ErrorCode::kNegativeH1, std::string("derived h^1 sequence is invalid: ") + e.what());
    }
}

/// f_*(K_X (x) E^*) = K_{P^1} (x) (f_* E).
inline bool verify_duality(const SplittingType& push_e, const SplittingType& push_k_dual_e) {
    if (push_e.rank() != push_k_dual_e.rank())
        throw Error(ErrorCode::kRankMismatch, "ranks " + std::to_string(push_e.rank()) + " and " +
                                                  std::to_string(push_k_dual_e.rank()) + " differ");
    return push_k_dual_e == serre_dual(push_e);
}

/// h0 O(q) + (n - h0 - h1) O(q-1) + h1 O(q-2): the direct image of a line
/// bundle once the map degree exceeds 2g - 2. h0 and h1 are those of L (x) f^*O(-q).
inline SplittingType stable_form(Int n, Int h0_value, Int h1_value, Int q) {
    if (n < 1) throw Error(ErrorCode::kInvalidDegree, "map degree must be >= 1");
    if (h0_value < 0 || h1_value < 0) throw Error(ErrorCode::kInvalidSequence, "h0 and h1 must be nonnegative");
    if (h0_value + h1_value > n)
        throw Error(ErrorCode::kOverfull, "h0 + h1 = " + std::to_string(h0_value + h1_value) +
                                              " exceeds the map degree " + std::to_string(n));
    return SplittingType::from_runs({{q, h0_value}, {q - 1, n - h0_value - h1_value}, {q - 2, h1_value}});
}

/// Direct image of L with deg L = g - 2 and n > g - 1 (h0, h1 those of L).
/// When f^*O(1) (x) L = K one O(-2) becomes O(-3) and one O(-1) is gained:
/// h0 O + (n-h0-h1+1) O(-1) + (h1-2) O(-2) + O(-3).
inline SplittingType below_canonical_form(Int n, Int h0_value, Int h1_value, bool pulls_back_to_canonical) {
    if (!pulls_back_to_canonical) return stable_form(n, h0_value, h1_value, 0);
    if (h1_value < 2 || n - h0_value - h1_value + 1 < 0)
        throw Error(ErrorCode::kOverfull, "h0 = " + std::to_string(h0_value) + ", h1 = " + std::to_string(h1_value) +
                                              " cannot occur with f^*O(1) (x) L = K at n = " + std::to_string(n));
    return SplittingType::from_runs({{0, h0_value}, {-1, n - h0_value - h1_value + 1}, {-2, h1_value - 2}, {-3, 1}});
}

/// Direct image of L with deg L = g and n > g - 1, by duality with the
/// degree g - 2 bundle K (x) L^*. The special case is L = f^*O(1).
inline SplittingType above_canonical_form(Int n, Int h0_value, Int h1_value, bool is_pullback_of_o1) {
    return serre_dual(below_canonical_form(n, h1_value, h0_value, is_pullback_of_o1));
}

enum class BoundCase {
    kGenusTwo,          // g = 2, n > 2
    kLargeMapDegree,    // n > 2g - 2
    kGeneric,           // general L, n > g - 1
    kDegreeNearCanonical,  // d = g - 1 up to twist, n > g - 1
    kDegreeBelowCanonical, // d = g - 2 up to twist, n > g - 1
    kDegreeAboveCanonical, // d = g up to twist, n > g - 1
    kDoubleCover,       // n = 2: g + 1
    kOddMapDegree,      // (2g - 5/2)/n + 5/2
    kEvenMapDegree,     // (2g - 2)/n + 5/2
    kUniformOdd,        // (2/3) g + 5/3, n odd >= 3
    kUniformEven,       // (1/2) g + 2, n even >= 4
};

inline std::string to_string(BoundCase c) {
    switch (c) {
        case BoundCase::kGenusTwo: return "genus-two";
        case BoundCase::kLargeMapDegree: return "large-map-degree";
        case BoundCase::kGeneric: return "generic";
        case BoundCase::kDegreeNearCanonical: return "degree-g-minus-1";
        case BoundCase::kDegreeBelowCanonical: return "degree-g-minus-2";
        case BoundCase::kDegreeAboveCanonical: return "degree-g";
        case BoundCase::kDoubleCover: return "double-cover";
        case BoundCase::kOddMapDegree: return "odd-map-degree";
        case BoundCase::kEvenMapDegree: return "even-map-degree";
        case BoundCase::kUniformOdd: return "uniform-odd";
        case BoundCase::kUniformEven: return "uniform-even";
    }
    return "unknown";
}

/// When the degree-specific bound of 3 can be attained:
/// L = f^*O(twist) (x) K, or L = f^*O(twist).
struct EqualityCondition {
    enum class Kind { kCanonicalTwist, kPullback };
    Kind kind;
    Int twist;

    bool operator==(const EqualityCondition&) const = default;

    std::string to_string() const {
        const std::string pullback = "f^*O(" + std::to_string(twist) + ")";
        return kind == Kind::kCanonicalTwist ? "L = " + pullback + " (x) K" : "L = " + pullback;
    }
};

struct SpreadBound {
    Rational bound;
    BoundCase case_tag;
    std::optional<EqualityCondition> equality_condition;
};

enum class BoundMode { kGenericLineBundle, kAnyLineBundle, kDegreeSpecific };

namespace detail {

inline void offer(std::optional<SpreadBound>& best, SpreadBound candidate) {
    // On ties keep the earlier case, unless only the candidate knows when equality holds.
    if (!best || candidate.bound < best->bound ||
        (candidate.bound == best->bound && candidate.equality_condition && !best->equality_condition))
        best = std::move(candidate);
}

inline SpreadBound any_line_bundle_bound(Int g, Int n) {
    std::optional<SpreadBound> best;
    if (g == 2 && n > 2) offer(best, {Rational(2), BoundCase::kGenusTwo, std::nullopt});
    if (n > 2 * g - 2) offer(best, {Rational(2), BoundCase::kLargeMapDegree, std::nullopt});
    if (n == 2) offer(best, {Rational(g + 1), BoundCase::kDoubleCover, std::nullopt});
    if (n % 2 == 1) {
        offer(best, {Rational(4 * g - 5, 2 * n) + Rational(5, 2), BoundCase::kOddMapDegree, std::nullopt});
        if (n >= 3) offer(best, {Rational(2 * g, 3) + Rational(5, 3), BoundCase::kUniformOdd, std::nullopt});
    } else {
        offer(best, {Rational(2 * g - 2, n) + Rational(5, 2), BoundCase::kEvenMapDegree, std::nullopt});
        if (n >= 4) offer(best, {Rational(g, 2) + Rational(2), BoundCase::kUniformEven, std::nullopt});
    }
    return *best;
}

}  // namespace detail

/// The smallest applicable bound on s(L, f) for a line bundle L of degree
/// ctx.d on a genus-g curve (g >= 2) mapping with degree n.
///
/// kDegreeSpecific applies the d in {g-2, g-1, g} cases after twisting d
/// by a multiple of n; `pulls_back_to_canonical` (f^*O(1) (x) L = K for
/// d = g - 2, or L = f^*O(1) for d = g, after the same twist) narrows the
/// bound of 3 to 2 when known to be false.
inline SpreadBound spread_bound(const CurveMapContext& ctx, BoundMode mode,
                                std::optional<bool> pulls_back_to_canonical = std::nullopt) {
    const Int g = ctx.g;
    const Int n = ctx.n;
    if (g <= 1)
        throw Error(ErrorCode::kOutOfScope,
                    "spread bounds need genus >= 2; genus 0 and 1 have exact direct images");
    if (n < 2) throw Error(ErrorCode::kInvalidDegree, "a curve of positive genus has no degree-1 map to P^1");
    if (ctx.r != 1) throw Error(ErrorCode::kOutOfScope, "spread bounds are stated for line bundles only");

    std::optional<SpreadBound> best = detail::any_line_bundle_bound(g, n);
    if (mode == BoundMode::kGenericLineBundle && n > g - 1)
        detail::offer(best, {Rational(1), BoundCase::kGeneric, std::nullopt});

    if (mode == BoundMode::kDegreeSpecific && n > g - 1) {
        const Int d = ctx.d;
        if (floor_mod(d - (g - 1), n) == 0) {
            detail::offer(best, {Rational(2), BoundCase::kDegreeNearCanonical, std::nullopt});
        } else if (floor_mod(d - (g - 2), n) == 0) {
            // L (x) f^*O(-shift) has degree g - 2; equality needs it to be f^*O(-1) (x) K.
            const Int shift = floor_div(d - (g - 2), n);
            if (pulls_back_to_canonical == false)
                detail::offer(best, {Rational(2), BoundCase::kDegreeBelowCanonical, std::nullopt});
            else
                detail::offer(best, {Rational(3), BoundCase::kDegreeBelowCanonical,
                                     EqualityCondition{EqualityCondition::Kind::kCanonicalTwist, shift - 1}});
        } else if (floor_mod(d - g, n) == 0) {
            const Int shift = floor_div(d - g, n);
            if (pulls_back_to_canonical == false)
                detail::offer(best, {Rational(2), BoundCase::kDegreeAboveCanonical, std::nullopt});
            else
                detail::offer(best, {Rational(3), BoundCase::kDegreeAboveCanonical,
                                     EqualityCondition{EqualityCondition::Kind::kPullback, shift + 1}});
        }
    }
    return *best;
}

}  // namespace pushforward
