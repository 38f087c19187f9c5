#pragma once

// Direct images under degree-n maps P^1 -> P^1. Only the degree enters.

#include <vector>

#include "pushforward/error.hpp"
#include "pushforward/splitting.hpp"

namespace pushforward {

/// m = q n + i with 0 <= i < n (floor quotient, also for negative m).
struct Genus0Input {
    Int n;
    Int m;

    Int q() const noexcept { return floor_div(m, n); }
    Int i() const noexcept { return floor_mod(m, n); }
};

namespace detail {

inline void require_map_degree(Int n) {
    if (n < 1) throw Error(ErrorCode::kInvalidDegree, "map degree must be >= 1, got " + std::to_string(n));
}

}  // namespace detail

/// f_* O(qn + i) = (i+1) O(q) + (n-i-1) O(q-1).
inline SplittingType direct_image_g0(Int n, Int m) {
    detail::require_map_degree(n);
    const Genus0Input in{n, m};
    return SplittingType::from_runs({{in.q(), in.i() + 1}, {in.q() - 1, n - in.i() - 1}});
}

/// Summand-wise pushforward of a split bundle on the source P^1.
inline SplittingType direct_image_g0_bundle(Int n, const SplittingType& source) {
    detail::require_map_degree(n);
    std::vector<TwistRun> runs;
    for (const auto& run : source.runs()) {
        const SplittingType image = direct_image_g0(n, run.twist);
        for (const auto& piece : image.runs())
            runs.push_back({piece.twist, piece.mult * run.mult});
    }
    return SplittingType::from_runs(runs);
}

/// a_l = h^0(O(m - l n)) = max(0, m - l n + 1), on the minimal window.
inline CohSequence g0_oracle_sequence(Int n, Int m) {
    detail::require_map_degree(n);
    auto a = [n, m](Int ell) { return std::max<Int>(0, m - ell * n + 1); };
    return discover_h0_sequence(a, n, floor_div(m, n) + 1);
}

}  // namespace pushforward
