#pragma once

// Split vector bundles on the projective line and the second-difference
// recovery of a splitting type from its twisted h^0 (or h^1) sequence.

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pushforward/error.hpp"

namespace pushforward {

/// One run of the canonical form: `mult` copies of O(`twist`).
struct TwistRun {
    Int twist;
    Int mult;

    bool operator==(const TwistRun&) const = default;
};

/// A bundle O(n_1) + ... + O(n_r) on P^1, stored as a run-length encoded
/// multiset in descending twist order. Rank zero is rejected.
class SplittingType {
public:
    SplittingType(std::initializer_list<Int> twists)
        : SplittingType(std::vector<Int>(twists)) {}

    explicit SplittingType(const std::vector<Int>& twists) {
        std::map<Int, Int, std::greater<>> counts;
        for (Int t : twists) ++counts[t];
        assign(counts);
    }

    /// Build from (twist, multiplicity) pairs; zero multiplicities are dropped,
    /// repeated twists are merged.
    static SplittingType from_runs(const std::vector<TwistRun>& runs) {
        std::map<Int, Int, std::greater<>> counts;
        for (const auto& run : runs) {
            if (run.mult < 0) {
                throw Error(ErrorCode::kInvalidSequence,
                            "negative multiplicity " + std::to_string(run.mult) + " for twist " +
                                std::to_string(run.twist));
            }
            if (run.mult > 0) counts[run.twist] += run.mult;
        }
        SplittingType result;
        result.assign(counts);
        return result;
    }

    const std::vector<TwistRun>& runs() const noexcept { return runs_; }

    /// Expanded descending list of twists, one entry per summand.
    std::vector<Int> twists() const {
        std::vector<Int> out;
        out.reserve(static_cast<std::size_t>(rank_));
        for (const auto& run : runs_) out.insert(out.end(), static_cast<std::size_t>(run.mult), run.twist);
        return out;
    }

    Int rank() const noexcept { return rank_; }
    Int degree() const noexcept { return degree_; }
    Int max_twist() const noexcept { return runs_.front().twist; }
    Int min_twist() const noexcept { return runs_.back().twist; }

    Int multiplicity(Int twist) const noexcept {
        for (const auto& run : runs_)
            if (run.twist == twist) return run.mult;
        return 0;
    }

    bool operator==(const SplittingType& other) const noexcept { return runs_ == other.runs_; }

    /// "{0, -1, -1}"
    std::string to_string() const {
        std::ostringstream os;
        os << '{';
        bool first = true;
        for (Int t : twists()) {
            if (!first) os << ", ";
            os << t;
            first = false;
        }
        os << '}';
        return os.str();
    }

private:
    SplittingType() = default;

    template <class Map>
    void assign(const Map& counts) {
        runs_.clear();
        rank_ = 0;
        degree_ = 0;
        for (const auto& [twist, mult] : counts) {
            runs_.push_back({twist, mult});
            rank_ += mult;
            degree_ += twist * mult;
        }
        if (rank_ == 0) throw Error(ErrorCode::kEmptySplitting, "a splitting type needs at least one summand");
    }

    std::vector<TwistRun> runs_;
    Int rank_ = 0;
    Int degree_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const SplittingType& b) { return os << b.to_string(); }

inline Int h0(const SplittingType& b) noexcept {
    Int total = 0;
    for (const auto& run : b.runs()) total += run.mult * std::max<Int>(0, run.twist + 1);
    return total;
}

inline Int h1(const SplittingType& b) noexcept {
    Int total = 0;
    for (const auto& run : b.runs()) total += run.mult * std::max<Int>(0, -run.twist - 1);
    return total;
}

/// B (x) O(ell).
inline SplittingType twist(const SplittingType& b, Int ell) {
    std::vector<TwistRun> runs = b.runs();
    for (auto& run : runs) run.twist += ell;
    return SplittingType::from_runs(runs);
}

/// K_{P^1} (x) B^*, i.e. n_j -> -n_j - 2.
inline SplittingType serre_dual(const SplittingType& b) {
    std::vector<TwistRun> runs = b.runs();
    for (auto& run : runs) run.twist = -run.twist - 2;
    return SplittingType::from_runs(runs);
}

inline Int spread(const SplittingType& b) noexcept { return b.max_twist() - b.min_twist(); }

/// Which cohomology a CohSequence records: a_l = h^0(B(-l)) or b_l = h^1(B(-l)).
enum class CohMode { kH0, kH1 };

/// The values of l -> h^i(B (x) O(-l)) on a finite window [lo, hi].
///
/// In h^0 mode the window must end in two zeros (a_{hi-1} = a_hi = 0), the
/// sequence must be nonincreasing and convex, and the second differences on
/// [lo, hi-2] must add up to `rank_hint`. The h^1 mode is the mirror image:
/// two leading zeros, nondecreasing, convex, and the same rank condition.
/// All of this is checked on construction.
class CohSequence {
public:
    CohSequence(Int lo, std::vector<Int> values, Int rank_hint, CohMode mode = CohMode::kH0)
        : lo_(lo), values_(std::move(values)), rank_hint_(rank_hint), mode_(mode) {
        validate();
    }

    Int lo() const noexcept { return lo_; }
    Int hi() const noexcept { return lo_ + static_cast<Int>(values_.size()) - 1; }
    const std::vector<Int>& values() const noexcept { return values_; }
    Int rank_hint() const noexcept { return rank_hint_; }
    CohMode mode() const noexcept { return mode_; }

    /// Value at ell; outside the window the sequence continues by its known
    /// shape (zeros on the vanishing side, linear with slope rank_hint on the other).
    Int at(Int ell) const noexcept {
        if (ell >= lo_ && ell <= hi()) return values_[static_cast<std::size_t>(ell - lo_)];
        if (mode_ == CohMode::kH0) return ell > hi() ? 0 : values_.front() + (lo_ - ell) * rank_hint_;
        return ell < lo_ ? 0 : values_.back() + (ell - hi()) * rank_hint_;
    }

    /// a_j - 2 a_{j+1} + a_{j+2}.
    Int second_difference(Int j) const noexcept { return at(j) - 2 * at(j + 1) + at(j + 2); }

    bool operator==(const CohSequence&) const = default;

private:
    void validate() const {
        if (rank_hint_ < 1) throw Error(ErrorCode::kInvalidSequence, "rank_hint must be positive");
        if (values_.size() < 3) throw Error(ErrorCode::kInvalidSequence, "window must hold at least three values");
        for (Int v : values_)
            if (v < 0) throw Error(ErrorCode::kInvalidSequence, "cohomology dimensions must be nonnegative");
        const std::size_t n = values_.size();
        if (mode_ == CohMode::kH0) {
            if (values_[n - 1] != 0 || values_[n - 2] != 0)
                throw Error(ErrorCode::kInvalidSequence, "h^0 window must end with two zeros");
            for (std::size_t i = 0; i + 1 < n; ++i)
                if (values_[i] < values_[i + 1])
                    throw Error(ErrorCode::kInvalidSequence,
                                "h^0 sequence increases at l = " + std::to_string(lo_ + static_cast<Int>(i)));
        } else {
            if (values_[0] != 0 || values_[1] != 0)
                throw Error(ErrorCode::kInvalidSequence, "h^1 window must start with two zeros");
            for (std::size_t i = 0; i + 1 < n; ++i)
                if (values_[i] > values_[i + 1])
                    throw Error(ErrorCode::kInvalidSequence,
                                "h^1 sequence decreases at l = " + std::to_string(lo_ + static_cast<Int>(i)));
        }
        Int total = 0;
        for (Int j = lo_; j <= hi() - 2; ++j) {
            const Int d2 = second_difference(j);
            if (d2 < 0)
                throw Error(ErrorCode::kNegativeSecondDifference,
                            "second difference at l = " + std::to_string(j) + " is " + std::to_string(d2));
            total += d2;
        }
        if (total != rank_hint_)
            throw Error(ErrorCode::kRankMismatch, "second differences sum to " + std::to_string(total) +
                                                      " but rank_hint is " + std::to_string(rank_hint_));
    }

    Int lo_;
    std::vector<Int> values_;
    Int rank_hint_;
    CohMode mode_;
};

namespace detail {

inline SplittingType extract(const CohSequence& seq) {
    std::vector<TwistRun> runs;
    for (Int j = seq.lo(); j <= seq.hi() - 2; ++j) runs.push_back({j, seq.second_difference(j)});
    return SplittingType::from_runs(runs);
}

}  // namespace detail

/// The multiplicity of O(j) is a_j - 2 a_{j+1} + a_{j+2}.
inline SplittingType splitting_from_h0_sequence(const CohSequence& a) {
    if (a.mode() != CohMode::kH0) throw Error(ErrorCode::kInvalidSequence, "expected an h^0 sequence");
    return detail::extract(a);
}

/// The multiplicity of O(j) is b_j - 2 b_{j+1} + b_{j+2}.
inline SplittingType splitting_from_h1_sequence(const CohSequence& b) {
    if (b.mode() != CohMode::kH1) throw Error(ErrorCode::kInvalidSequence, "expected an h^1 sequence");
    return detail::extract(b);
}

// Both minimal windows run from the lowest twist to two past the highest.

inline CohSequence h0_sequence_of(const SplittingType& b) {
    std::vector<Int> values;
    for (Int ell = b.min_twist(); ell <= b.max_twist() + 2; ++ell) values.push_back(h0(twist(b, -ell)));
    return CohSequence(b.min_twist(), std::move(values), b.rank(), CohMode::kH0);
}

inline CohSequence h1_sequence_of(const SplittingType& b) {
    std::vector<Int> values;
    for (Int ell = b.min_twist(); ell <= b.max_twist() + 2; ++ell) values.push_back(h1(twist(b, -ell)));
    return CohSequence(b.min_twist(), std::move(values), b.rank(), CohMode::kH1);
}

inline constexpr Int kDefaultDiscoverySteps = 1 << 16;

/// Query an oracle l -> a_l on demand and return the minimal valid window.
///
/// Finds the first l with a_l = 0 (starting the search at `start`), places
/// the top of the window one step above it, and then walks downward
/// accumulating second differences until they reach `rank_hint`.
template <class Query>
CohSequence discover_h0_sequence(Query&& query, Int rank_hint, Int start = 0,
                                 Int max_steps = kDefaultDiscoverySteps) {
    if (rank_hint < 1) throw Error(ErrorCode::kInvalidSequence, "rank_hint must be positive");
    std::map<Int, Int> cache;
    auto a = [&](Int ell) {
        auto it = cache.find(ell);
        if (it != cache.end()) return it->second;
        const Int v = query(ell);
        if (v < 0) throw Error(ErrorCode::kInvalidSequence, "oracle returned a negative dimension");
        cache.emplace(ell, v);
        return v;
    };

    Int zero = start;
    Int steps = 0;
    if (a(zero) > 0) {
        while (a(zero) > 0) {
            ++zero;
            if (++steps > max_steps) throw Error(ErrorCode::kInvalidSequence, "h^0 sequence never vanishes");
        }
    } else {
        while (a(zero - 1) == 0) {
            --zero;
            if (++steps > max_steps)
                throw Error(ErrorCode::kRankMismatch, "h^0 sequence vanishes on the whole search range");
        }
    }

    const Int hi = zero + 1;
    Int total = 0;
    Int ell = zero - 1;
    for (;; --ell) {
        const Int d2 = a(ell) - 2 * a(ell + 1) + a(ell + 2);
        if (d2 < 0)
            throw Error(ErrorCode::kNegativeSecondDifference,
                        "second difference at l = " + std::to_string(ell) + " is " + std::to_string(d2));
        total += d2;
        if (total == rank_hint) break;
        if (total > rank_hint)
            throw Error(ErrorCode::kRankMismatch, "second differences exceed rank_hint " + std::to_string(rank_hint));
        if (++steps > max_steps)
            throw Error(ErrorCode::kRankMismatch, "second differences never reach rank_hint");
    }

    // One more step must contribute nothing, otherwise the true rank is larger.
    if (const Int below = a(ell - 1) - 2 * a(ell) + a(ell + 1); below != 0)
        throw Error(ErrorCode::kRankMismatch, "second difference at l = " + std::to_string(ell - 1) + " is " +
                                                  std::to_string(below) + " beyond rank_hint " +
                                                  std::to_string(rank_hint));

    std::vector<Int> values;
    for (Int k = ell; k <= hi; ++k) values.push_back(a(k));
    return CohSequence(ell, std::move(values), rank_hint, CohMode::kH0);
}

/// Mirror image of discover_h0_sequence for an oracle l -> b_l = h^1.
template <class Query>
CohSequence discover_h1_sequence(Query&& query, Int rank_hint, Int start = 0,
                                 Int max_steps = kDefaultDiscoverySteps) {
    if (rank_hint < 1) throw Error(ErrorCode::kInvalidSequence, "rank_hint must be positive");
    std::map<Int, Int> cache;
    auto b = [&](Int ell) {
        auto it = cache.find(ell);
        if (it != cache.end()) return it->second;
        const Int v = query(ell);
        if (v < 0) throw Error(ErrorCode::kInvalidSequence, "oracle returned a negative dimension");
        cache.emplace(ell, v);
        return v;
    };

    Int zero = start;
    Int steps = 0;
    if (b(zero) > 0) {
        while (b(zero) > 0) {
            --zero;
            if (++steps > max_steps) throw Error(ErrorCode::kInvalidSequence, "h^1 sequence never vanishes");
        }
    } else {
        while (b(zero + 1) == 0) {
            ++zero;
            if (++steps > max_steps)
                throw Error(ErrorCode::kRankMismatch, "h^1 sequence vanishes on the whole search range");
        }
    }

    const Int lo = zero - 1;
    Int total = 0;
    Int j = lo;
    for (;; ++j) {
        const Int d2 = b(j) - 2 * b(j + 1) + b(j + 2);
        if (d2 < 0)
            throw Error(ErrorCode::kNegativeSecondDifference,
                        "second difference at l = " + std::to_string(j) + " is " + std::to_string(d2));
        total += d2;
        if (total == rank_hint) break;
        if (total > rank_hint)
            throw Error(ErrorCode::kRankMismatch, "second differences exceed rank_hint " + std::to_string(rank_hint));
        if (++steps > max_steps)
            throw Error(ErrorCode::kRankMismatch, "second differences never reach rank_hint");
    }

    if (const Int above = b(j + 1) - 2 * b(j + 2) + b(j + 3); above != 0)
        throw Error(ErrorCode::kRankMismatch, "second difference at l = " + std::to_string(j + 1) + " is " +
                                                  std::to_string(above) + " beyond rank_hint " +
                                                  std::to_string(rank_hint));

    std::vector<Int> values;
    for (Int k = lo; k <= j + 2; ++k) values.push_back(b(k));
    return CohSequence(lo, std::move(values), rank_hint, CohMode::kH1);
}

}  // namespace pushforward
