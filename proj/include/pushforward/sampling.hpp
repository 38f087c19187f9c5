#pragma once

// Random curves and divisors for verification campaigns.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "pushforward/hyperelliptic.hpp"

namespace pushforward {

inline constexpr std::array<std::uint64_t, 5> kCampaignPrimes{5, 7, 11, 13, 17};

/// Monic f of degree 2g + 1 with uniform lower coefficients, resampled until squarefree.
template <class Rng>
HyperellipticCurve random_curve(Rng& rng, Int genus, std::uint64_t p) {
    std::uniform_int_distribution<Int> coeff(0, static_cast<Int>(p) - 1);
    for (;;) {
        std::vector<Int> coeffs(static_cast<std::size_t>(2 * genus + 2));
        for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) coeffs[k] = coeff(rng);
        coeffs.back() = 1;
        try {
            return HyperellipticCurve(p, coeffs);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::kSingularCurve) throw;
        }
    }
}

template <class Rng>
HyperellipticCurve random_curve(Rng& rng, Int genus) {
    std::uniform_int_distribution<std::size_t> pick(0, kCampaignPrimes.size() - 1);
    return random_curve(rng, genus, kCampaignPrimes[pick(rng)]);
}

/// c_inf uniform in [-(2g+2), 2g+2] plus 0-3 affine points with multiplicities in [-2, 2].
template <class Rng>
Divisor random_divisor(Rng& rng, const HyperellipticCurve& curve, const std::vector<AffinePoint>& points) {
    const Int bound = 2 * curve.genus() + 2;
    std::uniform_int_distribution<Int> c_inf(-bound, bound);
    std::uniform_int_distribution<int> count(0, 3);
    std::uniform_int_distribution<Int> mult(-2, 2);
    Divisor d(c_inf(rng));
    const int k = count(rng);
    if (points.empty()) return d;
    std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
    for (int i = 0; i < k; ++i) d.add_point(points[pick(rng)], mult(rng));
    return d;
}

template <class Rng>
Divisor random_divisor(Rng& rng, const HyperellipticCurve& curve) {
    return random_divisor(rng, curve, curve.rational_points());
}

}  // namespace pushforward
