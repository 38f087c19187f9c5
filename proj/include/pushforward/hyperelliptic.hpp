#pragma once

// Riemann-Roch spaces on hyperelliptic curves y^2 = f(x) over F_p with
// deg f = 2g + 1, and the direct images of line bundles under the maps
// X --x--> P^1 --z^m--> P^1 computed from them.
//
// Functions regular away from infinity are a(x) + b(x) y, with pole order
// max(2 deg a, 2 deg b + 2g + 1) at infinity. L(D) is found by multiplying
// through by a polynomial in x that clears the affine poles of D and then
// imposing vanishing orders at the affected points through local expansions.

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pushforward/error.hpp"
#include "pushforward/prime_field.hpp"
#include "pushforward/splitting.hpp"

namespace pushforward {

struct AffinePoint {
    fp::Elem x;
    fp::Elem y;

    auto operator<=>(const AffinePoint&) const = default;
};

/// c_inf * inf + sum of m_P * P over finitely many affine rational points.
class Divisor {
public:
    Divisor() = default;
    explicit Divisor(Int c_inf) : c_inf_(c_inf) {}

    static Divisor point(const AffinePoint& pt, Int mult = 1) {
        Divisor d;
        d.add_point(pt, mult);
        return d;
    }

    Int c_inf() const noexcept { return c_inf_; }
    const std::map<AffinePoint, Int>& affine_part() const noexcept { return affine_; }

    Int multiplicity(const AffinePoint& pt) const noexcept {
        auto it = affine_.find(pt);
        return it == affine_.end() ? 0 : it->second;
    }

    Int degree() const noexcept {
        Int total = c_inf_;
        for (const auto& [pt, mult] : affine_) total += mult;
        return total;
    }

    Divisor& add_point(const AffinePoint& pt, Int mult) {
        if (mult == 0) return *this;
        const Int updated = (affine_[pt] += mult);
        if (updated == 0) affine_.erase(pt);
        return *this;
    }

    Divisor& operator+=(const Divisor& other) {
        c_inf_ += other.c_inf_;
        for (const auto& [pt, mult] : other.affine_) add_point(pt, mult);
        return *this;
    }
    Divisor& operator-=(const Divisor& other) { return *this += -other; }

    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }

    Divisor operator-() const {
        Divisor out(-c_inf_);
        for (const auto& [pt, mult] : affine_) out.affine_.emplace(pt, -mult);
        return out;
    }

    bool operator==(const Divisor&) const = default;

    /// Same syntax the CLI reads: "inf:<c>; pt:<x>,<y>:<mult>; ...".
    std::string to_string() const {
        std::ostringstream os;
        os << "inf:" << c_inf_;
        for (const auto& [pt, mult] : affine_) os << "; pt:" << pt.x << ',' << pt.y << ':' << mult;
        return os.str();
    }

private:
    Int c_inf_ = 0;
    std::map<AffinePoint, Int> affine_;
};

/// x followed by z -> z^m; total degree 2m, pulling O(1) back to 2m * inf.
struct ComposedMap {
    Int m = 1;

    explicit ComposedMap(Int m_) : m(m_) {
        if (m < 1) throw Error(ErrorCode::kInvalidDegree, "composed map needs m >= 1");
    }

    Int degree() const noexcept { return 2 * m; }
    Divisor pullback_of_o1() const { return Divisor(2 * m); }
};

class HyperellipticCurve {
public:
    /// `coeffs` lists f from the constant term up; f must be monic of odd
    /// degree >= 3 and squarefree over F_p.
    HyperellipticCurve(std::uint64_t p, const std::vector<Int>& coeffs) : field_(p) {
        for (Int c : coeffs) f_.push_back(field_.from_int(c));
        fp::PrimeField::trim(f_);
        if (f_.size() < 4 || f_.size() % 2 != 0)
            throw Error(ErrorCode::kInvalidCurve, "f must have odd degree >= 3 modulo " + std::to_string(p));
        if (f_.back() != 1) throw Error(ErrorCode::kInvalidCurve, "f must be monic");
        const fp::Poly common = field_.gcd(f_, field_.derivative(f_));
        if (common.size() > 1) throw Error(ErrorCode::kSingularCurve, "f is not squarefree over F_" + std::to_string(p));
        genus_ = static_cast<Int>(f_.size() - 2) / 2;
    }

    const fp::PrimeField& field() const noexcept { return field_; }
    std::uint64_t prime() const noexcept { return field_.prime(); }
    Int genus() const noexcept { return genus_; }
    const fp::Poly& f() const noexcept { return f_; }

    bool contains(const AffinePoint& pt) const noexcept {
        return pt.x < prime() && pt.y < prime() && field_.mul(pt.y, pt.y) == field_.eval(f_, pt.x);
    }

    bool is_weierstrass(const AffinePoint& pt) const noexcept { return pt.y == 0; }

    AffinePoint conjugate(const AffinePoint& pt) const noexcept { return {pt.x, field_.neg(pt.y)}; }

    /// All F_p-rational affine points, ordered by (x, y).
    std::vector<AffinePoint> rational_points() const {
        std::vector<AffinePoint> out;
        for (fp::Elem x = 0; x < prime(); ++x) {
            const fp::Elem v = field_.eval(f_, x);
            for (fp::Elem y = 0; y < prime(); ++y)
                if (field_.mul(y, y) == v) out.push_back({x, y});
        }
        return out;
    }

    /// (2g - 2) * inf.
    Divisor canonical_divisor() const { return Divisor(2 * genus_ - 2); }

    void validate(const Divisor& d) const {
        for (const auto& [pt, mult] : d.affine_part())
            if (!contains(pt))
                throw Error(ErrorCode::kPointNotOnCurve,
                            "(" + std::to_string(pt.x) + ", " + std::to_string(pt.y) + ") is not on the curve");
    }

    /// Local expansion of y in t = x - x0 at a point with y0 != 0, mod t^precision.
    fp::Series y_expansion(const AffinePoint& pt, std::size_t precision) const {
        const fp::Poly shifted = field_.taylor_shift(f_, pt.x);
        fp::Series y(precision, 0);
        if (precision == 0) return y;
        y[0] = pt.y;
        const fp::Elem inv_two_y0 = field_.inv(field_.mul(2, pt.y));
        for (std::size_t k = 1; k < precision; ++k) {
            fp::Elem acc = k < shifted.size() ? shifted[k] : 0;
            for (std::size_t i = 1; i < k; ++i) acc = field_.sub(acc, field_.mul(y[i], y[k - i]));
            y[k] = field_.mul(acc, inv_two_y0);
        }
        return y;
    }

    /// Local expansion of x - x0 in t = y at the Weierstrass point (x0, 0), mod t^precision.
    fp::Series x_expansion_at_weierstrass(fp::Elem x0, std::size_t precision) const {
        const fp::Poly shifted = field_.taylor_shift(f_, x0);  // shifted[0] = f(x0) = 0
        const fp::Elem inv_c1 = field_.inv(shifted.at(1));
        fp::Series u(precision, 0);
        // u = (t^2 - sum_{i>=2} c_i u^i) / c_1; each pass fixes at least one more coefficient.
        for (std::size_t pass = 0; pass <= precision; ++pass) {
            fp::Series rhs(precision, 0);
            if (precision > 2) rhs[2] = 1;
            fp::Series power = u;
            for (std::size_t i = 2; i < shifted.size(); ++i) {
                power = field_.series_mul(power, u, precision);
                for (std::size_t k = 0; k < precision; ++k) rhs[k] = field_.sub(rhs[k], field_.mul(shifted[i], power[k]));
            }
            for (auto& c : rhs) c = field_.mul(c, inv_c1);
            if (rhs == u) break;
            u = std::move(rhs);
        }
        return u;
    }

    /// dim over F_p of L(D) = { h : div(h) + D >= 0 }.
    Int rr_space_dim(const Divisor& d) const {
        validate(d);
        if (d.degree() < 0) return 0;

        struct Constraint {
            AffinePoint pt;
            std::size_t order;  // required vanishing order of the numerator
        };
        std::vector<Constraint> constraints;

        std::map<fp::Elem, std::vector<AffinePoint>> fibres;
        for (const auto& [pt, mult] : d.affine_part()) fibres[pt.x].push_back(pt);

        Int cleared = 0;  // sum of the exponents e_k in the clearing polynomial
        for (const auto& [x0, pts] : fibres) {
            const bool weierstrass = is_weierstrass(pts.front());
            Int e = 0;
            for (const auto& pt : pts) {
                const Int mult = d.multiplicity(pt);
                if (mult > 0) e = std::max(e, weierstrass ? (mult + 1) / 2 : mult);
            }
            cleared += e;
            std::vector<AffinePoint> fibre{pts.front()};
            if (!weierstrass) fibre.push_back(conjugate(pts.front()));
            for (const auto& pt : fibre) {
                const Int need = e * (weierstrass ? 2 : 1) - d.multiplicity(pt);
                if (need > 0) constraints.push_back({pt, static_cast<std::size_t>(need)});
            }
        }

        const Int pole_budget = d.c_inf() + 2 * cleared;
        if (pole_budget < 0) return 0;

        // Basis of L(pole_budget * inf): x^i, then x^j y.
        const Int n_plain = pole_budget / 2 + 1;
        const Int n_with_y = pole_budget >= 2 * genus_ + 1 ? (pole_budget - 2 * genus_ - 1) / 2 + 1 : 0;
        const std::size_t cols = static_cast<std::size_t>(n_plain + n_with_y);

        std::vector<std::vector<fp::Elem>> rows;
        for (const auto& c : constraints) {
            const std::size_t precision = c.order + 1;
            fp::Series x_local(precision, 0);  // x as a series in the local parameter
            fp::Series y_local(precision, 0);
            if (is_weierstrass(c.pt)) {
                x_local = x_expansion_at_weierstrass(c.pt.x, precision);
                x_local[0] = field_.add(x_local[0], c.pt.x);
                if (precision > 1) y_local[1] = 1;
            } else {
                x_local[0] = c.pt.x;
                if (precision > 1) x_local[1] = 1;
                y_local = y_expansion(c.pt, precision);
            }
            std::vector<fp::Series> columns;
            columns.reserve(cols);
            fp::Series power(precision, 0);
            power[0] = 1;
            for (Int i = 0; i < std::max(n_plain, n_with_y); ++i) {
                if (i < n_plain) columns.push_back(power);
                power = field_.series_mul(power, x_local, precision);
            }
            power.assign(precision, 0);
            power[0] = 1;
            for (Int j = 0; j < n_with_y; ++j) {
                columns.push_back(field_.series_mul(power, y_local, precision));
                power = field_.series_mul(power, x_local, precision);
            }
            for (std::size_t k = 0; k < c.order; ++k) {
                std::vector<fp::Elem> row(cols);
                for (std::size_t col = 0; col < cols; ++col) row[col] = columns[col][k];
                rows.push_back(std::move(row));
            }
        }
        return static_cast<Int>(cols - field_.rank(std::move(rows)));
    }

    /// h^1(O(D)) = h^0(O(K - D)).
    Int h1(const Divisor& d) const { return rr_space_dim(canonical_divisor() - d); }

    /// D1 ~ D2 iff they have the same degree and D1 - D2 has a nonzero section.
    bool linearly_equivalent(const Divisor& d1, const Divisor& d2) const {
        const Divisor diff = d1 - d2;
        return diff.degree() == 0 && rr_space_dim(diff) == 1;
    }

    /// "p=7; f=1,0,3,1"
    std::string to_string() const {
        std::ostringstream os;
        os << "p=" << prime() << "; f=";
        for (std::size_t k = 0; k < f_.size(); ++k) os << (k ? "," : "") << f_[k];
        return os.str();
    }

private:
    fp::PrimeField field_;
    fp::Poly f_;
    Int genus_ = 0;
};

/// a_l = h^0(L - 2m l inf) on the minimal window.
inline CohSequence a_sequence(const HyperellipticCurve& curve, const Divisor& line_bundle, const ComposedMap& map) {
    curve.validate(line_bundle);
    const Int n = map.degree();
    auto a = [&](Int ell) { return curve.rr_space_dim(line_bundle - Divisor(n * ell)); };
    return discover_h0_sequence(a, n, floor_div(line_bundle.degree(), n) + 1);
}

/// b_l = h^1(L - 2m l inf) = h^0(K - L + 2m l inf), on the minimal window.
inline CohSequence b_sequence(const HyperellipticCurve& curve, const Divisor& line_bundle, const ComposedMap& map) {
    curve.validate(line_bundle);
    const Int n = map.degree();
    const Divisor dual = curve.canonical_divisor() - line_bundle;
    auto b = [&](Int ell) { return curve.rr_space_dim(dual + Divisor(n * ell)); };
    return discover_h1_sequence(b, n, floor_div(line_bundle.degree() - (2 * curve.genus() - 2), n) - 1);
}

inline SplittingType pushforward(const HyperellipticCurve& curve, const Divisor& line_bundle, const ComposedMap& map) {
    return splitting_from_h0_sequence(a_sequence(curve, line_bundle, map));
}

/// For genus 1 and deg L = 2mq: whether L (x) f^*O(-q) is trivial.
inline bool is_exceptional_class(const HyperellipticCurve& curve, const Divisor& line_bundle, const ComposedMap& map) {
    if (curve.genus() != 1)
        throw Error(ErrorCode::kWrongGenus, "exceptional class is defined on elliptic curves, genus is " +
                                                std::to_string(curve.genus()));
    const Int n = map.degree();
    if (floor_mod(line_bundle.degree(), n) != 0)
        throw Error(ErrorCode::kDegreeNotMultiple, "degree " + std::to_string(line_bundle.degree()) +
                                                       " is not a multiple of " + std::to_string(n));
    const Int q = line_bundle.degree() / n;
    return curve.rr_space_dim(line_bundle - Divisor(n * q)) == 1;
}

}  // namespace pushforward
