#pragma once

// Arithmetic in F_p for small odd primes: elements, dense polynomials,
// truncated power series and the rank of a matrix.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pushforward/error.hpp"

namespace pushforward::fp {

using Elem = std::uint64_t;
/// Coefficients from the constant term upward; no trailing zeros once trimmed.
using Poly = std::vector<Elem>;
/// Coefficients of t^0, t^1, ... of a series truncated at its length.
using Series = std::vector<Elem>;

inline bool is_prime(std::uint64_t p) noexcept {
    if (p < 2) return false;
    for (std::uint64_t k = 2; k * k <= p; ++k)
        if (p % k == 0) return false;
    return true;
}

class PrimeField {
public:
    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p == 2) throw Error(ErrorCode::kCharacteristicTwo, "characteristic 2 is not supported");
        if (!is_prime(p)) throw Error(ErrorCode::kInvalidCurve, std::to_string(p) + " is not prime");
        if (p >= (std::uint64_t{1} << 31)) throw Error(ErrorCode::kInvalidCurve, "prime too large");
    }

    std::uint64_t prime() const noexcept { return p_; }

    Elem from_int(Int v) const noexcept {
        const Int p = static_cast<Int>(p_);
        return static_cast<Elem>(((v % p) + p) % p);
    }
    Elem add(Elem a, Elem b) const noexcept { return (a + b) % p_; }
    Elem sub(Elem a, Elem b) const noexcept { return (a + p_ - b) % p_; }
    Elem neg(Elem a) const noexcept { return (p_ - a) % p_; }
    Elem mul(Elem a, Elem b) const noexcept { return (a * b) % p_; }

    Elem pow(Elem a, std::uint64_t e) const noexcept {
        Elem result = 1 % p_;
        a %= p_;
        while (e > 0) {
            if (e & 1) result = mul(result, a);
            a = mul(a, a);
            e >>= 1;
        }
        return result;
    }

    Elem inv(Elem a) const {
        if (a % p_ == 0) throw Error(ErrorCode::kInvalidSequence, "division by zero in F_p");
        return pow(a, p_ - 2);
    }

    bool is_square(Elem a) const noexcept { return a % p_ == 0 || pow(a, (p_ - 1) / 2) == 1; }

    // Polynomials

    static void trim(Poly& f) {
        while (!f.empty() && f.back() == 0) f.pop_back();
    }

    Elem eval(const Poly& f, Elem x) const noexcept {
        Elem acc = 0;
        for (auto it = f.rbegin(); it != f.rend(); ++it) acc = add(mul(acc, x), *it);
        return acc;
    }

    Poly derivative(const Poly& f) const {
        Poly out;
        for (std::size_t k = 1; k < f.size(); ++k) out.push_back(mul(f[k], from_int(static_cast<Int>(k))));
        trim(out);
        return out;
    }

    /// Remainder of f modulo a nonzero g.
    Poly mod(Poly f, const Poly& g) const {
        trim(f);
        const Elem lead_inv = inv(g.back());
        while (f.size() >= g.size()) {
            const Elem c = mul(f.back(), lead_inv);
            const std::size_t shift = f.size() - g.size();
            for (std::size_t k = 0; k < g.size(); ++k) f[shift + k] = sub(f[shift + k], mul(c, g[k]));
            trim(f);
        }
        return f;
    }

    Poly gcd(Poly a, Poly b) const {
        trim(a);
        trim(b);
        while (!b.empty()) {
            Poly r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.empty()) {
            const Elem lead_inv = inv(a.back());
            for (auto& c : a) c = mul(c, lead_inv);
        }
        return a;
    }

    /// Coefficients of f(x0 + t) as a polynomial in t.
    Poly taylor_shift(const Poly& f, Elem x0) const {
        Poly out(f.begin(), f.end());
        // Repeated synthetic division by (t - x0) in Horner form.
        const std::size_t n = out.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t k = n - 1; k > i; --k) out[k - 1] = add(out[k - 1], mul(x0, out[k]));
        return out;
    }

    // Truncated power series

    Series series_mul(const Series& a, const Series& b, std::size_t precision) const {
        Series out(precision, 0);
        for (std::size_t i = 0; i < a.size() && i < precision; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size() && i + j < precision; ++j) out[i + j] = add(out[i + j], mul(a[i], b[j]));
        }
        return out;
    }

    /// Rank of a dense matrix over F_p (row-major, all rows the same length).
    std::size_t rank(std::vector<std::vector<Elem>> rows) const {
        if (rows.empty()) return 0;
        const std::size_t cols = rows.front().size();
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
            std::size_t pivot = r;
            while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[r], rows[pivot]);
            const Elem pinv = inv(rows[r][c]);
            for (auto& v : rows[r]) v = mul(v, pinv);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == r || rows[i][c] == 0) continue;
                const Elem factor = rows[i][c];
                for (std::size_t k = c; k < cols; ++k) rows[i][k] = sub(rows[i][k], mul(factor, rows[r][k]));
            }
            ++r;
        }
        return r;
    }

private:
    std::uint64_t p_;
};

}  // namespace pushforward::fp
