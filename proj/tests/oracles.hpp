#pragma once

// Test-only oracles, kept independent of the library's DP/acceleration paths:
// nested-loop enumeration of finite harmonic sums, and double-precision
// brute-force series summation with generic extrapolation helpers.

#include "eazeta/real.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace oracle {

using eazeta::Rational;

// Direct enumeration of the nested chain n >= n_1 (>|>=) ... (>|>=) n_r >= 1.
inline Rational brute_harmonic(long n, std::span<const int> parts, bool star, bool t_variant,
                               std::optional<Rational> x = std::nullopt) {
    std::function<Rational(std::size_t, long)> rec = [&](std::size_t j, long hi) -> Rational {
        if (j == parts.size()) return Rational(1);
        Rational acc(0);
        for (long v = hi; v >= 1; --v) {
            long d = t_variant ? 2 * v - 1 : v;
            Rational w(1);
            for (int e = 0; e < parts[j]; ++e) w *= Rational(1, d);
            if (x && j + 1 == parts.size()) {
                // innermost parametric factor x^v or x^(2v-1)
                Rational xp(1);
                long e = t_variant ? 2 * v - 1 : v;
                for (long i = 0; i < e; ++i) xp *= *x;
                w *= xp;
            }
            long next_hi = star ? v : v - 1;
            if (next_hi < 1 && j + 1 < parts.size()) continue;
            acc += w * rec(j + 1, next_hi);
        }
        return acc;
    };
    if (parts.empty()) {
        if (!x) return Rational(1);
        Rational xp(1);
        long e = t_variant ? 2 * n : n;
        for (long i = 0; i < e; ++i) xp *= *x;
        return xp;
    }
    return rec(0, n);
}

// Partial sums of a double-precision term generator.
inline std::vector<double> partial_sums(const std::function<double(long)>& term, long count) {
    std::vector<double> out;
    double s = 0;
    for (long n = 1; n <= count; ++n) {
        s += term(n);
        out.push_back(s);
    }
    return out;
}

// Richardson/Neville extrapolation of s_N in powers of 1/N at geometric
// checkpoints N, N/2, N/4, ... (ratio-2 nodes keep double-precision Neville
// stable).
inline double richardson_tail(const std::function<double(long)>& term, long count, int points = 10) {
    std::vector<double> s = partial_sums(term, count);
    std::vector<double> h, t;
    for (int j = points - 1; j >= 0; --j) {
        long n = count >> j;
        h.push_back(1.0 / double(n));
        t.push_back(s[static_cast<std::size_t>(n - 1)]);
    }
    for (int k = 1; k < points; ++k)
        for (int j = points - 1; j >= k; --j)
            t[j] = t[j] + (t[j] - t[j - 1]) * (h[j] / (h[j - k] - h[j]));
    return t[points - 1];
}

// Euler transform for alternating series sum_{n>=1} term(n): sum the head
// directly, then repeatedly average partial sums over the tail window.
inline double euler_alternating(const std::function<double(long)>& term, int count = 64) {
    std::vector<double> all = partial_sums(term, count);
    std::vector<double> s(all.begin() + count / 2, all.end());
    double best = s.back(), best_diff = 1e300, prev = s.back();
    while (s.size() >= 2) {
        std::vector<double> nxt;
        for (std::size_t j = 0; j + 1 < s.size(); ++j) nxt.push_back((s[j] + s[j + 1]) / 2);
        s = std::move(nxt);
        double diff = std::fabs(s.back() - prev);
        if (diff < best_diff) {
            best_diff = diff;
            best = s.back();
        }
        prev = s.back();
    }
    return best;
}

}  // namespace oracle
