#pragma once

// Finite nested harmonic-type sums, evaluated by an inner-to-outer dynamic
// program in O(n * depth) arithmetic operations. The scalar type is a
// template parameter so the same code runs over exact rationals (for the
// stuffle and brute-force cross-checks) and extended-precision floats (for
// the series engines, which extend these sums incrementally in n).

#include "eazeta/composition.hpp"
#include "eazeta/real.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace eazeta {

enum class SumVariant { zeta, t };

// Scalar power with nonnegative integer exponent.
template <class T>
T int_pow(T base, int e) {
    T r(1);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Incremental state for zeta_n(k) / zeta*_n(k) / zeta*_n(k;x) and the t-sum
// analogues. extend() advances n by one; value() is the current sum.
//
// Star chains (>=) update inner-to-outer at each step; strict chains (>)
// update outer-to-inner so each level sees the previous step's inner value.
template <class T>
class HarmonicState {
public:
    HarmonicState(std::span<const int> parts, bool star, SumVariant variant,
                  std::optional<T> x = std::nullopt)
        : parts_(parts.begin(), parts.end()),
          star_(star),
          variant_(variant),
          x_(std::move(x)),
          state_(parts.size() + 1, T(0)),
          xpow_(1) {
        if (x_ && !star_) throw std::invalid_argument("parametric sums require the star variant");
        state_.back() = T(1);  // empty inner chain
        n_ = 0;
    }

    long n() const { return n_; }

    void extend() {
        ++n_;
        long d = denom(n_);
        const std::size_t r = parts_.size();
        if (x_) {
            if (variant_ == SumVariant::t)
                xpow_ = (n_ == 1) ? *x_ : xpow_ * (*x_) * (*x_);  // x^(2n-1)
            else
                xpow_ *= *x_;  // x^n
        }
        if (r == 0) return;
        if (star_) {
            // innermost first; the innermost level carries the x power
            T w = T(1) / int_pow(T(d), parts_[r - 1]);
            state_[r - 1] += (x_ ? xpow_ : T(1)) * w;
            for (std::size_t j = r - 1; j-- > 0;)
                state_[j] += state_[j + 1] / int_pow(T(d), parts_[j]);
        } else {
            for (std::size_t j = 0; j < r; ++j)
                state_[j] += state_[j + 1] / int_pow(T(d), parts_[j]);
        }
    }

    // zeta-ish value at current n; for the empty composition this is 1 (or
    // x^n / x^(2n) for the parametric star conventions).
    T value() const {
        if (parts_.empty()) {
            if (!x_) return T(1);
            // zeta*_n(empty; x) = x^n; t*_n(empty; x) = x^(2n)
            if (variant_ == SumVariant::t) return n_ == 0 ? T(1) : xpow_ * (*x_);
            return xpow_;
        }
        return state_[0];
    }

private:
    long denom(long v) const { return variant_ == SumVariant::t ? 2 * v - 1 : v; }

    std::vector<int> parts_;
    bool star_;
    SumVariant variant_;
    std::optional<T> x_;
    std::vector<T> state_;
    T xpow_;
    long n_ = 0;
};

template <class T>
T finite_harmonic(long n, std::span<const int> parts, bool star, SumVariant variant,
                  std::optional<T> x = std::nullopt) {
    if (n < 1) throw std::invalid_argument("finite sum: n >= 1 required");
    HarmonicState<T> st(parts, star, variant, std::move(x));
    for (long v = 0; v < n; ++v) st.extend();
    return st.value();
}

// zeta_n(k) (strict) or zeta*_n(k) (star), optionally parametric zeta*_n(k;x).
template <class T>
T finite_zeta(long n, std::span<const int> parts, bool star, std::optional<T> x = std::nullopt) {
    return finite_harmonic<T>(n, parts, star, SumVariant::zeta, std::move(x));
}

template <class T>
T finite_zeta(long n, const Composition& k, bool star, std::optional<T> x = std::nullopt) {
    return finite_zeta<T>(n, std::span<const int>(k.parts()), star, std::move(x));
}

// t_n(k), t*_n(k), t*_n(k;x): odd denominators 2n_j - 1.
template <class T>
T finite_t(long n, std::span<const int> parts, bool star, std::optional<T> x = std::nullopt) {
    return finite_harmonic<T>(n, parts, star, SumVariant::t, std::move(x));
}

template <class T>
T finite_t(long n, const Composition& k, bool star, std::optional<T> x = std::nullopt) {
    return finite_t<T>(n, std::span<const int>(k.parts()), star, std::move(x));
}

// a_n = binom(2n, n) / 4^n via a_n = a_{n-1} (2n-1) / (2n), a_0 = 1.
template <class T>
T central_binomial_ratio(long n) {
    if (n < 0) throw std::invalid_argument("central binomial ratio: n >= 0 required");
    T a(1);
    for (long v = 1; v <= n; ++v) a *= T(2 * v - 1) / T(2 * v);
    return a;
}

// O_n = sum_{k<=n} 1/(2k-1).
template <class T>
T odd_harmonic(long n) {
    static const int one[] = {1};
    return finite_t<T>(n, std::span<const int>(one, 1), /*star=*/false);
}

}  // namespace eazeta
