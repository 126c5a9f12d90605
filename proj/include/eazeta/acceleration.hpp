#pragma once

// Convergence acceleration: Levin u-transform, iterated Aitken, Euler
// averaging, Neville-type Richardson, and a model-basis extrapolator that
// fits partial sums against a caller-supplied asymptotic basis
// N^{-a} log(N)^p at geometric checkpoints.

#include "eazeta/real.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace eazeta {

enum class AccelMethod { none, euler, aitken, richardson, levin_u, automatic };

inline const char* accel_name(AccelMethod m) {
    switch (m) {
        case AccelMethod::none: return "none";
        case AccelMethod::euler: return "euler";
        case AccelMethod::aitken: return "aitken";
        case AccelMethod::richardson: return "richardson";
        case AccelMethod::levin_u: return "levin_u";
        default: return "auto";
    }
}

inline AccelMethod parse_accel(const std::string& s) {
    if (s == "none") return AccelMethod::none;
    if (s == "euler") return AccelMethod::euler;
    if (s == "aitken") return AccelMethod::aitken;
    if (s == "richardson") return AccelMethod::richardson;
    if (s == "levin_u") return AccelMethod::levin_u;
    if (s == "auto" || s == "automatic") return AccelMethod::automatic;
    throw std::invalid_argument("unknown acceleration method '" + s + "'");
}

template <class V, class R>
struct AccelEstimate {
    V limit{};
    R err{};
    bool ok = false;
};

namespace detail {

template <class R, class V>
R vabs(const V& v) {
    if constexpr (std::is_same_v<V, R>) {
        return v < 0 ? R(-v) : v;
    } else {
        return abs(v);
    }
}

// Magnitude-growth sentinel: partial sums of a divergent series must never
// come back with a small error estimate.
template <class V, class R>
R divergence_floor(std::span<const V> s) {
    if (s.size() < 4) return R(0);
    R last = vabs<R>(V(s[s.size() - 1] - s[s.size() - 2]));
    R first = vabs<R>(V(s[1] - s[0]));
    if (last >= first && last > 0) return last;
    return R(0);
}

}  // namespace detail

// Levin u-transform with beta = 1 on a window of consecutive partial sums.
// Remainder estimates omega_n = (beta + n) * a_n; `prev` supplies the partial
// sum preceding the window so the first term is a genuine difference.
template <class V, class R>
AccelEstimate<V, R> levin_u(std::span<const V> s, const V* prev = nullptr) {
    const std::size_t m = s.size();
    if (m < 4) throw std::invalid_argument("accelerate: need at least 4 partial sums");
    const R beta(1);
    std::vector<V> N(m), D(m);
    for (std::size_t j = 0; j < m; ++j) {
        V a = (j == 0) ? (prev ? V(s[0] - *prev) : s[0]) : V(s[j] - s[j - 1]);
        R w = beta + R(static_cast<long>(j));
        V omega = a * w;
        if (detail::vabs<R>(omega) == 0) omega = V(R(1e-120));
        N[j] = s[j] / omega;
        D[j] = V(R(1)) / omega;
    }
    V best{};
    R best_err(-1);
    V prior{};
    bool have_prior = false;
    for (std::size_t k = 1; k < m; ++k) {
        for (std::size_t j = 0; j + k < m; ++j) {
            R bj = beta + R(static_cast<long>(j));
            R b = bj / (bj + R(static_cast<long>(k)));
            if (k >= 2) {
                R ratio = (bj + R(static_cast<long>(k - 1))) / (bj + R(static_cast<long>(k)));
                R rp(1);
                for (std::size_t t = 0; t + 2 <= k; ++t) rp *= ratio;
                b *= rp;
            }
            N[j] = N[j + 1] - N[j] * b;
            D[j] = D[j + 1] - D[j] * b;
        }
        if (detail::vabs<R>(D[0]) == 0) continue;
        V est = N[0] / D[0];
        if (have_prior) {
            R diff = detail::vabs<R>(V(est - prior));
            if (best_err < 0 || diff < best_err) {
                best_err = diff;
                best = est;
            }
        }
        prior = est;
        have_prior = true;
    }
    if (best_err < 0) return {s.back(), R(1), false};
    best_err += detail::divergence_floor<V, R>(s);
    return {best, best_err, true};
}

// Iterated Aitken delta-squared.
template <class V, class R>
AccelEstimate<V, R> aitken(std::span<const V> s) {
    if (s.size() < 4) throw std::invalid_argument("accelerate: need at least 4 partial sums");
    std::vector<V> cur(s.begin(), s.end());
    V last_est = cur.back();
    V prev_est = cur[cur.size() - 2];
    while (cur.size() >= 3) {
        std::vector<V> nxt;
        nxt.reserve(cur.size() - 2);
        for (std::size_t j = 0; j + 2 < cur.size() + 0; ++j) {
            V d1 = cur[j + 1] - cur[j];
            V d2 = cur[j + 2] - V(2) * cur[j + 1] + cur[j];
            if (detail::vabs<R>(d2) == 0) {
                nxt.push_back(cur[j + 2]);
            } else {
                nxt.push_back(cur[j + 2] - (cur[j + 2] - cur[j + 1]) * ((cur[j + 2] - cur[j + 1]) / d2));
            }
        }
        prev_est = last_est;
        last_est = nxt.back();
        cur = std::move(nxt);
    }
    R err = detail::vabs<R>(V(last_est - prev_est)) + detail::divergence_floor<V, R>(s);
    return {last_est, err, true};
}

// Repeated pairwise averaging (Euler transform view of alternating tails).
template <class V, class R>
AccelEstimate<V, R> euler_average(std::span<const V> s) {
    if (s.size() < 4) throw std::invalid_argument("accelerate: need at least 4 partial sums");
    std::vector<V> cur(s.begin(), s.end());
    V last = cur.back(), prev = cur.back();
    while (cur.size() >= 2) {
        std::vector<V> nxt;
        nxt.reserve(cur.size() - 1);
        for (std::size_t j = 0; j + 1 < cur.size(); ++j)
            nxt.push_back((cur[j] + cur[j + 1]) / R(2));
        prev = last;
        last = nxt.back();
        cur = std::move(nxt);
    }
    R err = detail::vabs<R>(V(last - prev)) + detail::divergence_floor<V, R>(s);
    return {last, err, true};
}

// Neville extrapolation to h = 0 with h_j = 1/(j+1); the classical Richardson
// scheme for remainders with an integer-power ladder in 1/n.
template <class V, class R>
AccelEstimate<V, R> richardson_neville(std::span<const V> s) {
    const std::size_t m = s.size();
    if (m < 4) throw std::invalid_argument("accelerate: need at least 4 partial sums");
    std::vector<V> t(s.begin(), s.end());
    std::vector<R> h(m);
    for (std::size_t j = 0; j < m; ++j) h[j] = R(1) / R(static_cast<long>(j + 1));
    V last = t.back(), prev = t.back();
    for (std::size_t k = 1; k < m; ++k) {
        for (std::size_t j = m - 1; j >= k; --j) {
            t[j] = t[j] + (t[j] - t[j - 1]) * (h[j] / (h[j - k] - h[j]));
            if (j == k) break;
        }
        prev = last;
        last = t.back();
    }
    R err = detail::vabs<R>(V(last - prev)) + detail::divergence_floor<V, R>(s);
    return {last, err, true};
}

// Dispatch for the standalone operation; `automatic` means Levin here.
template <class V, class R>
AccelEstimate<V, R> accelerate(std::span<const V> partial_sums, AccelMethod method) {
    switch (method) {
        case AccelMethod::none: {
            if (partial_sums.size() < 2) throw std::invalid_argument("accelerate: need sums");
            V last = partial_sums.back();
            R err = detail::vabs<R>(V(last - partial_sums[partial_sums.size() - 2]));
            return {last, err, true};
        }
        case AccelMethod::euler: return euler_average<V, R>(partial_sums);
        case AccelMethod::aitken: return aitken<V, R>(partial_sums);
        case AccelMethod::richardson: return richardson_neville<V, R>(partial_sums);
        default: return levin_u<V, R>(partial_sums);
    }
}

// ---------------------------------------------------------------------------
// Model-basis extrapolation.
//
// Fits s(N_c) ~ limit + sum_b beta_b N_c^{-expo_b} log(N_c)^{logp_b} by least
// squares over the checkpoints (real design matrix, possibly complex data),
// via modified Gram-Schmidt QR.

template <class V, class R>
struct BasisFitResult {
    V limit{};
    R err{};
    bool ok = false;
};

namespace detail {

template <class V, class R>
bool solve_ls(const std::vector<std::vector<R>>& cols, std::span<const V> rhs, std::vector<V>& coef) {
    const std::size_t ncol = cols.size(), nrow = rhs.size();
    std::vector<std::vector<R>> q(ncol, std::vector<R>(nrow));
    std::vector<std::vector<R>> r(ncol, std::vector<R>(ncol, R(0)));
    for (std::size_t b = 0; b < ncol; ++b) {
        q[b] = cols[b];
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t a = 0; a < b; ++a) {
                R dot(0);
                for (std::size_t c = 0; c < nrow; ++c) dot += q[a][c] * q[b][c];
                r[a][b] += dot;
                for (std::size_t c = 0; c < nrow; ++c) q[b][c] -= dot * q[a][c];
            }
        }
        R nrm(0);
        for (std::size_t c = 0; c < nrow; ++c) nrm += q[b][c] * q[b][c];
        using std::sqrt;
        nrm = sqrt(nrm);
        if (nrm == 0) return false;
        r[b][b] = nrm;
        for (std::size_t c = 0; c < nrow; ++c) q[b][c] /= nrm;
    }
    // coef = R^{-1} Q^T rhs
    std::vector<V> qtr(ncol);
    for (std::size_t b = 0; b < ncol; ++b) {
        V dot{};
        for (std::size_t c = 0; c < nrow; ++c) dot += rhs[c] * q[b][c];
        qtr[b] = dot;
    }
    coef.assign(ncol, V{});
    for (std::size_t b = ncol; b-- > 0;) {
        V v = qtr[b];
        for (std::size_t a = b + 1; a < ncol; ++a) v -= coef[a] * r[b][a];
        coef[b] = v / r[b][b];
    }
    return true;
}

}  // namespace detail

// expo/logp describe the basis terms beyond the constant column. Checkpoints
// must be distinct; basis columns are normalized by their largest entry.
template <class V, class R>
BasisFitResult<V, R> basis_extrapolate(std::span<const long> ns, std::span<const V> svals,
                                       std::span<const R> expos, std::span<const int> logps) {
    using std::exp;
    using std::log;
    const std::size_t nrow = ns.size();
    if (nrow != svals.size() || expos.size() != logps.size())
        throw std::invalid_argument("basis_extrapolate: shape mismatch");
    if (nrow < expos.size() + 2) return {svals.empty() ? V{} : svals.back(), R(1), false};

    std::vector<R> lnn(nrow);
    for (std::size_t c = 0; c < nrow; ++c) lnn[c] = log(R(ns[c]));

    std::vector<std::vector<R>> cols;
    cols.emplace_back(nrow, R(1));
    for (std::size_t b = 0; b < expos.size(); ++b) {
        std::vector<R> col(nrow);
        R mx(0);
        for (std::size_t c = 0; c < nrow; ++c) {
            R v = exp(-expos[b] * lnn[c]);
            for (int t = 0; t < logps[b]; ++t) v *= lnn[c];
            col[c] = v;
            R av = v < 0 ? R(-v) : v;
            if (av > mx) mx = av;
        }
        if (mx == 0) mx = R(1);
        for (auto& v : col) v /= mx;
        cols.push_back(std::move(col));
    }
    std::vector<V> coef;
    if (!detail::solve_ls<V, R>(cols, svals, coef))
        return {svals.back(), R(1), false};
    return {coef[0], R(0), true};
}

}  // namespace eazeta
