#pragma once

// Truncated-series evaluation with per-class convergence acceleration.
//
// Every series here is driven by a single outer loop n = 1..N that maintains
// incremental DP state for the inner nested sums (O(N * depth) total) and the
// central-binomial weight recurrence. Partial sums are snapshotted either
// consecutively (Levin window, for alternating/unimodular outer terms) or at
// geometric checkpoints (model-basis extrapolation in powers of n^{-1/2} and
// log n, for positive slowly-decaying terms).

#include "eazeta/acceleration.hpp"
#include "eazeta/composition.hpp"
#include "eazeta/finite_sums.hpp"
#include "eazeta/real.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eazeta {

template <class R>
struct SeriesConfigT {
    long max_terms = 200000;
    R target_tol = R("1e-10");
    AccelMethod acceleration = AccelMethod::automatic;
    int working_precision = std::numeric_limits<R>::digits10;

    void validate() const {
        if (max_terms < 10) throw std::invalid_argument("series config: max_terms >= 10");
        if (!(target_tol > 0)) throw std::invalid_argument("series config: target_tol > 0");
        if (working_precision < 17) throw std::invalid_argument("series config: working_precision >= 17");
    }
};

using SeriesConfig = SeriesConfigT<Real>;

enum class EngineKind { series, quadrature };

template <class R>
struct EvalResultT {
    Cplx<R> value{};
    R err_estimate{};
    long terms_used = 0;
    EngineKind engine = EngineKind::series;
    bool converged = false;

    R real_value() const { return value.re; }
};

using EvalResult = EvalResultT<Real>;

// --- decay classification ---------------------------------------------------

enum class SeriesClass { geometric, unimodular, monotone };

template <class R>
struct DecayProfile {
    SeriesClass cls = SeriesClass::monotone;
    int block = 1;       // outer phase order: 1, 2 or 4
    R remainder_exp{1};  // leading remainder exponent a0 (tail ~ N^-a0 * logs)
    int log_degree = 0;
    R ratio{0};          // geometric ratio bound
};

namespace detail {

// Unit-modulus outer factors (levels 2 and 4) are fed to the u-transform
// unblocked: the phase factor acts as the sign alternation the transform is
// built for, and grouping into period-length blocks measurably degrades both
// accuracy and the honesty of its error estimates.
template <class R>
int phase_block(const Cplx<R>&) {
    return 1;
}

}  // namespace detail

// --- generic summation driver ------------------------------------------------

namespace detail {

inline std::vector<long> monotone_checkpoints(long n_max, int count) {
    long top = std::max<long>(16, n_max - (n_max % 4));
    long lo = std::max<long>(64, top / 256);
    if (lo >= top) lo = std::max<long>(8, top / 4);
    std::vector<long> cps;
    double ratio = std::exp(std::log(double(top) / double(lo)) / double(count - 1));
    double v = double(lo);
    for (int c = 0; c < count; ++c) {
        long n = static_cast<long>(v / 4.0 + 0.5) * 4;  // multiples of 4 alias away phases
        if (n < 8) n = 8;
        if (n > top) n = top;
        if (cps.empty() || n > cps.back()) cps.push_back(n);
        v *= ratio;
    }
    if (cps.back() != top) cps.push_back(top);
    return cps;
}

}  // namespace detail

// Terms must expose: V next()  (term for n = 1, 2, ...).
template <class V, class R, class Terms>
EvalResultT<R> sum_series(Terms&& terms, const DecayProfile<R>& prof, const SeriesConfigT<R>& cfg) {
    cfg.validate();
    const R tol = cfg.target_tol;
    EvalResultT<R> res;
    res.engine = EngineKind::series;

    AccelMethod method = cfg.acceleration;
    if (method == AccelMethod::automatic) {
        switch (prof.cls) {
            case SeriesClass::geometric: method = AccelMethod::none; break;
            case SeriesClass::unimodular: method = AccelMethod::levin_u; break;
            case SeriesClass::monotone: method = AccelMethod::richardson; break;
        }
    }

    auto cassign = [](Cplx<R>& dst, const V& v) {
        if constexpr (std::is_same_v<V, R>) dst = Cplx<R>(v);
        else dst = v;
    };

    if (prof.cls == SeriesClass::geometric || method == AccelMethod::none) {
        V s{};
        R q = prof.cls == SeriesClass::geometric ? prof.ratio : R(0);
        if (q >= 1) q = R(1) / 2;
        R tail_factor = q > 0 ? q / (1 - q) : R(1);
        long n = 0;
        R err(1);
        while (n < cfg.max_terms) {
            V t = terms.next();
            ++n;
            s += t;
            err = detail::vabs<R>(t) * tail_factor;
            if (n >= 8 && err < tol / 2) break;
        }
        cassign(res.value, s);
        res.err_estimate = err;
        res.terms_used = n;
        res.converged = err <= tol;
        return res;
    }

    if (method == AccelMethod::levin_u || method == AccelMethod::euler || method == AccelMethod::aitken) {
        // Block terms by the outer phase order, then accelerate consecutive
        // block partial sums over a fixed-size window pushed to larger n
        // until the transform stabilizes.
        const int block = std::max(1, prof.block);
        const long blocks_budget = std::max<long>(cfg.max_terms / block, 8);
        const long window = 64;
        V s{};
        std::vector<V> sums;
        long n = 0;
        AccelEstimate<V, R> best{};
        best.err = R(1e6);
        long target = std::min<long>(48, blocks_budget);
        while (true) {
            while (static_cast<long>(sums.size()) < target) {
                V b{};
                for (int t = 0; t < block; ++t) { b += terms.next(); ++n; }
                s += b;
                sums.push_back(s);
            }
            R lastb = detail::vabs<R>(V(sums.back() - sums[sums.size() - 2]));
            if (lastb < tol / 4) {  // plain tail already below budget
                cassign(res.value, sums.back());
                res.err_estimate = lastb;
                res.terms_used = n;
                res.converged = true;
                return res;
            }
            if (sums.size() >= 8) {
                std::size_t take = std::min<std::size_t>(sums.size(), window);
                std::size_t lo = sums.size() - take;
                std::span<const V> win(sums.data() + lo, take);
                AccelEstimate<V, R> est;
                if (method == AccelMethod::euler) est = euler_average<V, R>(win);
                else if (method == AccelMethod::aitken) est = aitken<V, R>(win);
                else est = levin_u<V, R>(win, lo > 0 ? &sums[lo - 1] : nullptr);
                if (est.ok && est.err < best.err) best = est;
            }
            if (best.ok && best.err <= tol / 2) break;
            if (target >= blocks_budget) break;
            target = std::min<long>(target * 2, blocks_budget);
        }
        if (!best.ok && !sums.empty()) best.limit = sums.back();
        cassign(res.value, best.limit);
        res.err_estimate = best.err;
        res.terms_used = n;
        res.converged = best.ok && best.err <= tol;
        return res;
    }

    // monotone: geometric checkpoints + model-basis fit
    const int ladder = 6;
    const int logdeg = prof.log_degree;
    const int nbasis = ladder * (logdeg + 1);
    const int ncheck = std::max(nbasis + 8, 18);
    std::vector<long> cps = detail::monotone_checkpoints(cfg.max_terms, ncheck);
    std::vector<long> ns;
    std::vector<V> svals;
    V s{};
    long n = 0;
    R last_term_abs(0);
    for (long cp : cps) {
        while (n < cp) {
            V t = terms.next();
            ++n;
            s += t;
            last_term_abs = detail::vabs<R>(t);
        }
        ns.push_back(n);
        svals.push_back(s);
        // plain-tail early exit: c_n ~ n^{-a0-1} => tail ~ |c_n| n / a0
        R tail = last_term_abs * R(n) / prof.remainder_exp * R(2 + logdeg);
        if (tail < tol / 4) {
            cassign(res.value, s);
            res.err_estimate = tail;
            res.terms_used = n;
            res.converged = true;
            return res;
        }
    }
    // ladder fits of increasing depth; err from the last two
    std::vector<R> expos;
    std::vector<int> logps;
    V fit_prev{}, fit_cur{};
    bool have_prev = false, have_cur = false;
    R err(1);
    for (int lad = 1; lad <= ladder; ++lad) {
        expos.clear();
        logps.clear();
        for (int l = 0; l < lad; ++l)
            for (int d = 0; d <= logdeg; ++d) {
                expos.push_back(prof.remainder_exp + R(l));
                logps.push_back(d);
            }
        auto fit = basis_extrapolate<V, R>(ns, svals, expos, logps);
        if (!fit.ok) continue;
        fit_prev = fit_cur;
        have_prev = have_cur;
        fit_cur = fit.limit;
        have_cur = true;
        if (have_prev) {
            R diff = detail::vabs<R>(V(fit_cur - fit_prev));
            err = diff;
        }
    }
    if (!have_cur) {
        cassign(res.value, s);
        res.err_estimate = R(1);
        res.terms_used = n;
        res.converged = false;
        return res;
    }
    // roundoff floor: forward summation of N terms at working precision
    R floor_rnd = detail::vabs<R>(V(s)) * std::numeric_limits<R>::epsilon() * R(n);
    err += floor_rnd;
    cassign(res.value, fit_cur);
    res.err_estimate = err;
    res.terms_used = n;
    res.converged = err <= tol;
    return res;
}

// --- inner DP for strict colored chains --------------------------------------

// S_j(v) = sum over v >= n_j > ... > n_r >= 1 of prod x_i^{n_i} / n_i^{k_i};
// advanced one step of v at a time.
template <class R>
class ColoredChainState {
public:
    ColoredChainState(std::span<const int> parts, std::span<const Cplx<R>> colors)
        : parts_(parts.begin(), parts.end()), colors_(colors.begin(), colors.end()),
          state_(parts.size() + 1), pow_(parts.size()) {
        state_.back() = Cplx<R>(R(1), R(0));
        for (auto& p : pow_) p = Cplx<R>(R(1), R(0));
    }

    void extend() {
        ++v_;
        const std::size_t r = parts_.size();
        for (std::size_t j = 0; j < r; ++j) pow_[j] *= colors_[j];
        // strict: outer level first, sees previous-step inner values
        for (std::size_t j = 0; j < r; ++j)
            state_[j] += state_[j + 1] * pow_[j] / int_pow(R(v_), parts_[j]);
    }

    const Cplx<R>& value() const { return state_[0]; }  // S at current v

private:
    std::vector<int> parts_;
    std::vector<Cplx<R>> colors_;
    std::vector<Cplx<R>> state_;
    std::vector<Cplx<R>> pow_;
    long v_ = 0;
};

// --- term generators ----------------------------------------------------------

template <class R>
class PolylogTerms {
public:
    PolylogTerms(const Composition& k, std::vector<Cplx<R>> args)
        : k1_(k[0]),
          x1_(args.at(0)),
          inner_(std::span<const int>(k.parts().data() + 1, k.parts().size() - 1),
                 std::span<const Cplx<R>>(args.data() + 1, args.size() - 1)),
          pow1_(R(1), R(0)) {
        if (args.size() != static_cast<std::size_t>(k.depth()))
            throw std::invalid_argument("polylog: argument count != depth");
    }

    Cplx<R> next() {
        ++n_;
        pow1_ *= x1_;
        Cplx<R> t = pow1_ / int_pow(R(n_), k1_);
        t = t * inner_.value();  // inner state is at n-1
        inner_.extend();
        return t;
    }

private:
    int k1_;
    Cplx<R> x1_;
    ColoredChainState<R> inner_;
    Cplx<R> pow1_;
    long n_ = 0;
};

template <class R>
class StarValueTerms {
public:
    StarValueTerms(const Composition& k, SumVariant variant)
        : k1_(k[0]), variant_(variant),
          inner_(std::span<const int>(k.parts().data() + 1, k.parts().size() - 1),
                 /*star=*/true, variant) {}

    R next() {
        ++n_;
        inner_.extend();  // star: inner may also sit at n
        long d = variant_ == SumVariant::t ? 2 * n_ - 1 : n_;
        return inner_.value() / int_pow(R(d), k1_);
    }

private:
    int k1_;
    SumVariant variant_;
    HarmonicState<R> inner_;
    long n_ = 0;
};

template <class R>
class TPolylogTerms {
public:
    TPolylogTerms(const Composition& k, R x)
        : k1_(k[0]), x_(std::move(x)),
          inner_(std::span<const int>(k.parts().data() + 1, k.parts().size() - 1),
                 /*star=*/false, SumVariant::t) {}

    R next() {
        ++n_;
        xp_ = (n_ == 1) ? x_ : xp_ * x_ * x_;  // x^(2n-1)
        R t = xp_ / int_pow(R(2 * n_ - 1), k1_) * inner_.value();  // inner at n-1
        inner_.extend();
        return t;
    }

private:
    int k1_;
    R x_;
    R xp_{};
    HarmonicState<R> inner_;
    long n_ = 0;
};

enum class AperyFamily { zeta_star, t_star, zeta_star_parametric };

inline AperyFamily parse_apery_family(const std::string& s) {
    if (s == "zeta-star" || s == "zeta_star" || s == "zs") return AperyFamily::zeta_star;
    if (s == "t-star" || s == "t_star" || s == "ts") return AperyFamily::t_star;
    if (s == "zeta-star-param" || s == "zeta_star_parametric" || s == "zsx")
        return AperyFamily::zeta_star_parametric;
    throw std::invalid_argument("unknown Euler-Apery family '" + s + "'");
}

template <class R>
class AperyTerms {
public:
    AperyTerms(AperyFamily fam, int k1, std::span<const int> tail, std::optional<R> x)
        : k1_(k1),
          inner_(tail, /*star=*/true,
                 fam == AperyFamily::t_star ? SumVariant::t : SumVariant::zeta,
                 fam == AperyFamily::zeta_star_parametric ? std::move(x) : std::nullopt),
          a_(1) {}

    R next() {
        ++n_;
        a_ *= R(2 * n_ - 1) / R(2 * n_);
        inner_.extend();
        return inner_.value() * a_ / int_pow(R(n_), k1_);
    }

private:
    int k1_;
    HarmonicState<R> inner_;
    R a_;
    long n_ = 0;
};

enum class CBForm { plain, squared };

template <class R>
class CBTerms {
public:
    CBTerms(int k, R x, CBForm form) : k_(k), x_(std::move(x)), form_(form), a_(1), xp_(1) {}

    R next() {
        ++n_;
        a_ *= R(2 * n_ - 1) / R(2 * n_);
        xp_ *= form_ == CBForm::squared ? x_ * x_ : x_;
        return a_ * xp_ / int_pow(R(n_), k_);
    }

private:
    int k_;
    R x_;
    CBForm form_;
    R a_, xp_;
    long n_ = 0;
};

// --- public operations ---------------------------------------------------------

// Li_{k_1,...,k_r}(x_1,...,x_r) on the closed unit polydisk (in the nested
// sense |x_j...x_r| <= 1), boundary cases conditionally convergent.
template <class R>
EvalResultT<R> multiple_polylog(const Composition& k, std::vector<Cplx<R>> args,
                                const SeriesConfigT<R>& cfg) {
    const int r = k.depth();
    if (static_cast<int>(args.size()) != r)
        throw std::invalid_argument("multiple_polylog: argument count != depth");
    if (r > 8) throw std::invalid_argument("multiple_polylog: depth > 8 unsupported");

    const R eps = std::numeric_limits<R>::epsilon() * 16;
    R tail_mod(1);
    std::vector<R> tail_mods(r);
    for (int j = r - 1; j >= 0; --j) {
        tail_mod *= abs(args[static_cast<std::size_t>(j)]);
        tail_mods[static_cast<std::size_t>(j)] = tail_mod;
        if (tail_mod > 1 + eps)
            throw std::domain_error("multiple_polylog: |x_j...x_r| > 1 diverges");
    }
    R mu1 = abs(args[0]);
    bool x1_is_one = args[0].im == 0 && args[0].re == 1;
    if (x1_is_one && k[0] == 1 && mu1 >= 1 - eps)
        throw std::domain_error("multiple_polylog: (k_1, x_1) = (1, 1) diverges");

    // zero argument anywhere kills every term
    for (auto& a : args)
        if (a.re == 0 && a.im == 0) {
            EvalResultT<R> res;
            res.converged = true;
            res.err_estimate = R(0);
            return res;
        }

    DecayProfile<R> prof;
    if (mu1 < 1 - eps) {
        prof.cls = SeriesClass::geometric;
        prof.ratio = mu1;
    } else if (x1_is_one) {
        prof.cls = SeriesClass::monotone;
        prof.remainder_exp = R(k[0] - 1);
        int d = 0;
        for (int j = 1; j < r; ++j)
            if (k[j] == 1 && tail_mods[static_cast<std::size_t>(j)] >= 1 - eps) ++d;
        prof.log_degree = d;
    } else {
        prof.cls = SeriesClass::unimodular;
        prof.block = detail::phase_block(args[0]);
        prof.remainder_exp = R(k[0]);
        prof.log_degree = r - 1;
    }
    PolylogTerms<R> terms(k, std::move(args));
    return sum_series<Cplx<R>, R>(terms, prof, cfg);
}

// Single-variable Li_k(x): args (x, 1, ..., 1).
template <class R>
EvalResultT<R> polylog_single(const Composition& k, const Cplx<R>& x, const SeriesConfigT<R>& cfg) {
    std::vector<Cplx<R>> args(static_cast<std::size_t>(k.depth()), Cplx<R>(R(1), R(0)));
    args[0] = x;
    return multiple_polylog<R>(k, std::move(args), cfg);
}

// Colored MZV from a signed composition (levels 1, 2, 4).
template <class R>
EvalResultT<R> colored_mzv(const SignedComposition& kz, const SeriesConfigT<R>& cfg) {
    if (!kz.convergent()) throw std::domain_error("colored MZV: (k_1, z_1) = (1, 1) diverges");
    return multiple_polylog<R>(kz.parts, kz.template colors<R>(), cfg);
}

// zeta(k) / zeta*(k) and t(k) / t*(k); star via the direct >= DP.
template <class R>
EvalResultT<R> zeta_value(const Composition& k, bool star, const SeriesConfigT<R>& cfg) {
    if (!k.admissible()) throw std::domain_error("zeta value: composition must be admissible");
    if (!star) return polylog_single<R>(k, Cplx<R>(R(1), R(0)), cfg);
    DecayProfile<R> prof;
    prof.cls = SeriesClass::monotone;
    prof.remainder_exp = R(k[0] - 1);
    int d = 0;
    for (int j = 1; j < k.depth(); ++j)
        if (k[j] == 1) ++d;
    prof.log_degree = d;
    StarValueTerms<R> terms(k, SumVariant::zeta);
    return sum_series<R, R>(terms, prof, cfg);
}

template <class R>
EvalResultT<R> t_star_value(const Composition& k, const SeriesConfigT<R>& cfg) {
    if (!k.admissible()) throw std::domain_error("t-star value: composition must be admissible");
    DecayProfile<R> prof;
    prof.cls = SeriesClass::monotone;
    prof.remainder_exp = R(k[0] - 1);
    int d = 0;
    for (int j = 1; j < k.depth(); ++j)
        if (k[j] == 1) ++d;
    prof.log_degree = d;
    StarValueTerms<R> terms(k, SumVariant::t);
    return sum_series<R, R>(terms, prof, cfg);
}

// ti_k(x) = sum x^{2n_1-1} / prod (2n_j-1)^{k_j}; t(k) = ti_k(1).
template <class R>
EvalResultT<R> t_polylog(const Composition& k, const R& x, const SeriesConfigT<R>& cfg) {
    if (x > 1 || x < -1) throw std::domain_error("t_polylog: |x| <= 1 required");
    if (k[0] == 1 && x == 1) throw std::domain_error("t_polylog: (k_1, x) = (1, 1) diverges");
    if (x == 0) {
        EvalResultT<R> res;
        res.converged = true;
        return res;
    }
    DecayProfile<R> prof;
    R ax = x < 0 ? R(-x) : x;
    if (ax < 1) {
        prof.cls = SeriesClass::geometric;
        prof.ratio = ax * ax;
    } else {
        // x^(2n-1) has constant sign at x = +-1, so both ends are monotone
        prof.cls = SeriesClass::monotone;
        prof.remainder_exp = R(k[0] - 1);
        int d = 0;
        for (int j = 1; j < k.depth(); ++j)
            if (k[j] == 1) ++d;
        prof.log_degree = d;
    }
    TPolylogTerms<R> terms(k, x);
    return sum_series<R, R>(terms, prof, cfg);
}

template <class R>
EvalResultT<R> t_value(const Composition& k, const SeriesConfigT<R>& cfg) {
    return t_polylog<R>(k, R(1), cfg);
}

// sum_n binom(2n,n)/4^n x^n / n^k (plain) or x^{2n} (squared).
template <class R>
EvalResultT<R> central_binomial_series(int k, const R& x, CBForm form, const SeriesConfigT<R>& cfg) {
    if (k < 0) throw std::invalid_argument("central binomial series: k >= 0");
    if (x > 1 || x < -1) throw std::domain_error("central binomial series: |x| <= 1 required");
    R ax = x < 0 ? R(-x) : x;
    if (k == 0 && ax == 1)
        throw std::domain_error("central binomial series: k = 0 diverges at |x| = 1");
    if (x == 0) {
        EvalResultT<R> res;
        res.converged = true;
        return res;
    }
    DecayProfile<R> prof;
    if (ax < 1) {
        prof.cls = SeriesClass::geometric;
        prof.ratio = form == CBForm::squared ? ax * ax : ax;
    } else if (x > 0 || form == CBForm::squared) {
        prof.cls = SeriesClass::monotone;
        prof.remainder_exp = R(k) - R(1) / 2;
    } else {
        prof.cls = SeriesClass::unimodular;
        prof.block = 1;
        prof.remainder_exp = R(k) + R(1) / 2;
    }
    CBTerms<R> terms(k, x, form);
    return sum_series<R, R>(terms, prof, cfg);
}

// Euler-Apery sums: sum_n w_n(tail) a_n / n^{k1} with w = zeta*_n, t*_n or
// zeta*_n(. ; x). Terms decay like n^{-k1-1/2} polylog(n), so extrapolation
// carries the half-integer exponent ladder.
template <class R>
EvalResultT<R> euler_apery_sum(AperyFamily fam, int k1, std::span<const int> tail,
                               std::optional<R> x, const SeriesConfigT<R>& cfg) {
    if (k1 < 1) throw std::invalid_argument("euler_apery_sum: k1 >= 1");
    if (fam == AperyFamily::zeta_star_parametric) {
        if (!x) throw std::invalid_argument("euler_apery_sum: parametric family needs x");
        if (*x < 0 || *x > 1) throw std::domain_error("euler_apery_sum: x in [0,1]");
        if (*x == 0) {
            EvalResultT<R> res;
            res.converged = true;
            return res;
        }
    } else if (x) {
        throw std::invalid_argument("euler_apery_sum: x only valid for the parametric family");
    }
    DecayProfile<R> prof;
    prof.cls = SeriesClass::monotone;
    prof.remainder_exp = R(k1) - R(1) / 2;
    prof.log_degree = static_cast<int>(tail.size());
    AperyTerms<R> terms(fam, k1, tail, std::move(x));
    return sum_series<R, R>(terms, prof, cfg);
}

template <class R>
EvalResultT<R> euler_apery_sum(AperyFamily fam, int k1, const MaybeComposition& tail,
                               std::optional<R> x, const SeriesConfigT<R>& cfg) {
    static const std::vector<int> empty;
    return euler_apery_sum<R>(fam, k1,
                              tail ? std::span<const int>(tail->parts()) : std::span<const int>(empty),
                              std::move(x), cfg);
}

}  // namespace eazeta
