#pragma once

// Compositions (finite sequences of positive integers) and their exact
// combinatorics: weight/depth, admissibility, Hoffman duality, slicing,
// augmentation, quasi-shuffle (stuffle) products and sign-vector enumeration.
// All values are immutable after construction and all operations are pure.

#include "eazeta/real.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace eazeta {

class Composition {
public:
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("composition: must be nonempty");
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("composition: parts must be >= 1");
    }
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    int depth() const { return static_cast<int>(parts_.size()); }
    int weight() const {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }
    bool admissible() const { return parts_.front() >= 2; }

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.parts_ == b.parts_;
    }
    friend auto operator<=>(const Composition& a, const Composition& b) {
        return a.parts_ <=> b.parts_;
    }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
        os << ")";
        return os.str();
    }

private:
    std::vector<int> parts_;
};

// The empty composition appears as a quasi-shuffle identity and as a slice
// result; Composition itself stays nonempty.
using MaybeComposition = std::optional<Composition>;

inline int weight_of(std::span<const int> parts) {
    int w = 0;
    for (int p : parts) w += p;
    return w;
}

// Level-N colors stored exactly as exponents of i modulo 4 (level 4 covers
// levels 1 and 2): 0 -> 1, 1 -> i, 2 -> -1, 3 -> -i.
struct SignedComposition {
    Composition parts;
    std::vector<int> color_exp;  // same length as parts, values in {0,1,2,3}

    SignedComposition(Composition k, std::vector<int> colors)
        : parts(std::move(k)), color_exp(std::move(colors)) {
        if (color_exp.size() != static_cast<std::size_t>(parts.depth()))
            throw std::invalid_argument("signed composition: color count != depth");
        for (int& e : color_exp) e = ((e % 4) + 4) % 4;
    }

    // Convergent iff (k_1, z_1) != (1, 1).
    bool convergent() const { return !(parts[0] == 1 && color_exp[0] == 0); }

    template <class R>
    std::vector<Cplx<R>> colors() const {
        std::vector<Cplx<R>> out;
        out.reserve(color_exp.size());
        for (int e : color_exp) {
            switch (e) {
                case 0: out.push_back(Cplx<R>(R(1), R(0))); break;
                case 1: out.push_back(Cplx<R>(R(0), R(1))); break;
                case 2: out.push_back(Cplx<R>(R(-1), R(0))); break;
                default: out.push_back(Cplx<R>(R(0), R(-1))); break;
            }
        }
        return out;
    }
};

// Text format: comma-separated parts; "-2" bars a part (color -1); level-4
// colors via ":i" / ":-i" / ":-1" / ":1" suffixes. E.g. "-2,3,-1,4", "2:i,1:-1".
inline SignedComposition parse_signed_composition(const std::string& text) {
    std::vector<int> parts, colors;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("composition: empty part in '" + text + "'");
        int color = 0;
        std::string body = tok;
        if (auto pos = tok.find(':'); pos != std::string::npos) {
            body = tok.substr(0, pos);
            std::string suf = tok.substr(pos + 1);
            if (suf == "1") color = 0;
            else if (suf == "i") color = 1;
            else if (suf == "-1") color = 2;
            else if (suf == "-i") color = 3;
            else throw std::invalid_argument("composition: bad color suffix ':" + suf + "'");
        }
        if (!body.empty() && body.front() == '-') {
            if (color != 0) throw std::invalid_argument("composition: both '-' and ':' color on one part");
            color = 2;
            body = body.substr(1);
        }
        std::size_t used = 0;
        int part = std::stoi(body, &used);
        if (used != body.size() || part < 1)
            throw std::invalid_argument("composition: bad part '" + tok + "'");
        parts.push_back(part);
        colors.push_back(color);
    }
    if (parts.empty()) throw std::invalid_argument("composition: empty");
    return SignedComposition(Composition(parts), colors);
}

inline Composition parse_composition(const std::string& text) {
    SignedComposition sc = parse_signed_composition(text);
    for (int e : sc.color_exp)
        if (e != 0) throw std::invalid_argument("composition: colors not allowed here");
    return sc.parts;
}

// Hoffman dual: complement the comma/plus bit-string of the all-ones
// expansion. O(|m|), involutive, weight preserving.
inline Composition hoffman_dual(const Composition& m) {
    int w = m.weight();
    std::vector<char> comma(static_cast<std::size_t>(w), 0);  // comma after position s (1..w-1)
    int s = 0;
    for (std::size_t j = 0; j + 1 < m.parts().size(); ++j) {
        s += m.parts()[j];
        comma[static_cast<std::size_t>(s)] = 1;
    }
    std::vector<int> dual;
    int run = 1;
    for (int pos = 1; pos < w; ++pos) {
        if (comma[static_cast<std::size_t>(pos)]) {
            ++run;  // dual: comma and plus swap, so an original comma glues units
        } else {
            dual.push_back(run);
            run = 1;
        }
    }
    dual.push_back(run);
    return Composition(dual);
}

enum class SliceDir { forward, reverse };

// forward: (m_i,...,m_j); reverse: (m_j,...,m_i); empty when i > j.
inline MaybeComposition slice(const Composition& m, int i, int j, SliceDir dir) {
    int p = m.depth();
    if (i < 1 || i > p || j < 1 || j > p) throw std::out_of_range("slice: index out of range");
    if (i > j) return std::nullopt;
    std::vector<int> out(m.parts().begin() + (i - 1), m.parts().begin() + j);
    if (dir == SliceDir::reverse) std::reverse(out.begin(), out.end());
    return Composition(std::move(out));
}

// Prefix (m_1,...,m_j) with j = 0 allowed (empty); used by the identity drivers.
inline std::vector<int> prefix_parts(const Composition& m, int j) {
    if (j < 0 || j > m.depth()) throw std::out_of_range("prefix: index out of range");
    return {m.parts().begin(), m.parts().begin() + j};
}

// Reversed suffix (m_p,...,m_j) with j = p+1 allowed (empty).
inline std::vector<int> reversed_suffix_parts(const Composition& m, int j) {
    if (j < 1 || j > m.depth() + 1) throw std::out_of_range("suffix: index out of range");
    std::vector<int> out(m.parts().begin() + (j - 1), m.parts().end());
    std::reverse(out.begin(), out.end());
    return out;
}

enum class AugmentMode { plus, minus };

inline Composition augment(const Composition& m, AugmentMode mode) {
    std::vector<int> parts = m.parts();
    if (mode == AugmentMode::plus) {
        parts.back() += 1;
    } else {
        if (parts.back() <= 1) throw std::domain_error("augment: minus requires last part > 1");
        parts.back() -= 1;
    }
    return Composition(std::move(parts));
}

// |m~|_j = m_1 + ... + m_j - j.
inline int weight_tilde(const Composition& m, int j) {
    if (j < 1 || j > m.depth()) throw std::out_of_range("weight_tilde: index out of range");
    int s = 0;
    for (int i = 0; i < j; ++i) s += m.parts()[static_cast<std::size_t>(i)];
    return s - j;
}

// All 2^length vectors over {+1,-1}, lexicographic with +1 before -1.
inline std::vector<std::vector<int>> enumerate_sign_vectors(int length) {
    if (length < 0) throw std::invalid_argument("sign vectors: negative length");
    if (length > 24) throw std::invalid_argument("sign vectors: length too large");
    std::vector<std::vector<int>> out;
    out.reserve(std::size_t(1) << length);
    for (std::uint64_t c = 0; c < (std::uint64_t(1) << length); ++c) {
        std::vector<int> v(static_cast<std::size_t>(length));
        for (int j = 0; j < length; ++j)
            v[static_cast<std::size_t>(j)] = (c >> (length - 1 - j)) & 1 ? -1 : +1;
        out.push_back(std::move(v));
    }
    return out;
}

// Integer-coefficient linear combination of compositions. Terms stay
// normalized: sorted by parts, merged, zero coefficients dropped. The empty
// composition (identity element) is representable as an empty parts vector.
class FormalSum {
public:
    using Term = std::pair<long long, std::vector<int>>;

    FormalSum() = default;

    static FormalSum single(std::vector<int> parts, long long coeff = 1) {
        FormalSum s;
        s.add(coeff, std::move(parts));
        s.normalize();
        return s;
    }

    void add(long long coeff, std::vector<int> parts) {
        terms_.emplace_back(coeff, std::move(parts));
    }

    void normalize() {
        std::map<std::vector<int>, long long> acc;
        for (auto& [c, p] : terms_) acc[p] += c;
        terms_.clear();
        for (auto& [p, c] : acc)
            if (c != 0) terms_.emplace_back(c, p);
    }

    const std::vector<Term>& terms() const { return terms_; }

    friend bool operator==(const FormalSum& a, const FormalSum& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [c, p] : terms_) {
            if (!first) os << " + ";
            first = false;
            if (c != 1) os << c << "*";
            os << "(";
            for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
            os << ")";
        }
        return os.str();
    }

private:
    std::vector<Term> terms_;
};

namespace detail {
inline void quasi_shuffle_rec(std::span<const int> a, std::span<const int> b,
                              std::vector<int>& head, FormalSum& out) {
    if (a.empty()) {
        std::vector<int> t = head;
        t.insert(t.end(), b.begin(), b.end());
        out.add(1, std::move(t));
        return;
    }
    if (b.empty()) {
        std::vector<int> t = head;
        t.insert(t.end(), a.begin(), a.end());
        out.add(1, std::move(t));
        return;
    }
    head.push_back(a[0]);
    quasi_shuffle_rec(a.subspan(1), b, head, out);
    head.back() = b[0];
    quasi_shuffle_rec(a, b.subspan(1), head, out);
    head.back() = a[0] + b[0];
    quasi_shuffle_rec(a.subspan(1), b.subspan(1), head, out);
    head.pop_back();
}
}  // namespace detail

// Stuffle product: zeta_n(a) * zeta_n(b) = sum of coefficients * zeta_n(term)
// for every n (strict sums). Either operand may be empty (identity).
inline FormalSum quasi_shuffle(std::span<const int> a, std::span<const int> b) {
    FormalSum out;
    std::vector<int> head;
    detail::quasi_shuffle_rec(a, b, head, out);
    out.normalize();
    return out;
}

inline FormalSum quasi_shuffle(const Composition& a, const Composition& b) {
    return quasi_shuffle(std::span<const int>(a.parts()), std::span<const int>(b.parts()));
}

}  // namespace eazeta
