#pragma once

// Scalar types used throughout: extended-precision binary floats for all
// engine arithmetic, exact rationals for combinatorial coefficients, and a
// minimal complex type that works with either.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace eazeta {

using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<40>>;
// Wide variant for higher-precision cross-checks (double the working digits).
using WideReal = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<80>>;

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

template <class R>
R rational_to(const Rational& q) {
    return R(boost::multiprecision::numerator(q)) / R(boost::multiprecision::denominator(q));
}

// Minimal complex value type. std::complex is only specified for the builtin
// floating types, so multiprecision scalars get this instead.
template <class R>
struct Cplx {
    R re{};
    R im{};

    Cplx() = default;
    Cplx(R r) : re(std::move(r)) {}
    Cplx(R r, R i) : re(std::move(r)), im(std::move(i)) {}
    explicit Cplx(int r) : re(r) {}

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator*(const Cplx& a, const R& s) { return {a.re * s, a.im * s}; }
    friend Cplx operator*(const R& s, const Cplx& a) { return a * s; }
    friend Cplx operator/(const Cplx& a, const R& s) { return {a.re / s, a.im / s}; }
    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        R d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Cplx& operator+=(const Cplx& b) { re += b.re; im += b.im; return *this; }
    Cplx& operator-=(const Cplx& b) { re -= b.re; im -= b.im; return *this; }
    Cplx& operator*=(const Cplx& b) { *this = *this * b; return *this; }
    Cplx& operator*=(const R& s) { re *= s; im *= s; return *this; }
    Cplx& operator/=(const R& s) { re /= s; im /= s; return *this; }

    friend bool operator==(const Cplx& a, const Cplx& b) { return a.re == b.re && a.im == b.im; }
};

template <class R>
Cplx<R> conj(const Cplx<R>& z) { return {z.re, -z.im}; }

template <class R>
R abs(const Cplx<R>& z) {
    using std::sqrt;
    if (z.im == 0) return z.re < 0 ? R(-z.re) : z.re;
    if (z.re == 0) return z.im < 0 ? R(-z.im) : z.im;
    return sqrt(z.re * z.re + z.im * z.im);
}

template <class R>
R pi_value() { return boost::math::constants::pi<R>(); }

template <class R>
std::string real_str(const R& x, int digits = std::numeric_limits<R>::digits10) {
    return x.str(digits);
}

template <class R>
std::string cplx_str(const Cplx<R>& z, int digits = std::numeric_limits<R>::digits10) {
    if (z.im == 0) return real_str(z.re, digits);
    std::ostringstream os;
    os << real_str(z.re, digits) << (z.im < 0 ? " - " : " + ")
       << real_str(z.im < 0 ? R(-z.im) : z.im, digits) << "i";
    return os.str();
}

template <class R>
std::ostream& operator<<(std::ostream& os, const Cplx<R>& z) {
    return os << cplx_str(z);
}

}  // namespace eazeta
