#ifndef LAXKIT_SCALAR_HPP
#define LAXKIT_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace laxkit {

using Rat = boost::multiprecision::cpp_rational;

/// Exact scalar over Q[i]: a pair of arbitrary-precision rationals.
/// Purely rational values keep im == 0; all arithmetic is exact.
struct Scalar {
    Rat re;
    Rat im;

    Scalar() : re(0), im(0) {}
    Scalar(long v) : re(v), im(0) {}
    Scalar(const Rat& r) : re(r), im(0) {}
    Scalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar i() { return Scalar(Rat(0), Rat(1)); }
    static Scalar frac(long p, long q) {
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Scalar(Rat(p) / q);
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return Scalar(re, -im); }

    Scalar operator-() const { return Scalar(-re, -im); }
    Scalar operator+(const Scalar& o) const { return Scalar(re + o.re, im + o.im); }
    Scalar operator-(const Scalar& o) const { return Scalar(re - o.re, im - o.im); }
    Scalar operator*(const Scalar& o) const {
        return Scalar(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    Scalar operator/(const Scalar& o) const {
        Rat d = o.re * o.re + o.im * o.im;
        if (d == 0) throw std::domain_error("division by zero scalar");
        return Scalar((re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d);
    }
    Scalar& operator+=(const Scalar& o) { re += o.re; im += o.im; return *this; }
    Scalar& operator-=(const Scalar& o) { re -= o.re; im -= o.im; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    bool operator==(const Scalar& o) const { return re == o.re && im == o.im; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Double approximation; used only by the numerical integrator.
    double to_double() const {
        if (im != 0) throw std::domain_error("complex scalar has no double value");
        return static_cast<double>(re);
    }
};

inline Scalar operator*(long k, const Scalar& s) { return Scalar(k) * s; }

namespace detail {

inline std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(boost::multiprecision::cpp_int(s));
        boost::multiprecision::cpp_int num(s.substr(0, slash));
        boost::multiprecision::cpp_int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    }
}

} // namespace detail

/// Renders "p/q" (denominator omitted when 1) or "p/q+r/s i".
inline std::string to_string(const Scalar& s) {
    if (s.im == 0) return detail::rat_str(s.re);
    std::string out = detail::rat_str(s.re);
    out += (s.im > 0) ? "+" : "-";
    Rat a = s.im > 0 ? s.im : Rat(-s.im);
    out += detail::rat_str(a) + " i";
    return out;
}

/// Parses "p/q" or "p/q+r/s i" (also "-p/q-r/s i", "r/s i").
inline Scalar parse_scalar(std::string s) {
    // strip spaces except keep track of trailing i
    std::string t;
    bool has_i = false;
    for (char c : s) {
        if (c == ' ' || c == '\t') continue;
        t += c;
    }
    if (!t.empty() && (t.back() == 'i' || t.back() == 'I')) {
        has_i = true;
        t.pop_back();
    }
    if (t.empty()) {
        if (has_i) return Scalar::i();
        throw std::invalid_argument("empty scalar literal");
    }
    if (!has_i) return Scalar(detail::parse_rat(t));
    // pure-imaginary or re+im form: find split sign after position 0
    for (size_t p = t.size(); p-- > 1;) {
        if (t[p] == '+' || t[p] == '-') {
            std::string imp = t.substr(p);
            if (imp == "+" ) imp = "1";
            else if (imp == "-") imp = "-1";
            else if (imp[0] == '+') imp = imp.substr(1);
            return Scalar(detail::parse_rat(t.substr(0, p)), detail::parse_rat(imp));
        }
    }
    if (t == "+") return Scalar::i();
    if (t == "-") return -Scalar::i();
    return Scalar(Rat(0), detail::parse_rat(t));
}

} // namespace laxkit

#endif
