#ifndef RS_DEGREE_HPP
#define RS_DEGREE_HPP

#include <cctype>
#include <stdexcept>
#include <string>

#include "rs/rational.hpp"

namespace rs {

/// A symbol degree: the affine form a + b*k where k is a positive
/// infinitesimal. Comparison is the k->0+ limit order, i.e. lexicographic in
/// (a, b). Keeping the infinitesimal symbolic makes negativity and
/// subcriticality tests exact; no floats are ever involved.
struct Degree {
    Rational const_part{};
    Rational kappa_part{};

    Degree() = default;
    Degree(Rational c, Rational k) : const_part(c), kappa_part(k) {}
    explicit Degree(Rational c) : const_part(c) {}
    explicit Degree(std::int64_t c) : const_part(c) {}

    friend Degree operator+(const Degree& a, const Degree& b) {
        return {a.const_part + b.const_part, a.kappa_part + b.kappa_part};
    }
    friend Degree operator-(const Degree& a, const Degree& b) {
        return {a.const_part - b.const_part, a.kappa_part - b.kappa_part};
    }
    Degree operator-() const { return {-const_part, -kappa_part}; }
    Degree& operator+=(const Degree& o) { return *this = *this + o; }
    Degree& operator-=(const Degree& o) { return *this = *this - o; }

    friend Degree operator*(const Rational& s, const Degree& d) {
        return {s * d.const_part, s * d.kappa_part};
    }

    friend bool operator==(const Degree& a, const Degree& b) {
        return a.const_part == b.const_part && a.kappa_part == b.kappa_part;
    }
    friend bool operator!=(const Degree& a, const Degree& b) { return !(a == b); }
    friend bool operator<(const Degree& a, const Degree& b) {
        if (a.const_part != b.const_part) return a.const_part < b.const_part;
        return a.kappa_part < b.kappa_part;
    }
    friend bool operator>(const Degree& a, const Degree& b) { return b < a; }
    friend bool operator<=(const Degree& a, const Degree& b) { return !(b < a); }
    friend bool operator>=(const Degree& a, const Degree& b) { return !(a < b); }

    bool is_zero() const { return const_part.is_zero() && kappa_part.is_zero(); }
    bool is_negative() const { return *this < Degree{}; }
    bool is_positive() const { return Degree{} < *this; }

    double eval(double kappa) const { return const_part.to_double() + kappa_part.to_double() * kappa; }

    /// "a + bk" with the kappa symbol written as a bare k, e.g.
    /// "0 - 4k", "-1/2 - k", "2".
    std::string str() const {
        std::string s = const_part.str();
        if (kappa_part.is_zero()) return s;
        Rational b = kappa_part;
        s += b.sign() < 0 ? " - " : " + ";
        Rational m = abs(b);
        if (m != Rational(1)) s += m.str();
        s += "k";
        return s;
    }

    /// Inverse of str(); also accepts the spacing-free form "-1-2k".
    static Degree parse(const std::string& text);
};

inline Degree Degree::parse(const std::string& text) {
    // Tokenless scan: a sequence of signed terms, each "q", "qk" or "k".
    Degree out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("Degree: empty string");
    bool any = false;
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        int sgn = 1;
        if (text[i] == '+' || text[i] == '-') {
            sgn = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (any) {
            throw std::invalid_argument("Degree: expected sign in '" + text + "'");
        }
        std::size_t start = i;
        while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
        Rational mag(1);
        bool have_num = i > start;
        if (have_num) mag = Rational::parse(text.substr(start, i - start));
        skip_ws();
        bool is_kappa = i < text.size() && text[i] == 'k';
        if (is_kappa) ++i;
        if (!have_num && !is_kappa)
            throw std::invalid_argument("Degree: cannot parse '" + text + "'");
        Rational signed_mag = sgn < 0 ? -mag : mag;
        if (is_kappa)
            out.kappa_part += signed_mag;
        else
            out.const_part += signed_mag;
        any = true;
    }
    if (!any) throw std::invalid_argument("Degree: cannot parse '" + text + "'");
    return out;
}

} // namespace rs

#endif
