#ifndef RS_POLYNOMIAL_HPP
#define RS_POLYNOMIAL_HPP

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "rs/rational.hpp"

namespace rs {

/// A monomial in named scalar indeterminates: name -> positive exponent.
using Monomial = std::map<std::string, int>;

/// Sparse multivariate polynomial with rational coefficients over named
/// scalars (phi, dphi1.., c, c1, c2, g, a, ...). This is the coefficient ring
/// for tree polynomials and for renormalisation characters, so that all the
/// worked identities are checked symbolically.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(Rational c) {
        if (!c.is_zero()) terms_[Monomial{}] = c;
    }
    Polynomial(std::int64_t c) : Polynomial(Rational(c)) {}

    static Polynomial variable(const std::string& name, int power = 1) {
        Polynomial p;
        if (power < 0) throw std::invalid_argument("Polynomial: negative power");
        if (power == 0) return Polynomial(Rational(1));
        p.terms_[Monomial{{name, power}}] = Rational(1);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::domain_error("Polynomial: not a constant");
        return terms_.begin()->second;
    }
    bool depends_on(const std::string& name) const {
        for (const auto& [m, c] : terms_)
            if (m.count(name)) return true;
        return false;
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    Polynomial operator-() const {
        Polynomial r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (const auto& [name, e] : mb) m[name] += e;
                r.add_term(m, ca * cb);
            }
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        return compare(a, b) < 0;
    }

    static int compare(const Polynomial& a, const Polynomial& b) {
        if (a.terms_ < b.terms_) return -1;
        if (b.terms_ < a.terms_) return 1;
        return 0;
    }

    /// Replaces every occurrence of `name` by `value`.
    Polynomial substitute(const std::string& name, const Polynomial& value) const {
        Polynomial r;
        for (const auto& [m, c] : terms_) {
            Polynomial term(c);
            for (const auto& [n, e] : m) {
                Polynomial base = n == name ? value : variable(n);
                for (int i = 0; i < e; ++i) term *= base;
            }
            r += term;
        }
        return r;
    }

    /// Deterministic rendering, e.g. "3*c1 - 9*c2", "c + 3*c1", "-1/2*phi^3".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            Rational mag = abs(c);
            if (out.empty())
                out += c.sign() < 0 ? "-" : "";
            else
                out += c.sign() < 0 ? " - " : " + ";
            std::string vars;
            for (const auto& [name, e] : m) {
                if (!vars.empty()) vars += "*";
                vars += name;
                if (e != 1) vars += "^" + std::to_string(e);
            }
            if (vars.empty())
                out += mag.str();
            else if (mag == Rational(1))
                out += vars;
            else
                out += mag.str() + "*" + vars;
        }
        return out;
    }

    static Polynomial parse(const std::string& text);

  private:
    void add_term(const Monomial& m, const Rational& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[m] = c;
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::map<Monomial, Rational> terms_;
};

namespace detail {

/// Recursive-descent parser for polynomial expressions: +, -, *, ^, parens,
/// rationals "p/q" and identifiers.
class PolyParser {
  public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

  private:
    Polynomial expr() {
        Polynomial p = term();
        while (true) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                p += term();
            } else if (peek() == '-') {
                ++pos_;
                p -= term();
            } else {
                return p;
            }
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                p *= factor();
            } else {
                return p;
            }
        }
    }

    Polynomial factor() {
        Polynomial base = primary();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == start) fail("expected exponent");
            int e = std::stoi(s_.substr(start, pos_ - start));
            Polynomial r(Rational(1));
            for (int i = 0; i < e; ++i) r *= base;
            return r;
        }
        return base;
    }

    Polynomial primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
                ++pos_;
            return Polynomial(Rational::parse(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return Polynomial::variable(s_.substr(start, pos_ - start));
        }
        fail("unexpected character");
        return {};
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("Polynomial: " + what + " at position " +
                                    std::to_string(pos_) + " in '" + s_ + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial Polynomial::parse(const std::string& text) {
    return detail::PolyParser(text).parse();
}

} // namespace rs

#endif
