#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace overhang {

/// Exact arbitrary-precision rational, kept in canonical form:
/// gcd(|numerator|, denominator) = 1 and denominator > 0. All geometry,
/// forces and masses in this library are carried as Rational; no floating
/// point ever enters a verdict.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const mpz_class& n) : v_(n) {}
    Rational(double) = delete; // inexact by construction

    Rational(long num, long den) : v_(num, den) { canonicalize_checked(); }
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        canonicalize_checked();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) {
        // mpq_class arithmetic results are canonical; raw construction may
        // not be.
        canonicalize_checked();
    }

    /// Accepts "p/q", a plain integer, or a decimal like "-3.25" (converted
    /// exactly). Returns nullopt on malformed input.
    static std::optional<Rational> parse(std::string_view text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    /// "p/q" when the denominator is not 1, otherwise just "p".
    std::string str() const { return v_.get_str(); }

    /// Decimal string with exactly `digits` fractional digits, rounding
    /// half away from zero. Used only for presentation (SVG); data files
    /// stay exact.
    std::string fixed(unsigned digits) const;

    friend Rational operator+(const Rational& a, const Rational& b) {
        return wrap(a.v_ + b.v_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return wrap(a.v_ - b.v_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return wrap(a.v_ * b.v_);
    }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return wrap(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.v_ == b.v_;
    }
    friend std::strong_ordering operator<=>(const Rational& a,
                                            const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    static Rational wrap(mpq_class q) {
        Rational r;
        r.v_ = std::move(q); // already canonical
        return r;
    }
    void canonicalize_checked();

    mpq_class v_;
};

inline void Rational::canonicalize_checked() {
    if (v_.get_den() == 0)
        throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

inline Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero())
        throw std::domain_error("rational division by zero");
    return Rational::wrap(a.v_ / b.v_);
}

inline std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty())
        return std::nullopt;
    if (text.find_first_not_of("0123456789+-./") != std::string_view::npos)
        return std::nullopt; // mpz_set_str would skip whitespace silently
    std::string s(text);
    auto parse_int = [](const std::string& t) -> std::optional<mpz_class> {
        if (t.empty() || t == "-" || t == "+")
            return std::nullopt;
        mpz_class z;
        if (mpz_set_str(z.get_mpz_t(), t.c_str(), 10) != 0)
            return std::nullopt;
        return z;
    };
    if (auto slash = s.find('/'); slash != std::string::npos) {
        auto num = parse_int(s.substr(0, slash));
        auto den = parse_int(s.substr(slash + 1));
        if (!num || !den || *den == 0)
            return std::nullopt;
        return Rational(*num, *den);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        bool neg = !head.empty() && head[0] == '-';
        if (!head.empty() && (head[0] == '-' || head[0] == '+'))
            head.erase(0, 1);
        if (tail.empty() || tail.find_first_not_of("0123456789") !=
                                std::string::npos)
            return std::nullopt;
        if (head.empty())
            head = "0";
        auto ip = parse_int(head);
        auto fp = parse_int(tail);
        if (!ip || !fp || *ip < 0)
            return std::nullopt;
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, tail.size());
        mpz_class num = *ip * scale + *fp;
        if (neg)
            num = -num;
        return Rational(num, scale);
    }
    auto z = parse_int(s);
    if (!z)
        return std::nullopt;
    return Rational(*z);
}

inline std::string Rational::fixed(unsigned digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class t = num() * scale;
    bool neg = t < 0;
    mpz_class mag = ::abs(t), q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), mag.get_mpz_t(),
                den().get_mpz_t());
    if (2 * r >= den())
        ++q;
    mpz_class ipart = q / scale, fpart = q % scale;
    std::string out;
    if (neg && q != 0)
        out += '-';
    out += ipart.get_str();
    if (digits > 0) {
        std::string frac = fpart.get_str();
        if (frac.size() < digits)
            frac.insert(0, digits - frac.size(), '0');
        out += '.';
        out += frac;
    }
    return out;
}

} // namespace overhang
