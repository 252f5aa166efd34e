#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace kbonacci {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational scalar, always stored reduced with a
/// positive denominator. Every quantity in this library is a Rational;
/// there is no floating-point path anywhere.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = Backend(num, den);
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "a" or "a/b" with an optional leading minus sign.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    /// Renders "a" when the value is integral, "a/b" otherwise.
    std::string str() const {
        BigInt d = denominator();
        std::string s = numerator().str();
        if (d != 1) s += "/" + d.str();
        return s;
    }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    /// Integer power; negative exponents invert (throws on 0^negative).
    Rational pow(long long e) const;

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    using Backend = boost::multiprecision::cpp_rational;
    Backend v_;
};

inline Rational Rational::pow(long long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("Rational: 0 raised to a negative power");
        return Rational(0);
    }
    unsigned long long a = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                                 : static_cast<unsigned long long>(e);
    BigInt pn = boost::multiprecision::pow(numerator(), static_cast<unsigned>(a));
    BigInt pd = boost::multiprecision::pow(denominator(), static_cast<unsigned>(a));
    return e < 0 ? Rational(pd, pn) : Rational(pn, pd);
}

inline Rational Rational::parse(std::string_view text) {
    auto bad = [&] {
        return std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    };
    auto scan_digits = [&](std::string_view s) {
        if (s.empty()) throw bad();
        for (char c : s)
            if (c < '0' || c > '9') throw bad();
        return BigInt(std::string(s));
    };
    std::string_view rest = text;
    bool neg = false;
    if (!rest.empty() && rest.front() == '-') {
        neg = true;
        rest.remove_prefix(1);
    }
    BigInt num, den = 1;
    auto slash = rest.find('/');
    if (slash == std::string_view::npos) {
        num = scan_digits(rest);
    } else {
        num = scan_digits(rest.substr(0, slash));
        den = scan_digits(rest.substr(slash + 1));
        if (den == 0) throw std::domain_error("Rational: zero denominator in '" + std::string(text) + "'");
    }
    if (neg) num = -num;
    return Rational(num, den);
}

/// Exact binomial coefficient; 0 when k < 0 or k > n.
inline BigInt integer_binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace kbonacci
