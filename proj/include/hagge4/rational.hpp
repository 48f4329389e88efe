#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational scalar.
 *
 * The only scalar type used by the geometry core. Always canonical:
 * gcd(|num|, den) = 1, den > 0, zero is 0/1. Canonical form makes
 * equality a plain field comparison, which is what the zero-tolerance
 * checks elsewhere rely on.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "hagge4/errors.hpp"

namespace hagge {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    // canonicalize(num, den); throws ZeroDenominator.
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational inverse() const {
        if (num_ == 0)
            throw DivisionByZero("inverse of zero");
        Rational r;
        if (num_ < 0) {
            r.num_ = -den_;
            r.den_ = -num_;
        } else {
            r.num_ = den_;
            r.den_ = num_;
        }
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw DivisionByZero();
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    // Canonical form makes this exact field equality.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    // Total order consistent with the reals: cross-multiply, dens > 0.
    int compare(const Rational& o) const {
        BigInt lhs = num_ * o.den_;
        BigInt rhs = o.num_ * den_;
        return lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
    }

    friend bool operator<(const Rational& a, const Rational& b) { return a.compare(b) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.compare(b) > 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.compare(b) <= 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.compare(b) >= 0; }

    /// Renders in the textual grammar: "num" or "num/den".
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    /// Parses "[-]digits", "[-]digits/digits" or "[-]digits.digits".
    static Rational parse(std::string_view text);

    // Lossy; used only when emitting figures.
    double to_double() const {
        boost::multiprecision::cpp_rational q(num_, den_);
        return q.convert_to<double>();
    }

private:
    void canonicalize() {
        if (den_ == 0)
            throw ZeroDenominator();
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

inline Rational Rational::parse(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && rest.front() == '-') {
        negative = true;
        rest.remove_prefix(1);
    }
    auto take_digits = [&rest, text]() -> std::string {
        std::size_t n = 0;
        while (n < rest.size() && rest[n] >= '0' && rest[n] <= '9')
            ++n;
        if (n == 0)
            throw ParseError("not a rational literal: \"" + std::string(text) + "\"");
        std::string digits(rest.substr(0, n));
        rest.remove_prefix(n);
        return digits;
    };

    std::string int_part = take_digits();
    BigInt num(int_part);
    BigInt den = 1;
    if (!rest.empty() && rest.front() == '/') {
        rest.remove_prefix(1);
        den = BigInt(take_digits());
    } else if (!rest.empty() && rest.front() == '.') {
        rest.remove_prefix(1);
        std::string frac = take_digits();
        for (char ch : frac) {
            num = num * 10 + (ch - '0');
            den *= 10;
        }
    }
    if (!rest.empty())
        throw ParseError("not a rational literal: \"" + std::string(text) + "\"");
    if (negative)
        num = -num;
    return Rational(std::move(num), std::move(den));
}

} // namespace hagge
