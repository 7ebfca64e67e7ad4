#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace slcs {

// Exact fraction over int64 in lowest terms with a positive denominator.
// Arithmetic that overflows int64 throws slcs::Error.
class Rational {
public:
    Rational(long long num = 0, long long den = 1);

    long long numerator() const { return num_; }
    long long denominator() const { return den_; }

    friend Rational operator+(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x, const Rational& y);
    friend Rational operator*(const Rational& x, const Rational& y);
    friend Rational operator/(const Rational& x, const Rational& y);
    Rational operator-() const;
    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend bool operator==(const Rational& x, const Rational& y) { return x.num_ == y.num_ && x.den_ == y.den_; }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

private:
    long long num_, den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Accepts "p", "p/q" and decimals such as "-0.5".
Rational parse_rational(std::string_view s);
// "p" or "p/q" in lowest terms.
std::string to_string(const Rational& r);

}  // namespace slcs
