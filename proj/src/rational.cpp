#include "slcs/rational.hpp"
#include "slcs/index.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

namespace slcs {

namespace {

using Wide = __int128;

long long narrow(Wide v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw Error("rational overflow");
    return static_cast<long long>(v);
}

Rational make(Wide num, Wide den) {
    if (den == 0) throw Error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Wide a = num < 0 ? -num : num, b = den;
    while (b != 0) {
        Wide r = a % b;
        a = b;
        b = r;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return Rational(narrow(num), narrow(den));
}

long long parse_int(std::string_view s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) throw Error("bad number: " + std::string(s));
    return v;
}

}  // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
    if (den == 0) throw Error("zero denominator");
    if (den < 0) {
        if (num == std::numeric_limits<long long>::min() || den == std::numeric_limits<long long>::min())
            throw Error("rational overflow");
        num_ = -num;
        den_ = -den;
    }
    long long g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational operator+(const Rational& x, const Rational& y) {
    return make(Wide(x.num_) * y.den_ + Wide(y.num_) * x.den_, Wide(x.den_) * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) {
    return make(Wide(x.num_) * y.den_ - Wide(y.num_) * x.den_, Wide(x.den_) * y.den_);
}

Rational operator*(const Rational& x, const Rational& y) { return make(Wide(x.num_) * y.num_, Wide(x.den_) * y.den_); }

Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw Error("division by zero");
    return make(Wide(x.num_) * y.den_, Wide(x.den_) * y.num_);
}

Rational Rational::operator-() const { return make(-Wide(num_), den_); }

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    return Wide(x.num_) * y.den_ <=> Wide(y.num_) * x.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << to_string(r); }

Rational parse_rational(std::string_view s) {
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        long long q = parse_int(s.substr(slash + 1));
        if (q == 0) throw Error("zero denominator");
        return Rational(parse_int(s.substr(0, slash)), q);
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view frac = s.substr(dot + 1);
        if (frac.size() > 17 || frac.empty()) throw Error("bad number: " + std::string(s));
        std::string_view whole = s.substr(0, dot);
        bool neg = !whole.empty() && whole.front() == '-';
        if (neg || (!whole.empty() && whole.front() == '+')) whole.remove_prefix(1);
        if (frac.front() == '-' || frac.front() == '+') throw Error("bad number: " + std::string(s));
        long long scale = 1;
        for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
        Rational r = Rational(whole.empty() ? 0 : parse_int(whole)) + Rational(parse_int(frac), scale);
        return neg ? -r : r;
    }
    return Rational(parse_int(s));
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace slcs
